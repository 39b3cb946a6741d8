//! Exact scalars, Laurent polynomials in `u`, and truncated series in `ε`.

mod laurent;
mod rational;
mod scalar;
mod series;

use thiserror::Error;

pub use laurent::LaurentPoly;
pub use rational::Rational;
pub(crate) use scalar::latex_rational;
pub use scalar::{Scalar, SymPoly};
pub use series::{series_invert, series_mul, SeriesError, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational: {0}")]
    Parse(String),
}
