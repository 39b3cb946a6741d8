//! Fixed-point sums with degenerate weights, evaluated as `ε → 0` limits.
//!
//! Each term is `e^{γu} e^{δε} / ∏ (w_i u + d_i ε)`. Factors with `w_i ≠ 0`
//! expand as geometric series in `ε`; factors with `w_i = 0` contribute a pole
//! `(d_i ε)^{-1}`. After summation every negative power of `ε` must cancel and
//! the `ε⁰` coefficient is the value of the regularized sum.

use thiserror::Error;

use crate::expsum::{Basis, ExpSum, ExpSumError, Frequency};
use crate::numeric::{series_mul, LaurentPoly, Rational, Scalar, SeriesError, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalizationError {
    #[error("probe {probe:?} is annihilated by a degenerate weight")]
    BadProbe { probe: Vec<i64> },
    #[error("no admissible probe found after {tried} attempts")]
    NoProbe { tried: usize },
    #[error("epsilon^{power} does not cancel: coefficient {coefficient}")]
    ResidueError { power: i32, coefficient: String },
    #[error("truncation order {given} is below the pole order {needed}")]
    InsufficientTruncation { needed: usize, given: usize },
    #[error("two probes gave different limits: {first} vs {second}")]
    ProbeDependence { first: String, second: String },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    ExpSum(#[from] ExpSumError),
}

/// One fixed-point term `e^{γu} e^{δε} / ∏ (w u + d ε)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalTerm<C: Scalar = Rational> {
    pub frequency: Frequency,
    pub probe_exponent: C,
    /// Pairs `(w, d)`: the `u`-weight and the probe pairing.
    pub weights: Vec<(i64, i64)>,
}

impl<C: Scalar> LocalTerm<C> {
    pub fn pole_order(&self) -> usize {
        self.weights.iter().filter(|(w, _)| *w == 0).count()
    }
}

fn r(x: i64) -> Rational {
    Rational::from_integer(x)
}

fn constant<C: Scalar>(basis: &Basis, c: C) -> ExpSum<C> {
    ExpSum::laurent(basis, LaurentPoly::constant(c))
}

/// `e^{δε}` through `ε^order`.
fn exp_series<C: Scalar>(basis: &Basis, delta: &C, order: usize) -> TruncatedSeries<C> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut power = C::one();
    for j in 0..=order {
        coeffs.push(constant(basis, power.mul(&C::from_rational(Rational::inv_factorial(j as u32)))));
        power = power.mul(delta);
    }
    TruncatedSeries::new(basis, 0, coeffs).expect("single basis")
}

/// `1/(w u + d ε)` with `order` coefficients past the leading one.
fn inverse_weight<C: Scalar>(basis: &Basis, w: i64, d: i64, order: usize) -> TruncatedSeries<C> {
    if w == 0 {
        let lead = constant(basis, C::from_rational(r(d).recip().expect("checked nonzero")));
        let mut coeffs = vec![lead];
        coeffs.extend((0..order).map(|_| ExpSum::zero(basis)));
        return TruncatedSeries::new(basis, -1, coeffs).expect("single basis");
    }
    // (wu)^{-1} Σ (−d/(wu))^k
    let coeffs = (0..=order)
        .map(|k| {
            let c = r(-d).pow(k as i32).expect("nonnegative power")
                / r(w).pow(k as i32 + 1).expect("nonzero weight");
            ExpSum::laurent(basis, LaurentPoly::monomial(C::from_rational(c), -(k as i32) - 1))
        })
        .collect();
    TruncatedSeries::new(basis, 0, coeffs).expect("single basis")
}

/// Expands one term as a series in `ε` with `order` coefficients past its leading power.
pub fn expand_term<C: Scalar>(
    basis: &Basis,
    term: &LocalTerm<C>,
    order: usize,
) -> Result<TruncatedSeries<C>, LocalizationError> {
    let head = ExpSum::term(term.frequency.clone(), LaurentPoly::one());
    let mut acc = exp_series(basis, &term.probe_exponent, order).scale(&head)?;
    for &(w, d) in &term.weights {
        acc = series_mul(&acc, &inverse_weight(basis, w, d, order))?;
    }
    Ok(acc)
}

/// The `ε⁰` coefficient of `Σ terms`, after checking that all poles cancel.
///
/// `truncation` is the number of coefficients kept past each term's leading
/// power; it must be at least the largest pole order.
pub fn epsilon_limit<C: Scalar>(
    basis: &Basis,
    terms: &[LocalTerm<C>],
    truncation: usize,
) -> Result<ExpSum<C>, LocalizationError> {
    let needed = terms.iter().map(LocalTerm::pole_order).max().unwrap_or(0);
    if truncation < needed {
        return Err(LocalizationError::InsufficientTruncation { needed, given: truncation });
    }
    for t in terms {
        if t.weights.iter().any(|&(w, d)| w == 0 && d == 0) {
            return Err(LocalizationError::BadProbe { probe: Vec::new() });
        }
    }
    let mut total: Option<TruncatedSeries<C>> = None;
    for t in terms {
        let s = expand_term(basis, t, truncation)?;
        total = Some(match total {
            None => s,
            Some(acc) => acc.add(&s)?,
        });
    }
    let Some(total) = total else {
        return Ok(ExpSum::zero(basis));
    };
    if let Some((power, c)) = total.negative_residues().into_iter().next() {
        return Err(LocalizationError::ResidueError { power, coefficient: c.to_text() });
    }
    Ok(total.coefficient(0).expect("truncation covers epsilon^0"))
}

/// Default relative truncation, overridable by the caller.
pub fn truncation_or_default(explicit: Option<usize>, dim: usize) -> usize {
    explicit.unwrap_or(dim + 1)
}

/// `(1, t, t², …)` of length `n`.
pub fn moment_curve_probe(n: usize, t: i64) -> Vec<i64> {
    let mut v = Vec::with_capacity(n);
    let mut p = 1i64;
    for _ in 0..n {
        v.push(p);
        p = p.saturating_mul(t);
    }
    v
}

/// Largest `t` tried when searching for an admissible probe.
pub const MAX_PROBE_ATTEMPTS: usize = 64;
