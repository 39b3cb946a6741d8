use equiloc_core::equivalence::EquivalenceError;
use equiloc_core::localization::LocalizationError;
use equiloc_core::{CoadjointError, Error, ExpSumError, PolytopeError, ToricError};
use thiserror::Error;

/// Failures reported by [`crate::run`], split by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed input or inconsistent flags; exit code 2.
    #[error("schema error: {0}")]
    Schema(String),
    /// Well-formed input that the mathematics rejects; exit code 3.
    #[error("{name}: {message}")]
    Math { name: String, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Schema(_) => 2,
            CliError::Math { .. } => 3,
        }
    }

    pub fn schema(msg: impl Into<String>) -> Self {
        CliError::Schema(msg.into())
    }

    pub(crate) fn json(path: &str, e: &serde_json::Error) -> Self {
        CliError::Schema(format!("{path}: line {}, column {}: {e}", e.line(), e.column()))
    }
}

fn variant<E: std::fmt::Debug>(e: &E) -> String {
    let s = format!("{e:?}");
    s.split(|c: char| !c.is_alphanumeric() && c != '_').next().unwrap_or_default().to_string()
}

fn expsum_name(e: &ExpSumError) -> String {
    format!("ExpSumError::{}", variant(e))
}

fn polytope_name(e: &PolytopeError) -> String {
    format!("PolytopeError::{}", variant(e))
}

fn localization_name(e: &LocalizationError) -> String {
    match e {
        LocalizationError::ExpSum(x) => expsum_name(x),
        other => format!("LocalizationError::{}", variant(other)),
    }
}

fn toric_name(e: &ToricError) -> String {
    match e {
        ToricError::Polytope(p) => polytope_name(p),
        ToricError::Localization(l) => localization_name(l),
        ToricError::ExpSum(x) => expsum_name(x),
        other => format!("ToricError::{}", variant(other)),
    }
}

/// `Module::Variant` of the innermost error.
pub fn error_name(e: &Error) -> String {
    match e {
        Error::Numeric(x) => format!("NumericError::{}", variant(x)),
        Error::ExpSum(x) => expsum_name(x),
        Error::Polytope(p) => polytope_name(p),
        Error::Localization(l) => localization_name(l),
        Error::Toric(t) => toric_name(t),
        Error::Equivalence(EquivalenceError::Toric(t)) => toric_name(t),
        Error::Equivalence(EquivalenceError::Polytope(p)) => polytope_name(p),
        Error::Equivalence(other) => format!("EquivalenceError::{}", variant(other)),
        Error::Coadjoint(CoadjointError::Localization(l)) => localization_name(l),
        Error::Coadjoint(CoadjointError::ExpSum(x)) => expsum_name(x),
        Error::Coadjoint(other) => format!("CoadjointError::{}", variant(other)),
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Math { name: error_name(&e), message: e.to_string() }
    }
}

macro_rules! via_core {
    ($($t:ty),*) => {
        $(impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                Error::from(e).into()
            }
        })*
    };
}

via_core!(ExpSumError, PolytopeError, LocalizationError, ToricError, EquivalenceError, CoadjointError);
