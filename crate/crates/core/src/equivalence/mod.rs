//! Decision procedures for circle actions on toric manifolds.
//!
//! Most tests here are necessary conditions: a failure proves the two actions
//! are not homotopic, a pass proves nothing. Only the complete decisions for
//! Hirzebruch surfaces, `S²×S²` with incommensurable areas, and the bundle
//! involution return `Equivalent`.

mod decide;
mod necessary;
mod polytopes;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polytope::PolytopeError;
use crate::toric::ToricError;

pub use decide::{
    hirzebruch_decide, hirzebruch_subtype, pl_equiv, s2xs2_conditions, s2xs2_decide, HirzebruchSubtype,
    S2xS2Conditions, S2xS2Mode,
};
pub use necessary::{centered_pairings, compare_s, reparam_test, type_test, vertex_multiset_test};
pub use polytopes::{polytope_tests, PolytopeComparison};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquivalenceError {
    #[error("vector {0} is not of Type(0)")]
    TypeNotZero(String),
    #[error("vector {0} has a zero component")]
    ZeroComponent(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A complete decision disagreed with the invariant it is supposed to match.
    #[error("decision disagrees with invariant comparison: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Toric(#[from] ToricError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Equivalent,
    NotEquivalent,
    InconclusiveNecessaryPassed,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Equivalent => "Equivalent",
            Status::NotEquivalent => "NotEquivalent",
            Status::InconclusiveNecessaryPassed => "InconclusiveNecessaryPassed",
        };
        f.write_str(s)
    }
}

/// Outcome of a decision procedure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<String>,
    pub tests_run: Vec<String>,
}

impl Verdict {
    pub fn equivalent(witness: impl Into<String>, test: &str) -> Self {
        Verdict { status: Status::Equivalent, witness: Some(witness.into()), tests_run: vec![test.to_string()] }
    }

    pub fn not_equivalent(witness: impl Into<String>, test: &str) -> Self {
        Verdict { status: Status::NotEquivalent, witness: Some(witness.into()), tests_run: vec![test.to_string()] }
    }

    pub fn inconclusive(witness: Option<String>, test: &str) -> Self {
        Verdict { status: Status::InconclusiveNecessaryPassed, witness, tests_run: vec![test.to_string()] }
    }

    pub fn is_equivalent(&self) -> bool {
        self.status == Status::Equivalent
    }

    pub fn is_not_equivalent(&self) -> bool {
        self.status == Status::NotEquivalent
    }

    /// Runs `next` unless this verdict is already decisive, accumulating the test log.
    pub fn then(self, next: impl FnOnce() -> Result<Verdict, EquivalenceError>) -> Result<Verdict, EquivalenceError> {
        if self.status != Status::InconclusiveNecessaryPassed {
            return Ok(self);
        }
        let mut v = next()?;
        let mut tests = self.tests_run;
        tests.append(&mut v.tests_run);
        v.tests_run = tests;
        if v.status == Status::InconclusiveNecessaryPassed && v.witness.is_none() {
            v.witness = self.witness;
        }
        Ok(v)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.status)?;
        if let Some(w) = &self.witness {
            write!(f, " [{w}]")?;
        }
        write!(f, " (tests: {})", self.tests_run.join(", "))
    }
}

#[cfg(test)]
mod tests;
