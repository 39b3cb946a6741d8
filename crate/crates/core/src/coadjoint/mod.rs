//! Circle actions on coadjoint orbits of `SU(n)`.
//!
//! An orbit is given by a weakly decreasing spectrum `r₁ ≥ … ≥ r_n`; equal
//! values form blocks, and the fixed points of a regular circle action are
//! indexed by ordered set partitions of `{0, …, n−1}` into blocks of those
//! sizes. The circle is generated by `X = i·diag(a)` with integer, trace-zero `a`.

mod decide;
mod sum;

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::equivalence::Verdict;
use crate::expsum::ExpSumError;
use crate::localization::LocalizationError;
use crate::numeric::Rational;

pub use decide::{
    cpn_decide, flag_necessary, grassmann_necessary, orbit_value_tests, weyl_orbit_test, OrbitValueReport,
};
pub use sum::{
    enumerate_cosets, fixed_point_weights, kappa_orbit, orbit_fixed_points, s_class_orbit, s_class_orbit_with,
    unnormalized_orbit_sum, Coset, CosetPoint,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoadjointError {
    #[error("invalid orbit: {0}")]
    InvalidSpec(String),
    #[error("vector {0:?} is not trace-zero")]
    NotTraceZero(Vec<i64>),
    #[error("vector has {got} entries, orbit has n = {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("zero vector")]
    ZeroVector,
    #[error("weight a_i - a_j vanishes at coset {0}")]
    DegenerateWeight(String),
    #[error("vector {0:?} is not regular")]
    NonRegular(Vec<i64>),
    #[error("orbit blocks {got:?} are not {expected}")]
    WrongBlocks { expected: String, got: Vec<usize> },
    #[error("volume coefficient is not positive: {0}")]
    NonPositiveVolume(Rational),
    #[error("decision disagrees with invariant comparison: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Localization(#[from] LocalizationError),
    #[error(transparent)]
    ExpSum(#[from] ExpSumError),
}

/// A coadjoint orbit of `SU(n)` by its spectrum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawOrbit", into = "RawOrbit")]
pub struct OrbitSpec {
    spectrum: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct RawOrbit {
    n: usize,
    spectrum: Vec<Rational>,
}

impl TryFrom<RawOrbit> for OrbitSpec {
    type Error = CoadjointError;
    fn try_from(r: RawOrbit) -> Result<Self, Self::Error> {
        if r.spectrum.len() != r.n {
            return Err(CoadjointError::InvalidSpec(format!(
                "spectrum has {} entries, n = {}",
                r.spectrum.len(),
                r.n
            )));
        }
        OrbitSpec::new(r.spectrum)
    }
}

impl From<OrbitSpec> for RawOrbit {
    fn from(s: OrbitSpec) -> Self {
        RawOrbit { n: s.spectrum.len(), spectrum: s.spectrum }
    }
}

impl OrbitSpec {
    pub fn new(spectrum: Vec<Rational>) -> Result<Self, CoadjointError> {
        if spectrum.len() < 2 {
            return Err(CoadjointError::InvalidSpec("n must be at least 2".into()));
        }
        if spectrum.windows(2).any(|w| w[0] < w[1]) {
            return Err(CoadjointError::InvalidSpec("spectrum must be weakly decreasing".into()));
        }
        if spectrum.first() == spectrum.last() {
            return Err(CoadjointError::InvalidSpec("spectrum needs two distinct values".into()));
        }
        Ok(OrbitSpec { spectrum })
    }

    /// `(r, 0, …, 0)`: the orbit `ℂPⁿ⁻¹` scaled by `r > 0`.
    pub fn projective(n: usize, r: Rational) -> Result<Self, CoadjointError> {
        let mut s = vec![Rational::zero(); n];
        if n > 0 {
            s[0] = r;
        }
        Self::new(s)
    }

    pub fn n(&self) -> usize {
        self.spectrum.len()
    }

    pub fn spectrum(&self) -> &[Rational] {
        &self.spectrum
    }

    /// Multiplicities of equal spectrum values, in spectrum order.
    pub fn blocks(&self) -> Vec<usize> {
        self.spectrum.iter().dedup_with_count().map(|(c, _)| c).collect()
    }

    /// Distinct spectrum values, decreasing.
    pub fn block_values(&self) -> Vec<Rational> {
        self.spectrum.iter().dedup().cloned().collect()
    }

    /// Complex dimension: the number of positive roots of the orbit.
    pub fn complex_dim(&self) -> usize {
        let b = self.blocks();
        let n = self.n();
        (n * n - b.iter().map(|m| m * m).sum::<usize>()) / 2
    }
}

impl fmt::Display for OrbitSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.spectrum.iter().join(", "))
    }
}

/// `a` with `X = i·diag(a)`, trace zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct SuVector {
    a: Vec<i64>,
}

impl TryFrom<Vec<i64>> for SuVector {
    type Error = CoadjointError;
    fn try_from(a: Vec<i64>) -> Result<Self, Self::Error> {
        SuVector::new(a)
    }
}

impl From<SuVector> for Vec<i64> {
    fn from(v: SuVector) -> Self {
        v.a
    }
}

impl SuVector {
    pub fn new(a: Vec<i64>) -> Result<Self, CoadjointError> {
        if a.iter().sum::<i64>() != 0 {
            return Err(CoadjointError::NotTraceZero(a));
        }
        Ok(SuVector { a })
    }

    pub fn entries(&self) -> &[i64] {
        &self.a
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|&x| x == 0)
    }

    /// All entries distinct.
    pub fn is_regular(&self) -> bool {
        self.a.iter().all_unique()
    }

    /// `(a_{p(0)}, …, a_{p(n−1)})`.
    pub fn permute(&self, p: &[usize]) -> SuVector {
        SuVector { a: p.iter().map(|&i| self.a[i]).collect() }
    }

    pub fn sorted(&self) -> Vec<i64> {
        let mut v = self.a.clone();
        v.sort_unstable();
        v
    }
}

impl fmt::Display for SuVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.a.iter().join(","))
    }
}

fn check_vector(spec: &OrbitSpec, x: &SuVector) -> Result<(), CoadjointError> {
    if x.len() != spec.n() {
        return Err(CoadjointError::DimensionMismatch { expected: spec.n(), got: x.len() });
    }
    if x.is_zero() {
        return Err(CoadjointError::ZeroVector);
    }
    Ok(())
}

fn require_regular(x: &SuVector) -> Result<(), CoadjointError> {
    if x.is_regular() {
        Ok(())
    } else {
        Err(CoadjointError::NonRegular(x.entries().to_vec()))
    }
}

fn verdict_log(v: Verdict, extra: &str) -> Verdict {
    let mut v = v;
    v.tests_run.push(extra.to_string());
    v
}
