//! Complete decisions for Hirzebruch surfaces, `S²×S²` and the bundle involution.

use serde::{Deserialize, Serialize};

use super::{EquivalenceError, Verdict};
use crate::expsum::exp_sum_equal;
use crate::numeric::Rational;
use crate::polytope::{build_model, LatticeVector, ModelKind, ParametricModel, ParametricPolytope};
use crate::toric::{s_class_general, s_class_parametric, Probe, ToricError};

/// `b ≡ b′`: either `b′ = b` or `b′_j = b_j + a_j b_n` (`j < n`) and `b′_n = −b_n`.
pub fn pl_equiv(a: &[i64], b: &[i64], b2: &[i64]) -> bool {
    let n = a.len() + 1;
    if b.len() != n || b2.len() != n {
        return false;
    }
    if b == b2 {
        return true;
    }
    let bn = b[n - 1];
    a.iter().enumerate().all(|(j, aj)| b2[j] == b[j] + aj * bn) && b2[n - 1] == -bn
}

fn nonzero(b: &[i64]) -> Result<(), EquivalenceError> {
    if b.iter().all(|&x| x == 0) {
        Err(EquivalenceError::InvalidInput("zero vector".into()))
    } else {
        Ok(())
    }
}

/// Complete decision on the Hirzebruch surface with slant `k ≠ 0`.
///
/// The verdict comes from the involution; the invariants of both actions are
/// compared as a consistency check.
pub fn hirzebruch_decide(
    k: i64,
    sigma: &Rational,
    tau: &Rational,
    b: &LatticeVector,
    b2: &LatticeVector,
) -> Result<Verdict, EquivalenceError> {
    if k == 0 {
        return Err(EquivalenceError::InvalidInput("k = 0 is S2xS2; use s2xs2_decide".into()));
    }
    for v in [b, b2] {
        if v.len() != 2 {
            return Err(EquivalenceError::InvalidInput(format!("{v} must have 2 entries")));
        }
        nonzero(v)?;
    }
    let p = build_model(&ModelKind::Hirzebruch { k, sigma: sigma.clone(), tau: tau.clone() })?;
    let related = pl_equiv(&[-k], b, b2);
    let s_equal = exp_sum_equal(&s_class_general(&p, b, &Probe::Auto)?, &s_class_general(&p, b2, &Probe::Auto)?)
        .map_err(ToricError::from)?;
    if related != s_equal {
        return Err(EquivalenceError::Inconsistent(format!(
            "k={k}: {b} vs {b2}: involution {related}, S equal {s_equal}"
        )));
    }
    let mut v = if related {
        Verdict::equivalent("Thm-main(≡)", "pl_equiv")
    } else {
        Verdict::not_equivalent("pl_equiv: not related by the involution; S differs", "pl_equiv")
    };
    v.tests_run.push("compare_s".into());
    Ok(v)
}

/// Area hypothesis for `S²×S²`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum S2xS2Mode {
    Concrete { sigma: Rational, tau: Rational },
    /// `σ`, `τ` independent symbols, so `σ/τ` is irrational.
    Incommensurable,
}

/// Which of the three invariant-equality conditions hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct S2xS2Conditions {
    /// `|b′₁| = |b₁|` and `|b′₂| = |b₂|`.
    pub same_abs: bool,
    /// `σb₁ = ±τb′₂` and `τb₂ = ±σb′₁` with equal signs.
    pub swap_same_sign: bool,
    /// As above with opposite signs.
    pub swap_opposite_sign: bool,
}

impl S2xS2Conditions {
    pub fn any(&self) -> bool {
        self.same_abs || self.swap_same_sign || self.swap_opposite_sign
    }
}

pub fn s2xs2_conditions(mode: &S2xS2Mode, b: &[i64], b2: &[i64]) -> S2xS2Conditions {
    let same_abs = b[0].abs() == b2[0].abs() && b[1].abs() == b2[1].abs();
    let (mut same, mut opposite) = (false, false);
    if let S2xS2Mode::Concrete { sigma, tau } = mode {
        let z = Rational::from_integer;
        for s1 in [1i64, -1] {
            for s2 in [1i64, -1] {
                let first = sigma * z(b[0]) == tau * z(s1 * b2[1]);
                let second = tau * z(b[1]) == sigma * z(s2 * b2[0]);
                if first && second {
                    if s1 == s2 {
                        same = true;
                    } else {
                        opposite = true;
                    }
                }
            }
        }
    }
    S2xS2Conditions { same_abs, swap_same_sign: same, swap_opposite_sign: opposite }
}

/// Decision for `S²×S²` when both vectors have nonzero components.
pub fn s2xs2_decide(mode: &S2xS2Mode, b: &LatticeVector, b2: &LatticeVector) -> Result<Verdict, EquivalenceError> {
    for v in [b, b2] {
        if v.len() != 2 {
            return Err(EquivalenceError::InvalidInput(format!("{v} must have 2 entries")));
        }
        if v.contains(&0) {
            return Err(EquivalenceError::ZeroComponent(v.to_string()));
        }
    }
    let c = s2xs2_conditions(mode, b, b2);
    let s_equal = match mode {
        S2xS2Mode::Concrete { sigma, tau } => {
            let p = build_model(&ModelKind::ProductOfSegments { sigma: sigma.clone(), tau: tau.clone() })?;
            exp_sum_equal(&s_class_general(&p, b, &Probe::Auto)?, &s_class_general(&p, b2, &Probe::Auto)?)
        }
        S2xS2Mode::Incommensurable => {
            let pp = ParametricPolytope::new(&ParametricModel::ProductOfSegments)?;
            exp_sum_equal(&s_class_parametric(&pp, b)?, &s_class_parametric(&pp, b2)?)
        }
    }
    .map_err(ToricError::from)?;
    if s_equal != c.any() {
        return Err(EquivalenceError::Inconsistent(format!(
            "{b} vs {b2}: conditions {c:?}, S equal {s_equal}"
        )));
    }
    let mut v = if c.same_abs {
        Verdict::equivalent("Thm-spheres(i)", "s2xs2_conditions")
    } else if c.any() {
        let which = if c.swap_same_sign { "(ii)" } else { "(iii)" };
        Verdict::inconclusive(Some(format!("S equal via swap condition {which}")), "s2xs2_conditions")
    } else {
        Verdict::not_equivalent("s2xs2_conditions: none of (i), (ii), (iii) holds; S differs", "s2xs2_conditions")
    };
    v.tests_run.push("compare_s".into());
    Ok(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HirzebruchSubtype {
    #[serde(rename = "Type0_alpha")]
    Type0Alpha,
    #[serde(rename = "Type0_beta")]
    Type0Beta,
    #[serde(rename = "Type0_gamma")]
    Type0Gamma,
    #[serde(rename = "Type1_alpha")]
    Type1Alpha,
    #[serde(rename = "Type1_beta")]
    Type1Beta,
}

/// Classifies `b` by the coincidences among the four exponents
/// `α₁ = q`, `α₂ = q − τb₂`, `α₃ = q − σb₁`, `α₄ = q − (τb₂ + σb₀)`, `b₀ = b₁ − k b₂`.
///
/// Only differences of the `α`s matter, so `q` is not needed and the
/// parameters need not be feasible.
pub fn hirzebruch_subtype(k: i64, sigma: &Rational, tau: &Rational, b: &[i64]) -> Result<HirzebruchSubtype, EquivalenceError> {
    if b.len() != 2 {
        return Err(EquivalenceError::InvalidInput("b must have 2 entries".into()));
    }
    nonzero(b)?;
    let (b1, b2) = (b[0], b[1]);
    let b0 = b1 - k * b2;
    if b1 == 0 || b2 == 0 || b0 == 0 {
        return Ok(if b2 == 0 { HirzebruchSubtype::Type1Alpha } else { HirzebruchSubtype::Type1Beta });
    }
    let z = Rational::from_integer;
    let a23 = tau * z(b2) == sigma * z(b1);
    let a14 = tau * z(b2) + sigma * z(b0) == Rational::zero();
    Ok(match (a23, a14) {
        (false, false) => HirzebruchSubtype::Type0Alpha,
        (true, true) => HirzebruchSubtype::Type0Gamma,
        _ => HirzebruchSubtype::Type0Beta,
    })
}
