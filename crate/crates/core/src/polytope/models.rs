//! Builders for the standard model polytopes.

use serde::{Deserialize, Serialize};

use super::{DelzantPolytope, HalfSpace, PolytopeError};
use crate::numeric::Rational;

/// Named polytope families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModelKind {
    /// `{x ≥ 0, Σ x_j ≤ σ}`, the moment polytope of `ℂPⁿ`.
    Simplex { n: usize, sigma: Rational },
    /// Trapezoid with slant `k`; the `n = 2` bundle with `a = (−k)`.
    Hirzebruch { k: i64, sigma: Rational, tau: Rational },
    /// Projectivized sum of line bundles over `ℂPⁿ⁻¹`, `n = a.len() + 1`.
    PlBundle { a: Vec<i64>, sigma: Rational, tau: Rational },
    /// Rectangle `[0,σ]×[0,τ]`, the moment polytope of `S²×S²`.
    #[serde(alias = "s2xs2")]
    ProductOfSegments { sigma: Rational, tau: Rational },
}

impl ModelKind {
    pub fn dim(&self) -> usize {
        match self {
            ModelKind::Simplex { n, .. } => *n,
            ModelKind::Hirzebruch { .. } | ModelKind::ProductOfSegments { .. } => 2,
            ModelKind::PlBundle { a, .. } => a.len() + 1,
        }
    }

    /// The defining half-spaces, after checking the positivity constraints.
    pub fn halfspaces(&self) -> Result<Vec<HalfSpace>, PolytopeError> {
        match self {
            ModelKind::Simplex { n, sigma } => {
                if *n == 0 {
                    return Err(PolytopeError::InfeasibleParameters("simplex needs n >= 1".into()));
                }
                positive("sigma", sigma)?;
                let mut hs: Vec<HalfSpace> = (0..*n).map(|j| neg_unit(*n, j)).collect();
                hs.push(HalfSpace::new(vec![1; *n], sigma.clone())?);
                Ok(hs)
            }
            ModelKind::Hirzebruch { k, sigma, tau } => {
                ModelKind::PlBundle { a: vec![-k], sigma: sigma.clone(), tau: tau.clone() }.halfspaces()
            }
            ModelKind::ProductOfSegments { sigma, tau } => {
                ModelKind::PlBundle { a: vec![0], sigma: sigma.clone(), tau: tau.clone() }.halfspaces()
            }
            ModelKind::PlBundle { a, sigma, tau } => {
                if a.is_empty() {
                    return Err(PolytopeError::InfeasibleParameters("bundle needs at least one a_i".into()));
                }
                positive("sigma", sigma)?;
                positive("tau", tau)?;
                for (i, ai) in a.iter().enumerate() {
                    let v = tau + sigma * Rational::from_integer(*ai);
                    if !v.is_positive() {
                        return Err(PolytopeError::InfeasibleParameters(format!(
                            "tau + a_{} sigma = {} must be positive",
                            i + 1,
                            v
                        )));
                    }
                }
                let n = a.len() + 1;
                let mut hs: Vec<HalfSpace> = (0..n).map(|j| neg_unit(n, j)).collect();
                let mut top = vec![1; n];
                top[n - 1] = 0;
                hs.push(HalfSpace::new(top, sigma.clone())?);
                let mut slant: Vec<i64> = a.iter().map(|x| -x).collect();
                slant.push(1);
                hs.push(HalfSpace::new(slant, tau.clone())?);
                Ok(hs)
            }
        }
    }
}

fn positive(name: &str, v: &Rational) -> Result<(), PolytopeError> {
    if v.is_positive() {
        Ok(())
    } else {
        Err(PolytopeError::InfeasibleParameters(format!("{name} = {v} must be positive")))
    }
}

fn neg_unit(n: usize, j: usize) -> HalfSpace {
    let mut v = vec![0; n];
    v[j] = -1;
    HalfSpace::new(v, Rational::zero()).expect("unit vectors are primitive")
}

/// Builds and validates a model polytope.
pub fn build_model(kind: &ModelKind) -> Result<DelzantPolytope, PolytopeError> {
    DelzantPolytope::new(kind.dim(), kind.halfspaces()?)
}
