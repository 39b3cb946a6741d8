//! The localization invariant for circle actions on toric manifolds.

use serde::Serialize;
use thiserror::Error;

use crate::expsum::{Basis, ExpSum, ExpSumError, Frequency};
use crate::localization::{
    epsilon_limit, moment_curve_probe, truncation_or_default, LocalTerm, LocalizationError,
    MAX_PROBE_ATTEMPTS,
};
use crate::numeric::{LaurentPoly, Rational, Scalar, SymPoly};
use crate::polytope::{DelzantPolytope, LatticeVector, ParametricPolytope, PolytopeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToricError {
    #[error("weight <rho, X> vanishes at vertex {vertex:?}")]
    DegenerateWeight { vertex: Vec<Rational> },
    #[error("kappa mismatch: <Cm, X> = {value}, series ratio = {cross_check}")]
    KappaMismatch { value: Box<Rational>, cross_check: Box<Rational> },
    #[error("type from Laurent degrees is {from_degrees}, face type is {face_type}")]
    SignatureMismatch { from_degrees: usize, face_type: usize },
    #[error("volume coefficient is not positive: {0}")]
    NonPositiveVolume(Rational),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Localization(#[from] LocalizationError),
    #[error(transparent)]
    ExpSum(#[from] ExpSumError),
}

/// One vertex of the moment polytope viewed as a fixed point of the circle action.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedPointDatum {
    pub vertex: Vec<Rational>,
    pub weights: Vec<i64>,
    pub moment_value: Rational,
}

/// How the regularizing direction `c` is chosen.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Probe {
    /// `c = (1, t, t², …)` for the first admissible `t ≥ 2`.
    #[default]
    Auto,
    Vector(Vec<i64>),
}

/// Laurent degree profile of an invariant, and the type it implies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeSignature {
    pub s: usize,
    /// `(frequency, degree)` per exponential term, sorted by frequency.
    pub profile: Vec<(Rational, i32)>,
}

/// `⟨Cm, X⟩` and the value recovered from the series of the unnormalized sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Kappa {
    pub value: Rational,
    pub cross_check: Rational,
}

fn check_vector(p_dim: usize, x: &LatticeVector) -> Result<(), ToricError> {
    if x.len() != p_dim {
        return Err(PolytopeError::DimensionMismatch { expected: p_dim, got: x.len() }.into());
    }
    if x.is_zero() {
        return Err(PolytopeError::ZeroVector.into());
    }
    Ok(())
}

pub fn fixed_points(p: &DelzantPolytope, x: &LatticeVector) -> Vec<FixedPointDatum> {
    p.vertices()
        .iter()
        .map(|v| FixedPointDatum {
            vertex: v.point.clone(),
            weights: v.frame.iter().map(|r| x.dot(r)).collect(),
            moment_value: x.pair(&v.point),
        })
        .collect()
}

/// `Σ_j e^{−⟨P_j,X⟩u} / (u^n ∏ w_ji)` for isotropy weights that are all nonzero.
fn vertex_sum_type0(p: &DelzantPolytope, x: &LatticeVector) -> Result<ExpSum, ToricError> {
    let n = p.dim() as i32;
    let mut raw = Vec::new();
    for fp in fixed_points(p, x) {
        let prod: i64 = fp.weights.iter().product();
        if prod == 0 {
            return Err(ToricError::DegenerateWeight { vertex: fp.vertex });
        }
        let c = Rational::from_integer(prod).recip().expect("nonzero");
        raw.push((Frequency::scalar(-fp.moment_value), LaurentPoly::monomial(c, -n)));
    }
    Ok(ExpSum::canonicalize(raw)?)
}

/// The invariant for an action with isolated fixed points only.
pub fn s_class_type0(p: &DelzantPolytope, x: &LatticeVector) -> Result<ExpSum, ToricError> {
    check_vector(p.dim(), x)?;
    let q = x.pair(&p.center_of_mass());
    Ok(vertex_sum_type0(p, x)?.shift_frequency(&Frequency::scalar(q)))
}

fn probe_admissible(p: &DelzantPolytope, x: &LatticeVector, c: &[i64]) -> bool {
    p.vertices()
        .iter()
        .all(|v| v.frame.iter().all(|r| x.dot(r) != 0 || LatticeVector(c.to_vec()).dot(r) != 0))
}

/// Admissible probes `(1, t, t², …)` in increasing `t`, skipping `skip`.
/// On a segment the candidates are `(1), (2), (3), …`.
fn auto_probe(p: &DelzantPolytope, x: &LatticeVector, skip: Option<&[i64]>) -> Result<Vec<i64>, ToricError> {
    for t in 2..(2 + MAX_PROBE_ATTEMPTS as i64) {
        let c = match p.dim() {
            1 => vec![t - 1],
            d => moment_curve_probe(d, t),
        };
        if Some(c.as_slice()) != skip && probe_admissible(p, x, &c) {
            return Ok(c);
        }
    }
    Err(LocalizationError::NoProbe { tried: MAX_PROBE_ATTEMPTS }.into())
}

fn unnormalized_limit(
    p: &DelzantPolytope,
    x: &LatticeVector,
    c: &[i64],
    truncation: usize,
) -> Result<ExpSum, ToricError> {
    if !probe_admissible(p, x, c) {
        return Err(LocalizationError::BadProbe { probe: c.to_vec() }.into());
    }
    let cv = LatticeVector(c.to_vec());
    let terms: Vec<LocalTerm> = p
        .vertices()
        .iter()
        .map(|v| LocalTerm {
            frequency: Frequency::scalar(-x.pair(&v.point)),
            probe_exponent: -cv.pair(&v.point),
            weights: v.frame.iter().map(|r| (x.dot(r), cv.dot(r))).collect(),
        })
        .collect();
    Ok(epsilon_limit(&Basis::scalar(), &terms, truncation)?)
}

/// The unnormalized vertex sum (no `e^{qu}` factor), for any nonzero `X`.
///
/// Computed with two probes; disagreement is reported as an error.
pub fn unnormalized_sum(
    p: &DelzantPolytope,
    x: &LatticeVector,
    probe: &Probe,
    truncation: Option<usize>,
) -> Result<ExpSum, ToricError> {
    check_vector(p.dim(), x)?;
    let t = truncation_or_default(truncation, p.dim());
    let first = match probe {
        Probe::Auto => auto_probe(p, x, None)?,
        Probe::Vector(c) => {
            if c.len() != p.dim() {
                return Err(PolytopeError::DimensionMismatch { expected: p.dim(), got: c.len() }.into());
            }
            c.clone()
        }
    };
    let a = unnormalized_limit(p, x, &first, t)?;
    let second = auto_probe(p, x, Some(&first))?;
    let b = unnormalized_limit(p, x, &second, t)?;
    if a != b {
        return Err(LocalizationError::ProbeDependence { first: a.to_text(), second: b.to_text() }.into());
    }
    Ok(a)
}

/// The invariant for any nonzero `X`, degenerate weights included.
pub fn s_class_general(p: &DelzantPolytope, x: &LatticeVector, probe: &Probe) -> Result<ExpSum, ToricError> {
    s_class_general_with(p, x, probe, None)
}

/// [`s_class_general`] with an explicit relative truncation order.
pub fn s_class_general_with(
    p: &DelzantPolytope,
    x: &LatticeVector,
    probe: &Probe,
    truncation: Option<usize>,
) -> Result<ExpSum, ToricError> {
    let sum = unnormalized_sum(p, x, probe, truncation)?;
    let q = x.pair(&p.center_of_mass());
    Ok(sum.shift_frequency(&Frequency::scalar(q)))
}

/// The invariant with `σ` (and `τ`) kept as independent symbols.
///
/// Frequencies and coefficients are polynomials in the symbols; the
/// combinatorics and edge frames come from the concrete representative.
pub fn s_class_parametric(pp: &ParametricPolytope, x: &LatticeVector) -> Result<ExpSum<SymPoly>, ToricError> {
    s_class_parametric_with(pp, x, None)
}

pub fn s_class_parametric_with(
    pp: &ParametricPolytope,
    x: &LatticeVector,
    truncation: Option<usize>,
) -> Result<ExpSum<SymPoly>, ToricError> {
    let rep = pp.representative();
    check_vector(rep.dim(), x)?;
    let basis = pp.basis().clone();
    let t = truncation_or_default(truncation, rep.dim());
    let pair_form = |v: &LatticeVector, pt: &[Vec<Rational>]| -> Vec<Rational> {
        (0..basis.dim())
            .map(|b| v.iter().zip(pt).map(|(&a, form)| &form[b] * Rational::from_integer(a)).sum())
            .collect()
    };
    let limit = |c: &[i64]| -> Result<ExpSum<SymPoly>, ToricError> {
        let cv = LatticeVector(c.to_vec());
        let terms: Vec<LocalTerm<SymPoly>> = rep
            .vertices()
            .iter()
            .zip(pp.vertices())
            .map(|(v, forms)| {
                let gamma = Frequency::new(basis.clone(), pair_form(x, forms))
                    .expect("basis dimension")
                    .neg();
                let delta = SymPoly::from_linear_form(&pair_form(&cv, forms)).expect("linear").neg();
                LocalTerm {
                    frequency: gamma,
                    probe_exponent: delta,
                    weights: v.frame.iter().map(|r| (x.dot(r), cv.dot(r))).collect(),
                }
            })
            .collect();
        Ok(epsilon_limit(&basis, &terms, t)?)
    };
    let first = auto_probe(rep, x, None)?;
    let a = limit(&first)?;
    let second = auto_probe(rep, x, Some(&first))?;
    let b = limit(&second)?;
    if a != b {
        return Err(LocalizationError::ProbeDependence { first: a.to_text(), second: b.to_text() }.into());
    }
    let cm = pp.center_of_mass();
    let q = Frequency::new(basis.clone(), pair_form(x, &cm)).expect("basis dimension");
    Ok(a.shift_frequency(&q))
}

/// `⟨Cm, X⟩`, cross-checked against `−c₁/c₀` of the unnormalized sum.
pub fn kappa_toric(p: &DelzantPolytope, x: &LatticeVector) -> Result<Kappa, ToricError> {
    check_vector(p.dim(), x)?;
    let value = x.pair(&p.center_of_mass());
    let series = unnormalized_sum(p, x, &Probe::Auto, None)?.u_series(1)?;
    if !series[0].is_positive() {
        return Err(ToricError::NonPositiveVolume(series[0].clone()));
    }
    let cross_check = -(&series[1] / &series[0]);
    if cross_check != value {
        return Err(ToricError::KappaMismatch { value: Box::new(value), cross_check: Box::new(cross_check) });
    }
    Ok(Kappa { value, cross_check })
}

/// Groups the invariant's terms by frequency and recovers the type from the
/// top Laurent degree.
pub fn type_signature(p: &DelzantPolytope, x: &LatticeVector) -> Result<TypeSignature, ToricError> {
    let s = s_class_general(p, x, &Probe::Auto)?;
    let profile: Vec<(Rational, i32)> = s
        .degree_profile()
        .into_iter()
        .map(|(f, d)| (f.as_rational().expect("scalar basis"), d))
        .collect();
    let top = profile.iter().map(|(_, d)| *d).max().unwrap_or(-(p.dim() as i32));
    let from_degrees = (top + p.dim() as i32).max(0) as usize;
    let face_type = p.face_type(x)?;
    if from_degrees != face_type {
        return Err(ToricError::SignatureMismatch { from_degrees, face_type });
    }
    Ok(TypeSignature { s: face_type, profile })
}

#[cfg(test)]
mod tests;
