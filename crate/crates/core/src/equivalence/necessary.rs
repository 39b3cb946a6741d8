//! Necessary conditions for two circle actions on one toric manifold.

use num_traits::ToPrimitive;

use super::{EquivalenceError, Verdict};
use crate::expsum::exp_sum_equal;
use crate::numeric::Rational;
use crate::polytope::{DelzantPolytope, LatticeVector};
use crate::toric::{s_class_general, Probe};

/// Distinct invariants rule out a homotopy; equal invariants are inconclusive.
pub fn compare_s(p: &DelzantPolytope, x: &LatticeVector, y: &LatticeVector) -> Result<Verdict, EquivalenceError> {
    let sx = s_class_general(p, x, &Probe::Auto)?;
    let sy = s_class_general(p, y, &Probe::Auto)?;
    if exp_sum_equal(&sx, &sy).map_err(crate::toric::ToricError::from)? {
        Ok(Verdict::inconclusive(Some("S equal".into()), "compare_s"))
    } else {
        Ok(Verdict::not_equivalent("compare_s: S differs", "compare_s"))
    }
}

/// Sorted values `⟨P_j − Cm, X⟩` over the vertices.
pub fn centered_pairings(p: &DelzantPolytope, x: &LatticeVector) -> Vec<Rational> {
    let cm = p.center_of_mass();
    let mut v: Vec<Rational> = p
        .vertices()
        .iter()
        .map(|vert| {
            let d: Vec<Rational> = vert.point.iter().zip(&cm).map(|(a, b)| a - b).collect();
            x.pair(&d)
        })
        .collect();
    v.sort();
    v
}

fn require_type0(p: &DelzantPolytope, x: &LatticeVector) -> Result<(), EquivalenceError> {
    if p.face_type(x)? != 0 {
        return Err(EquivalenceError::TypeNotZero(x.to_string()));
    }
    Ok(())
}

/// Compares the multisets of centered moment values at the fixed points.
pub fn vertex_multiset_test(
    p: &DelzantPolytope,
    x: &LatticeVector,
    y: &LatticeVector,
) -> Result<Verdict, EquivalenceError> {
    require_type0(p, x)?;
    require_type0(p, y)?;
    if centered_pairings(p, x) == centered_pairings(p, y) {
        Ok(Verdict::inconclusive(None, "vertex_multiset"))
    } else {
        Ok(Verdict::not_equivalent("vertex_multiset: centered moment values differ", "vertex_multiset"))
    }
}

/// Searches a nonzero integer `λ` with `{λ⟨P_j,X⟩} = {⟨P_j,Y⟩}` on the centered polytope.
///
/// `|λ|` is bounded by `max|⟨P,Y⟩| / min_{≠0}|⟨P,X⟩|`, so the scan is finite.
pub fn reparam_test(p: &DelzantPolytope, x: &LatticeVector, y: &LatticeVector) -> Result<Verdict, EquivalenceError> {
    require_type0(p, x)?;
    require_type0(p, y)?;
    let a = centered_pairings(p, x);
    let b = centered_pairings(p, y);
    let max_b = b.iter().map(Rational::abs).max().unwrap_or_else(Rational::zero);
    let Some(min_a) = a.iter().filter(|v| !v.is_zero()).map(Rational::abs).min() else {
        return Ok(Verdict::inconclusive(Some("scan vacuous: all pairings vanish".into()), "reparam"));
    };
    let bound = (&max_b / &min_a).floor().to_i64().unwrap_or(i64::MAX).max(1);
    for m in 1..=bound {
        for lambda in [m, -m] {
            let l = Rational::from_integer(lambda);
            let mut scaled: Vec<Rational> = a.iter().map(|v| v * &l).collect();
            scaled.sort();
            if scaled == b {
                return Ok(Verdict::inconclusive(Some(format!("lambda={lambda}")), "reparam"));
            }
        }
    }
    Ok(Verdict::not_equivalent(
        format!("reparam: no integer lambda with 0 < |lambda| <= {bound}"),
        "reparam",
    ))
}

/// Actions of different type are not homotopic through circle actions.
pub fn type_test(p: &DelzantPolytope, x: &LatticeVector, y: &LatticeVector) -> Result<Verdict, EquivalenceError> {
    let sx = p.face_type(x)?;
    let sy = p.face_type(y)?;
    if sx == sy {
        Ok(Verdict::inconclusive(Some(format!("both Type({sx})")), "type"))
    } else {
        Ok(Verdict::not_equivalent(format!("type: Type({sx}) vs Type({sy})"), "type"))
    }
}
