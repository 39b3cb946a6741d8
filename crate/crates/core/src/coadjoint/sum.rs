//! Fixed points, isotropy weights and the localization sum on an orbit.

use itertools::Itertools;
use serde::Serialize;

use super::{check_vector, CoadjointError, OrbitSpec, SuVector};
use crate::expsum::{Basis, ExpSum, Frequency};
use crate::localization::{epsilon_limit, moment_curve_probe, truncation_or_default, LocalTerm, LocalizationError};
use crate::numeric::{LaurentPoly, Rational};

/// An ordered set partition: `blocks[b]` are the indices sent to spectrum block `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Coset {
    pub blocks: Vec<Vec<usize>>,
}

impl std::fmt::Display for Coset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|b| format!("{{{}}}", b.iter().join(","))).collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// A fixed point with its moment value and Euler coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetPoint {
    pub coset: Coset,
    /// `Σ_j r_j a_{w(j)}`.
    pub moment_value: Rational,
    /// Product of the isotropy weights.
    pub euler_coeff: Rational,
}

/// One coset per fixed point, `n! / ∏ m_i!` in total, in lexicographic order.
pub fn enumerate_cosets(spec: &OrbitSpec) -> Vec<Coset> {
    fn rec(remaining: &[usize], sizes: &[usize], prefix: &mut Vec<Vec<usize>>, out: &mut Vec<Coset>) {
        let Some((&m, rest)) = sizes.split_first() else {
            out.push(Coset { blocks: prefix.clone() });
            return;
        };
        for chosen in remaining.iter().copied().combinations(m) {
            let left: Vec<usize> = remaining.iter().copied().filter(|i| !chosen.contains(i)).collect();
            prefix.push(chosen);
            rec(&left, rest, prefix, out);
            prefix.pop();
        }
    }
    let all: Vec<usize> = (0..spec.n()).collect();
    let mut out = Vec::new();
    rec(&all, &spec.blocks(), &mut Vec::new(), &mut out);
    out
}

/// Pairs `(i, j)` of indices over the positive roots: `i` in an earlier block than `j`.
fn root_pairs(coset: &Coset) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (b, hi) in coset.blocks.iter().enumerate() {
        for lo in &coset.blocks[b + 1..] {
            for &i in hi {
                for &j in lo {
                    out.push((i, j));
                }
            }
        }
    }
    out
}

fn frequency_value(spec: &OrbitSpec, coset: &Coset, a: &[i64]) -> Rational {
    spec.block_values()
        .iter()
        .zip(&coset.blocks)
        .map(|(r, idx)| r * Rational::from_integer(idx.iter().map(|&i| a[i]).sum()))
        .sum()
}

/// Isotropy weights `a_i − a_j` at a coset, one per positive root.
pub fn fixed_point_weights(spec: &OrbitSpec, x: &SuVector, coset: &Coset) -> Result<Vec<i64>, CoadjointError> {
    check_vector(spec, x)?;
    let a = x.entries();
    let w: Vec<i64> = root_pairs(coset).iter().map(|&(i, j)| a[i] - a[j]).collect();
    if w.contains(&0) {
        return Err(CoadjointError::DegenerateWeight(coset.to_string()));
    }
    Ok(w)
}

/// Fixed points of a regular action.
pub fn orbit_fixed_points(spec: &OrbitSpec, x: &SuVector) -> Result<Vec<CosetPoint>, CoadjointError> {
    enumerate_cosets(spec)
        .into_iter()
        .map(|coset| {
            let w = fixed_point_weights(spec, x, &coset)?;
            Ok(CosetPoint {
                moment_value: frequency_value(spec, &coset, x.entries()),
                euler_coeff: Rational::from_integer(w.iter().product()),
                coset,
            })
        })
        .collect()
}

fn limit_with_probe(spec: &OrbitSpec, x: &SuVector, c: &[i64], truncation: usize) -> Result<ExpSum, CoadjointError> {
    let a = x.entries();
    let terms: Vec<LocalTerm> = enumerate_cosets(spec)
        .iter()
        .map(|coset| LocalTerm {
            frequency: Frequency::scalar(frequency_value(spec, coset, a)),
            probe_exponent: frequency_value(spec, coset, c),
            weights: root_pairs(coset).iter().map(|&(i, j)| (a[i] - a[j], c[i] - c[j])).collect(),
        })
        .collect();
    Ok(epsilon_limit(&Basis::scalar(), &terms, truncation)?)
}

/// `Σ_w e^{η(w⁻¹X)u} / (∏ weights · u^m)` without the normalizing factor.
///
/// A non-regular `X` is perturbed to `a + εc` with `c = (1, t, t², …)`, which
/// separates every pair; the limit is recomputed with a second `t` and compared.
pub fn unnormalized_orbit_sum(
    spec: &OrbitSpec,
    x: &SuVector,
    truncation: Option<usize>,
) -> Result<ExpSum, CoadjointError> {
    check_vector(spec, x)?;
    let m = spec.complex_dim() as i32;
    if x.is_regular() {
        let raw = orbit_fixed_points(spec, x)?.into_iter().map(|p| {
            let c = p.euler_coeff.recip().expect("regular weights are nonzero");
            (Frequency::scalar(p.moment_value), LaurentPoly::monomial(c, -m))
        });
        return Ok(ExpSum::canonicalize(raw)?);
    }
    let t = truncation_or_default(truncation, spec.complex_dim());
    let first = limit_with_probe(spec, x, &moment_curve_probe(spec.n(), 2), t)?;
    let second = limit_with_probe(spec, x, &moment_curve_probe(spec.n(), 3), t)?;
    if first != second {
        return Err(LocalizationError::ProbeDependence { first: first.to_text(), second: second.to_text() }.into());
    }
    Ok(first)
}

/// `κ = −c₁/c₀` for the series `c₀ + c₁u + …` of the unnormalized sum.
pub fn kappa_orbit(spec: &OrbitSpec, x: &SuVector) -> Result<Rational, CoadjointError> {
    kappa_of(&unnormalized_orbit_sum(spec, x, None)?)
}

fn kappa_of(f: &ExpSum) -> Result<Rational, CoadjointError> {
    let c = f.u_series(1)?;
    if !c[0].is_positive() {
        return Err(CoadjointError::NonPositiveVolume(c[0].clone()));
    }
    Ok(-(&c[1] / &c[0]))
}

/// The normalized invariant `e^{κu} · Σ_w …`.
pub fn s_class_orbit(spec: &OrbitSpec, x: &SuVector) -> Result<ExpSum, CoadjointError> {
    s_class_orbit_with(spec, x, None)
}

pub fn s_class_orbit_with(spec: &OrbitSpec, x: &SuVector, truncation: Option<usize>) -> Result<ExpSum, CoadjointError> {
    let f = unnormalized_orbit_sum(spec, x, truncation)?;
    let kappa = kappa_of(&f)?;
    Ok(f.shift_frequency(&Frequency::scalar(kappa)))
}
