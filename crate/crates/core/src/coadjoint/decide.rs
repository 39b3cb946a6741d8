//! Decision procedures on coadjoint orbits.

use itertools::Itertools;
use serde::Serialize;

use super::{check_vector, enumerate_cosets, require_regular, s_class_orbit, verdict_log, CoadjointError, OrbitSpec, SuVector};
use crate::equivalence::Verdict;
use crate::expsum::exp_sum_equal;
use crate::numeric::Rational;

/// Vectors in one Weyl orbit generate homotopic actions.
pub fn weyl_orbit_test(x: &SuVector, x2: &SuVector) -> Verdict {
    if x.sorted() == x2.sorted() {
        Verdict::equivalent("Cor-SUn(permutation)", "weyl_orbit")
    } else {
        Verdict::inconclusive(None, "weyl_orbit")
    }
}

/// Complete decision on `ℂPⁿ⁻¹`, regular or not.
pub fn cpn_decide(spec: &OrbitSpec, x: &SuVector, x2: &SuVector) -> Result<Verdict, CoadjointError> {
    let blocks = spec.blocks();
    let n = spec.n();
    if blocks != [1, n - 1] && blocks != [n - 1, 1] {
        return Err(CoadjointError::WrongBlocks { expected: "(1, n-1)".into(), got: blocks });
    }
    check_vector(spec, x)?;
    check_vector(spec, x2)?;
    let permuted = x.sorted() == x2.sorted();
    let s_equal = exp_sum_equal(&s_class_orbit(spec, x)?, &s_class_orbit(spec, x2)?)?;
    if permuted != s_equal {
        return Err(CoadjointError::Inconsistent(format!(
            "{x} vs {x2}: permutation {permuted}, S equal {s_equal}"
        )));
    }
    let v = if permuted {
        Verdict::equivalent("Thm-CPn(permutation)", "permutation")
    } else {
        Verdict::not_equivalent("permutation: entry multisets differ; S differs", "permutation")
    };
    Ok(verdict_log(v, "compare_s"))
}

/// Shift `β` with `sorted(a) + β = sorted(b)`, if any.
fn shift_between(a: &[Rational], b: &[Rational]) -> Option<Rational> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort();
    b.sort();
    if a.len() != b.len() || a.is_empty() {
        return None;
    }
    let beta = &b[0] - &a[0];
    a.iter().zip(&b).all(|(x, y)| x + &beta == *y).then_some(beta)
}

/// Affine map `λx + β` with nonzero integer `λ` sending `a` onto `b` as multisets.
fn affine_between(a: &[Rational], b: &[Rational]) -> Option<(i64, Rational)> {
    let span = |v: &[Rational]| v.iter().max().zip(v.iter().min()).map(|(hi, lo)| hi - lo);
    let (sa, sb) = (span(a)?, span(b)?);
    if sa.is_zero() {
        return None;
    }
    let ratio = &sb / &sa;
    let l = ratio.to_i64().filter(|_| ratio.is_integer() && !ratio.is_zero())?;
    for lambda in [l, -l] {
        let scaled: Vec<Rational> = a.iter().map(|x| x * Rational::from_integer(lambda)).collect();
        if let Some(beta) = shift_between(&scaled, b) {
            return Some((lambda, beta));
        }
    }
    None
}

fn fmt_multiset(v: &[Rational]) -> String {
    format!("{{{}}}", v.iter().sorted().join(","))
}

/// Necessary condition on the Grassmannian: the subset sums must agree up to a shift.
pub fn grassmann_necessary(spec: &OrbitSpec, x: &SuVector, x2: &SuVector) -> Result<Verdict, CoadjointError> {
    let blocks = spec.blocks();
    if blocks.len() != 2 || blocks[0] < 2 || blocks[1] < 2 {
        return Err(CoadjointError::WrongBlocks { expected: "(k, n-k) with 1 < k < n-1".into(), got: blocks });
    }
    check_vector(spec, x)?;
    check_vector(spec, x2)?;
    require_regular(x)?;
    require_regular(x2)?;
    let k = blocks[0];
    let sums = |v: &SuVector| -> Vec<Rational> {
        v.entries()
            .iter()
            .combinations(k)
            .map(|c| Rational::from_integer(c.into_iter().sum()))
            .collect()
    };
    let (a, b) = (sums(x), sums(x2));
    Ok(match shift_between(&a, &b) {
        Some(beta) => Verdict::inconclusive(Some(format!("beta={beta}")), "grassmann_sums"),
        None => Verdict::not_equivalent(
            format!("grassmann_sums: {} and {} differ by no shift", fmt_multiset(&a), fmt_multiset(&b)),
            "grassmann_sums",
        ),
    })
}

/// `{Σ_j r_j a_{σ(j)} : σ ∈ S_n}`.
fn flag_values(spec: &OrbitSpec, x: &SuVector) -> Vec<Rational> {
    let n = spec.n();
    (0..n)
        .permutations(n)
        .map(|p| {
            spec.spectrum()
                .iter()
                .zip(&p)
                .map(|(r, &i)| r * Rational::from_integer(x.entries()[i]))
                .sum()
        })
        .collect()
}

/// Necessary condition on the full flag manifold; depends on the spectrum.
pub fn flag_necessary(spec: &OrbitSpec, x: &SuVector, x2: &SuVector) -> Result<Verdict, CoadjointError> {
    let blocks = spec.blocks();
    if blocks.iter().any(|&m| m != 1) {
        return Err(CoadjointError::WrongBlocks { expected: "all blocks of size 1".into(), got: blocks });
    }
    check_vector(spec, x)?;
    check_vector(spec, x2)?;
    require_regular(x)?;
    require_regular(x2)?;
    let (a, b) = (flag_values(spec, x), flag_values(spec, x2));
    Ok(match shift_between(&a, &b) {
        Some(beta) => Verdict::inconclusive(Some(format!("beta={beta}")), "flag_sums"),
        None => Verdict::not_equivalent(
            format!("flag_sums: {} and {} differ by no shift", fmt_multiset(&a), fmt_multiset(&b)),
            "flag_sums",
        ),
    })
}

/// The translation test and its reparametrized (integer affine) variant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitValueReport {
    pub translation: Verdict,
    pub reparam: Verdict,
}

/// Compares the multisets of fixed-point moment values.
pub fn orbit_value_tests(spec: &OrbitSpec, x: &SuVector, x2: &SuVector) -> Result<OrbitValueReport, CoadjointError> {
    check_vector(spec, x)?;
    check_vector(spec, x2)?;
    let values = |v: &SuVector| -> Vec<Rational> {
        enumerate_cosets(spec)
            .iter()
            .map(|c| {
                spec.block_values()
                    .iter()
                    .zip(&c.blocks)
                    .map(|(r, idx)| r * Rational::from_integer(idx.iter().map(|&i| v.entries()[i]).sum()))
                    .sum()
            })
            .collect()
    };
    let (a, b) = (values(x), values(x2));
    let translation = match shift_between(&a, &b) {
        Some(beta) => Verdict::inconclusive(Some(format!("shift={beta}")), "translation"),
        None => Verdict::not_equivalent(
            format!("translation: no shift maps {} onto {}", fmt_multiset(&a), fmt_multiset(&b)),
            "translation",
        ),
    };
    let reparam = match affine_between(&a, &b) {
        Some((lambda, beta)) => Verdict::inconclusive(Some(format!("lambda={lambda}, shift={beta}")), "reparam_affine"),
        None => Verdict::not_equivalent("reparam_affine: no integer affine map matches the values", "reparam_affine"),
    };
    Ok(OrbitValueReport { translation, reparam })
}
