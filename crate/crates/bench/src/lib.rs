//! Fixtures shared by the benchmarks.

use equiloc_core::{build_model, DelzantPolytope, LatticeVector, ModelKind, OrbitSpec, Rational, SuVector};

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n)
}

pub fn hirzebruch(k: i64) -> DelzantPolytope {
    build_model(&ModelKind::Hirzebruch { k, sigma: q(1), tau: q(k + 2) }).expect("feasible")
}

pub fn prism() -> DelzantPolytope {
    build_model(&ModelKind::PlBundle { a: vec![1, 1], sigma: q(1), tau: q(3) }).expect("feasible")
}

pub fn simplex(n: usize) -> DelzantPolytope {
    build_model(&ModelKind::Simplex { n, sigma: q(1) }).expect("feasible")
}

pub fn lv(v: &[i64]) -> LatticeVector {
    LatticeVector(v.to_vec())
}

/// Nonzero vectors of `[-r, r]²`.
pub fn plane_grid(r: i64) -> Vec<LatticeVector> {
    let mut out = Vec::new();
    for a in -r..=r {
        for b in -r..=r {
            if (a, b) != (0, 0) {
                out.push(lv(&[a, b]));
            }
        }
    }
    out
}

pub fn full_flag(n: usize) -> OrbitSpec {
    OrbitSpec::new((0..n as i64).rev().map(q).collect()).expect("strictly decreasing")
}

pub fn su(v: &[i64]) -> SuVector {
    SuVector::new(v.to_vec()).expect("trace zero")
}
