//! Decision procedures checked against each other on exhaustive grids.

use equiloc_core::equivalence::{
    compare_s, hirzebruch_decide, hirzebruch_subtype, pl_equiv, polytope_tests, s2xs2_decide, vertex_multiset_test,
    HirzebruchSubtype, S2xS2Mode,
};
use equiloc_core::toric::s_class_general;
use equiloc_core::{build_model, exp_sum_equal, LatticeVector, ModelKind, Probe, Rational, Status};
use itertools::Itertools;

fn q(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn nonzero_grid(r: i64) -> Vec<Vec<i64>> {
    (0..2).map(|_| -r..=r).multi_cartesian_product().filter(|v| v != &[0, 0]).collect()
}

fn hirzebruch(k: i64, tau: i64) -> equiloc_core::DelzantPolytope {
    build_model(&ModelKind::Hirzebruch { k, sigma: q(1), tau: q(tau) }).unwrap()
}

#[test]
fn equivalent_implies_equal_s_and_back() {
    let vectors = nonzero_grid(2);
    for k in 1..=3 {
        let p = hirzebruch(k, 4);
        for (i, (b, b2)) in vectors.iter().cartesian_product(&vectors).enumerate() {
            let (x, y) = (LatticeVector(b.clone()), LatticeVector(b2.clone()));
            let verdict = hirzebruch_decide(k, &q(1), &q(4), &x, &y).unwrap();
            if verdict.status == Status::Equivalent || i % 5 == 0 {
                let s = compare_s(&p, &x, &y).unwrap();
                match verdict.status {
                    Status::Equivalent => assert_eq!(s.status, Status::InconclusiveNecessaryPassed, "{b:?} {b2:?}"),
                    Status::NotEquivalent => assert_eq!(s.status, Status::NotEquivalent, "{b:?} {b2:?}"),
                    Status::InconclusiveNecessaryPassed => panic!("the Hirzebruch decision is complete"),
                }
            }
        }
    }
}

#[test]
fn vertex_multiset_failure_implies_s_failure() {
    let vectors = nonzero_grid(3);
    for k in 1..=3 {
        let p = hirzebruch(k, 4);
        let type0: Vec<LatticeVector> = vectors
            .iter()
            .map(|b| LatticeVector(b.clone()))
            .filter(|x| p.face_type(x).unwrap() == 0)
            .collect();
        let sums: Vec<_> = type0.iter().map(|x| s_class_general(&p, x, &Probe::Auto).unwrap()).collect();
        for (i, j) in (0..type0.len()).cartesian_product(0..type0.len()) {
            if vertex_multiset_test(&p, &type0[i], &type0[j]).unwrap().status == Status::NotEquivalent {
                assert!(!exp_sum_equal(&sums[i], &sums[j]).unwrap(), "{} {}", type0[i], type0[j]);
            }
        }
    }
}

#[test]
fn subtypes_partition_the_grid() {
    for k in 1..=3 {
        for (s, t) in [(1, 4), (2, 7), (1, 2)] {
            let mut counts = std::collections::BTreeMap::new();
            for b in nonzero_grid(3) {
                let st = hirzebruch_subtype(k, &q(s), &q(t), &b).unwrap();
                let (b1, b2) = (b[0], b[1]);
                let b0 = b1 - k * b2;
                let type1 = b1 * b2 * b0 == 0;
                let is_type1 = matches!(st, HirzebruchSubtype::Type1Alpha | HirzebruchSubtype::Type1Beta);
                assert_eq!(type1, is_type1, "k={k} b={b:?}");
                if b2 == 0 {
                    assert_eq!(st, HirzebruchSubtype::Type1Alpha);
                }
                *counts.entry(format!("{st:?}")).or_insert(0) += 1;
            }
            assert_eq!(counts.values().sum::<usize>(), 48);
        }
    }
}

#[test]
fn subtype_agrees_with_distinct_exponentials() {
    for k in 1..=3 {
        let p = hirzebruch(k, 5);
        for b in nonzero_grid(3) {
            let st = hirzebruch_subtype(k, &q(1), &q(5), &b).unwrap();
            let s = s_class_general(&p, &LatticeVector(b.clone()), &Probe::Auto).unwrap();
            let expected = match st {
                HirzebruchSubtype::Type0Alpha => 4,
                HirzebruchSubtype::Type0Beta => 3,
                HirzebruchSubtype::Type0Gamma => 2,
                HirzebruchSubtype::Type1Alpha | HirzebruchSubtype::Type1Beta => s.len(),
            };
            assert_eq!(s.len(), expected, "k={k} b={b:?} {st:?}: {}", s.to_text());
        }
    }
}

#[test]
fn incommensurable_spheres_match_symbolic_s() {
    let vectors: Vec<Vec<i64>> = nonzero_grid(2).into_iter().filter(|v| v[0] != 0 && v[1] != 0).collect();
    for (b, b2) in vectors.iter().cartesian_product(&vectors) {
        let v = s2xs2_decide(&S2xS2Mode::Incommensurable, &LatticeVector(b.clone()), &LatticeVector(b2.clone())).unwrap();
        let same_abs = b[0].abs() == b2[0].abs() && b[1].abs() == b2[1].abs();
        assert_eq!(v.status == Status::Equivalent, same_abs);
        assert_eq!(v.status == Status::NotEquivalent, !same_abs);
    }
}

#[test]
fn concrete_square_swaps_are_inconclusive() {
    let mode = S2xS2Mode::Concrete { sigma: q(2), tau: q(3) };
    let v = s2xs2_decide(&mode, &LatticeVector(vec![3, 4]), &LatticeVector(vec![6, 2])).unwrap();
    assert_eq!(v.status, Status::InconclusiveNecessaryPassed);
    let p = build_model(&ModelKind::ProductOfSegments { sigma: q(2), tau: q(3) }).unwrap();
    let a = s_class_general(&p, &LatticeVector(vec![3, 4]), &Probe::Auto).unwrap();
    let b = s_class_general(&p, &LatticeVector(vec![6, 2]), &Probe::Auto).unwrap();
    assert!(exp_sum_equal(&a, &b).unwrap());
}

#[test]
fn involution_is_an_involution() {
    for a in [vec![-1], vec![2], vec![1, -2]] {
        let n = a.len() + 1;
        for b in (0..n).map(|_| -2..=2i64).multi_cartesian_product() {
            let mut image = b.clone();
            for j in 0..a.len() {
                image[j] = b[j] + a[j] * b[n - 1];
            }
            image[n - 1] = -b[n - 1];
            assert!(pl_equiv(&a, &b, &image));
            assert!(pl_equiv(&a, &image, &b));
        }
    }
}

#[test]
fn translated_and_swapped_polytopes() {
    let p = hirzebruch(1, 2);
    let moved = p.translate(&[q(5), q(7)]);
    assert!(polytope_tests(&p, &moved).equal_centered);

    let sq = build_model(&ModelKind::ProductOfSegments { sigma: q(1), tau: q(1) }).unwrap();
    let swapped = sq.transform(&[vec![0, 1], vec![1, 0]]).unwrap();
    assert!(polytope_tests(&sq, &swapped).gl_witness.is_some());

    let other = build_model(&ModelKind::Hirzebruch { k: 2, sigma: q(1), tau: q(3) }).unwrap();
    let cmp = polytope_tests(&p, &other);
    assert!(!cmp.equal_centered);
    assert!(cmp.gl_witness.is_none());
}

#[test]
fn gl_witness_maps_vertices_exactly() {
    let p = build_model(&ModelKind::PlBundle { a: vec![1], sigma: q(1), tau: q(2) }).unwrap();
    let v = vec![vec![1, 1], vec![0, 1]];
    let image = p.transform(&v).unwrap().translate(&[q(3), q(-1)]);
    let w = polytope_tests(&p, &image).gl_witness.expect("a unimodular image has a witness");
    let centered = |poly: &equiloc_core::DelzantPolytope| {
        let mut pts = poly.recenter().vertex_points();
        pts.sort();
        pts
    };
    let mapped = {
        let mut pts: Vec<Vec<Rational>> = centered(&p)
            .iter()
            .map(|x| w.iter().map(|row| row.iter().zip(x).map(|(&a, c)| c * q(a)).sum()).collect())
            .collect();
        pts.sort();
        pts
    };
    assert_eq!(mapped, centered(&image));
}
