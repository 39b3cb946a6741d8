use super::*;
use crate::numeric::Rational;
use crate::polytope::{build_model, DelzantPolytope, LatticeVector, ModelKind};

fn z(p: i64) -> Rational {
    Rational::from_integer(p)
}

fn lv(v: &[i64]) -> LatticeVector {
    LatticeVector(v.to_vec())
}

fn hirz(k: i64, s: i64, t: i64) -> DelzantPolytope {
    build_model(&ModelKind::Hirzebruch { k, sigma: z(s), tau: z(t) }).unwrap()
}

fn square(s: i64, t: i64) -> DelzantPolytope {
    build_model(&ModelKind::ProductOfSegments { sigma: z(s), tau: z(t) }).unwrap()
}

#[test]
fn compare_s_examples() {
    let p = hirz(1, 1, 2);
    assert!(compare_s(&p, &lv(&[1, 2]), &lv(&[2, 1])).unwrap().is_not_equivalent());
    let v = compare_s(&p, &lv(&[1, 2]), &lv(&[1, 2])).unwrap();
    assert_eq!(v.status, Status::InconclusiveNecessaryPassed);
    let v = compare_s(&square(1, 1), &lv(&[1, 0]), &lv(&[0, 1])).unwrap();
    assert_eq!(v.status, Status::InconclusiveNecessaryPassed);
}

#[test]
fn vertex_multiset_examples() {
    let p = hirz(1, 1, 2);
    assert!(vertex_multiset_test(&p, &lv(&[1, 2]), &lv(&[1, 3])).unwrap().is_not_equivalent());
    assert_eq!(
        vertex_multiset_test(&p, &lv(&[1, 2]), &lv(&[1, 2])).unwrap().status,
        Status::InconclusiveNecessaryPassed
    );
    assert!(matches!(
        vertex_multiset_test(&square(1, 1), &lv(&[1, 0]), &lv(&[1, 1])),
        Err(EquivalenceError::TypeNotZero(_))
    ));
}

#[test]
fn reparam_examples() {
    let p = hirz(1, 1, 2);
    let x = lv(&[1, 2]);
    let v = reparam_test(&p, &x, &x.scale(2)).unwrap();
    assert_eq!(v.witness.as_deref(), Some("lambda=2"));
    // The centered values {-2, -1, 1, 2} are symmetric, so λ = 1 already matches −X.
    let v = reparam_test(&p, &x, &x.scale(-1)).unwrap();
    assert_eq!(v.status, Status::InconclusiveNecessaryPassed);
    let v = reparam_test(&p, &lv(&[1, 3]), &lv(&[-1, -3])).unwrap();
    assert_eq!(v.status, Status::InconclusiveNecessaryPassed);
    assert!(reparam_test(&p, &x, &lv(&[2, 1])).unwrap().is_not_equivalent());
}

#[test]
fn type_examples() {
    let p = hirz(1, 1, 2);
    assert!(type_test(&p, &lv(&[1, 2]), &lv(&[1, 0])).unwrap().is_not_equivalent());
    assert!(!type_test(&p, &lv(&[1, 0]), &lv(&[0, 1])).unwrap().is_not_equivalent());
    assert!(!type_test(&p, &lv(&[3, 1]), &lv(&[3, 1])).unwrap().is_not_equivalent());
}

#[test]
fn polytope_comparisons() {
    let p = hirz(1, 1, 2);
    let moved = p.translate(&[z(5), z(7)]);
    assert!(polytope_tests(&p, &moved).equal_centered);

    let sq = square(1, 1);
    let swapped = sq.transform(&[vec![0, 1], vec![1, 0]]).unwrap();
    let r = polytope_tests(&sq, &swapped);
    let v = r.gl_witness.expect("a lattice isomorphism exists");
    let img = sq.recenter().transform(&v).unwrap();
    assert_eq!(img.vertex_points(), swapped.recenter().vertex_points());

    let r = polytope_tests(&p, &hirz(2, 1, 3));
    assert!(!r.equal_centered);
    assert!(r.gl_witness.is_none());

    // A sheared trapezoid is lattice-equivalent to the original.
    let sheared = p.transform(&[vec![1, 0], vec![1, 1]]).unwrap();
    let r = polytope_tests(&p, &sheared);
    assert!(!r.equal_centered);
    assert!(r.gl_witness.is_some());
}

#[test]
fn involution_examples() {
    assert!(pl_equiv(&[-1], &[1, 1], &[0, -1]));
    assert!(pl_equiv(&[-1], &[2, 5], &[2, 5]));
    assert!(!pl_equiv(&[-1], &[1, 0], &[0, 1]));
    assert!(pl_equiv(&[1, 2], &[1, 1, 1], &[2, 3, -1]));
}

#[test]
fn hirzebruch_decisions() {
    let (s, t) = (z(1), z(2));
    let v = hirzebruch_decide(1, &s, &t, &lv(&[1, 1]), &lv(&[0, -1])).unwrap();
    assert_eq!(v.status, Status::Equivalent);
    assert_eq!(v.witness.as_deref(), Some("Thm-main(≡)"));
    assert!(hirzebruch_decide(1, &s, &t, &lv(&[1, 0]), &lv(&[0, 1])).unwrap().is_not_equivalent());
    assert!(hirzebruch_decide(1, &s, &t, &lv(&[2, 3]), &lv(&[2, 3])).unwrap().is_equivalent());
    assert!(matches!(
        hirzebruch_decide(0, &s, &t, &lv(&[1, 0]), &lv(&[0, 1])),
        Err(EquivalenceError::InvalidInput(_))
    ));
}

#[test]
fn spheres_decisions() {
    let inc = S2xS2Mode::Incommensurable;
    let v = s2xs2_decide(&inc, &lv(&[1, 2]), &lv(&[-1, 2])).unwrap();
    assert_eq!(v.status, Status::Equivalent);
    assert_eq!(v.witness.as_deref(), Some("Thm-spheres(i)"));
    assert!(s2xs2_decide(&inc, &lv(&[1, 2]), &lv(&[2, 1])).unwrap().is_not_equivalent());
    let conc = S2xS2Mode::Concrete { sigma: z(1), tau: z(1) };
    let v = s2xs2_decide(&conc, &lv(&[1, 2]), &lv(&[2, 1])).unwrap();
    assert_eq!(v.status, Status::InconclusiveNecessaryPassed);
    assert_eq!(
        s2xs2_decide(&conc, &lv(&[1, 0]), &lv(&[2, 1])),
        Err(EquivalenceError::ZeroComponent("(1,0)".into()))
    );
}

#[test]
fn subtypes() {
    let (s, t) = (z(1), z(2));
    assert_eq!(hirzebruch_subtype(1, &s, &t, &[3, 1]).unwrap(), HirzebruchSubtype::Type0Alpha);
    assert_eq!(hirzebruch_subtype(1, &s, &t, &[4, 0]).unwrap(), HirzebruchSubtype::Type1Alpha);
    assert_eq!(hirzebruch_subtype(1, &s, &t, &[2, 2]).unwrap(), HirzebruchSubtype::Type1Beta);
    // τb₂ = σb₁ makes α₂ = α₃.
    assert_eq!(hirzebruch_subtype(1, &s, &t, &[2, 1]).unwrap(), HirzebruchSubtype::Type0Beta);
    // Both coincidences need τ = kσ/2, outside the feasible range.
    assert_eq!(hirzebruch_subtype(4, &z(1), &z(2), &[2, 1]).unwrap(), HirzebruchSubtype::Type0Gamma);
}

#[test]
fn verdict_chaining_stops_at_first_decision() {
    let p = hirz(1, 1, 2);
    let v = type_test(&p, &lv(&[1, 2]), &lv(&[2, 1]))
        .unwrap()
        .then(|| vertex_multiset_test(&p, &lv(&[1, 2]), &lv(&[2, 1])))
        .unwrap()
        .then(|| compare_s(&p, &lv(&[1, 2]), &lv(&[2, 1])))
        .unwrap();
    assert!(v.is_not_equivalent());
    assert_eq!(v.tests_run, vec!["type", "vertex_multiset"]);
    let json = serde_json::to_value(&v).unwrap();
    assert_eq!(json["status"], "NotEquivalent");
}
