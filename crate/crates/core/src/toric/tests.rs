use super::*;
use crate::polytope::{build_model, ModelKind, ParametricModel};

fn q(p: i64, d: i64) -> Rational {
    Rational::frac(p, d)
}

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

/// Sum of `c · u^d · e^{γu}` terms.
fn sum(terms: &[(Rational, Rational, i32)]) -> ExpSum {
    ExpSum::canonicalize(
        terms.iter().map(|(g, c, d)| (Frequency::scalar(g.clone()), LaurentPoly::monomial(c.clone(), *d))),
    )
    .unwrap()
}

/// Direct evaluation of the vertex sum at a numeric `u`, term by term.
fn brute_force(p: &DelzantPolytope, x: &LatticeVector, u: f64) -> f64 {
    let qv = x.pair(&p.center_of_mass()).to_f64();
    let n = p.dim() as i32;
    fixed_points(p, x)
        .iter()
        .map(|fp| {
            let prod: i64 = fp.weights.iter().product();
            ((qv - fp.moment_value.to_f64()) * u).exp() / (prod as f64 * u.powi(n))
        })
        .sum()
}

#[test]
fn product_of_segments_type0_is_sinh_product() {
    // (4/(b1 b2 u²)) sinh(σ b1 u/2) sinh(τ b2 u/2), expanded into four exponentials.
    let (s, t, b1, b2) = (2, 3, 1, -2);
    let got = s_class_type0(&square(s, t), &lv(&[b1, b2])).unwrap();
    let c = q(1, b1 * b2);
    let (x, y) = (q(s * b1, 2), q(t * b2, 2));
    let expect = sum(&[
        (&x + &y, c.clone(), -2),
        (&x - &y, -c.clone(), -2),
        (-&x + &y, -c.clone(), -2),
        (-&x - &y, c, -2),
    ]);
    assert_eq!(got, expect);
}

#[test]
fn projective_line() {
    let p = build_model(&ModelKind::Simplex { n: 1, sigma: z(3) }).unwrap();
    let got = s_class_type0(&p, &lv(&[1])).unwrap();
    assert_eq!(got, sum(&[(q(3, 2), z(1), -1), (q(-3, 2), z(-1), -1)]));
}

#[test]
fn hirzebruch_type0_four_terms() {
    let (k, s, t) = (1, 1, 2);
    let (b1, b2) = (1, 2);
    let b0 = b1 - k * b2;
    let p = hirz(k, s, t);
    let qv = lv(&[b1, b2]).pair(&p.center_of_mass());
    let a = q(1, b1 * b2);
    let bb = q(1, b0 * b2);
    let expect = sum(&[
        (qv.clone(), a.clone(), -2),
        (&qv - z(t * b2), -bb.clone(), -2),
        (&qv - z(s * b1), -a, -2),
        (&qv - z(t * b2 + s * b0), bb, -2),
    ]);
    assert_eq!(s_class_type0(&p, &lv(&[b1, b2])).unwrap(), expect);
    assert_eq!(s_class_general(&p, &lv(&[b1, b2]), &Probe::Auto).unwrap(), expect);
}

#[test]
fn hirzebruch_horizontal_vector() {
    let (k, s, t, b1) = (1, 1, 2, 3);
    let p = hirz(k, s, t);
    let x = lv(&[b1, 0]);
    let qv = x.pair(&p.center_of_mass());
    let lambda = z(t - k * s);
    let expect = sum(&[
        (qv.clone(), z(t) / z(b1), -1),
        (qv.clone(), -z(k) / z(b1 * b1), -2),
        (&qv - z(s * b1), -(lambda / z(b1)), -1),
        (&qv - z(s * b1), z(k) / z(b1 * b1), -2),
    ]);
    assert_eq!(s_class_general(&p, &x, &Probe::Auto).unwrap(), expect);
    assert!(matches!(s_class_type0(&p, &x), Err(ToricError::DegenerateWeight { .. })));
}

#[test]
fn square_horizontal_vector_and_probe_independence() {
    let (s, t, b1) = (3, 5, 2);
    let p = square(s, t);
    let x = lv(&[b1, 0]);
    let half = q(s * b1, 2);
    let expect = sum(&[(half.clone(), z(t) / z(b1), -1), (-half, -(z(t) / z(b1)), -1)]);
    for probe in [Probe::Auto, Probe::Vector(vec![0, 1]), Probe::Vector(vec![7, -3])] {
        assert_eq!(s_class_general(&p, &x, &probe).unwrap(), expect);
    }
    assert_eq!(
        s_class_general(&p, &x, &Probe::Vector(vec![1, 0])),
        Err(ToricError::Localization(LocalizationError::BadProbe { probe: vec![1, 0] }))
    );
}

#[test]
fn truncation_override() {
    let p = hirz(1, 1, 2);
    let x = lv(&[1, 0]);
    let a = s_class_general_with(&p, &x, &Probe::Auto, Some(1)).unwrap();
    let b = s_class_general_with(&p, &x, &Probe::Auto, Some(5)).unwrap();
    assert_eq!(a, b);
    assert!(matches!(
        s_class_general_with(&p, &x, &Probe::Auto, Some(0)),
        Err(ToricError::Localization(LocalizationError::InsufficientTruncation { .. }))
    ));
}

#[test]
fn numeric_value_matches_brute_force() {
    let p = square(1, 1);
    let x = lv(&[1, 1]);
    let s = s_class_type0(&p, &x).unwrap();
    let a = s.eval_numeric(0.5, &[]);
    assert!((a - brute_force(&p, &x, 0.5)).abs() < 1e-9);
}

#[test]
fn kappa_examples() {
    assert_eq!(kappa_toric(&square(1, 1), &lv(&[1, 2])).unwrap().value, q(3, 2));
    assert_eq!(kappa_toric(&hirz(1, 1, 2), &lv(&[1, 0])).unwrap().value, q(4, 9));
    let centered = hirz(1, 1, 2).recenter();
    assert_eq!(kappa_toric(&centered, &lv(&[2, -1])).unwrap().value, z(0));
}

#[test]
fn type_signatures() {
    let p = hirz(1, 1, 2);
    let sig = type_signature(&p, &lv(&[1, 2])).unwrap();
    assert_eq!(sig.s, 0);
    assert_eq!(sig.profile.len(), 4);
    assert!(sig.profile.iter().all(|(_, d)| *d == -2));
    let sig = type_signature(&p, &lv(&[1, 0])).unwrap();
    assert_eq!(sig.s, 1);
    assert_eq!(sig.profile.iter().map(|(_, d)| *d).collect::<Vec<_>>(), vec![-1, -1]);
    let sig = type_signature(&p, &lv(&[0, 1])).unwrap();
    let mut degs: Vec<i32> = sig.profile.iter().map(|(_, d)| *d).collect();
    degs.sort();
    assert_eq!(degs, vec![-2, -2, -1]);
}

#[test]
fn scaling_law() {
    let p = hirz(2, 1, 3);
    for x in [lv(&[1, 0]), lv(&[1, 1]), lv(&[2, 1])] {
        let s = s_class_general(&p, &x, &Probe::Auto).unwrap();
        for m in [2, 3] {
            let sm = s_class_general(&p, &x.scale(m), &Probe::Auto).unwrap();
            assert_eq!(sm, s.rescale_variable(&z(m)).unwrap());
        }
    }
}

#[test]
fn parametric_square_matches_concrete() {
    let pp = ParametricPolytope::new(&ParametricModel::ProductOfSegments).unwrap();
    for x in [lv(&[1, 2]), lv(&[0, 3]), lv(&[-2, 0])] {
        let sym = s_class_parametric(&pp, &x).unwrap();
        for (s, t) in [(1, 1), (2, 5), (3, 2)] {
            let conc = s_class_general(&square(s, t), &x, &Probe::Auto).unwrap();
            assert_eq!(sym.specialize(&[z(s), z(t)]), conc);
        }
    }
}

#[test]
fn parametric_horizontal_coefficient_is_symbolic() {
    let pp = ParametricPolytope::new(&ParametricModel::ProductOfSegments).unwrap();
    let sym = s_class_parametric(&pp, &lv(&[1, 0])).unwrap();
    assert_eq!(sym.len(), 2);
    assert_eq!(sym.to_text(), "(-tau)u^-1 e^{(-1/2*sigma) u} + (tau)u^-1 e^{(1/2*sigma) u}");
}
