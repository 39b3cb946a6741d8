//! Comparison of moment polytopes up to translation and `GL(n, ℤ)`.

use itertools::Itertools;
use serde::Serialize;

use crate::numeric::Rational;
use crate::polytope::{linalg, DelzantPolytope};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolytopeComparison {
    pub equal_centered: bool,
    /// A unimodular `V` with `V(Δ_P − Cm_P) = Δ_Q − Cm_Q`.
    pub gl_witness: Option<Vec<Vec<i64>>>,
}

fn centered_vertices(p: &DelzantPolytope) -> Vec<Vec<Rational>> {
    let cm = p.center_of_mass();
    let mut v: Vec<Vec<Rational>> = p
        .vertices()
        .iter()
        .map(|x| x.point.iter().zip(&cm).map(|(a, b)| a - b).collect())
        .collect();
    v.sort();
    v
}

/// Frame columns as a matrix whose `i`-th column is `frame[i]`.
fn frame_matrix(frame: &[Vec<i64>]) -> linalg::Matrix {
    let n = frame.len();
    (0..n)
        .map(|r| (0..n).map(|c| Rational::from_integer(frame[c][r])).collect())
        .collect()
}

/// Compares centered vertex sets and searches a lattice isomorphism.
///
/// A unimodular map sends a vertex frame (a lattice basis) onto a vertex
/// frame, so every candidate is `G_π F⁻¹` for one fixed frame `F` of `P`, a
/// frame `G` of `Q` and a column permutation `π`.
pub fn polytope_tests(p: &DelzantPolytope, q: &DelzantPolytope) -> PolytopeComparison {
    if p.dim() != q.dim() {
        return PolytopeComparison { equal_centered: false, gl_witness: None };
    }
    let cp = centered_vertices(p);
    let cq = centered_vertices(q);
    let equal_centered = cp == cq;
    let mut gl_witness = None;
    if cp.len() == cq.len() {
        let f = frame_matrix(&p.vertices()[0].frame);
        let f_inv = linalg::inverse(&f).expect("Delzant frames are bases");
        'search: for w in q.vertices() {
            for perm in (0..q.dim()).permutations(q.dim()) {
                let g: Vec<Vec<i64>> = perm.iter().map(|&i| w.frame[i].clone()).collect();
                let v = linalg::mat_mul(&frame_matrix(&g), &f_inv);
                let mut img: Vec<Vec<Rational>> = cp.iter().map(|x| linalg::mat_vec(&v, x)).collect();
                img.sort();
                if img == cq {
                    gl_witness = Some(
                        v.iter()
                            .map(|row| row.iter().map(|x| x.to_i64().expect("integral")).collect())
                            .collect(),
                    );
                    break 'search;
                }
            }
        }
    }
    PolytopeComparison { equal_centered, gl_witness }
}
