//! Polytopes whose offsets are the independent symbols `σ`, `τ`.
//!
//! Restricted to products of simplices, where the center of mass is the
//! vertex average and therefore linear in the symbols.

use serde::{Deserialize, Serialize};

use super::{linalg, DelzantPolytope, ModelKind, PolytopeError};
use crate::expsum::Basis;
use crate::numeric::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ParametricModel {
    Simplex { n: usize },
    #[serde(alias = "s2xs2")]
    ProductOfSegments,
    /// Only `a = 0` is a product of simplices.
    PlBundle { a: Vec<i64> },
    /// Only `k = 0` is a product of simplices.
    Hirzebruch { k: i64 },
}

/// Vertex coordinates as linear forms over the basis `[1, sigma(, tau)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParametricPolytope {
    basis: Basis,
    representative: DelzantPolytope,
    vertices: Vec<Vec<Vec<Rational>>>,
}

impl ParametricPolytope {
    pub fn new(model: &ParametricModel) -> Result<Self, PolytopeError> {
        let one = Rational::one();
        let (kind, basis) = match model {
            ParametricModel::Simplex { n } => (
                ModelKind::Simplex { n: *n, sigma: one },
                Basis::with_symbols(&["sigma"]),
            ),
            ParametricModel::ProductOfSegments => (
                ModelKind::ProductOfSegments { sigma: one.clone(), tau: one },
                Basis::with_symbols(&["sigma", "tau"]),
            ),
            ParametricModel::PlBundle { a } => {
                if a.iter().any(|&x| x != 0) {
                    return Err(PolytopeError::NotParametric(format!(
                        "bundle with a = {a:?} has a center of mass that is not linear in sigma, tau"
                    )));
                }
                (
                    ModelKind::PlBundle { a: a.clone(), sigma: one.clone(), tau: one },
                    Basis::with_symbols(&["sigma", "tau"]),
                )
            }
            ParametricModel::Hirzebruch { k } => {
                if *k != 0 {
                    return Err(PolytopeError::NotParametric(format!(
                        "Hirzebruch surface with k = {k} has a center of mass that is not linear in sigma, tau"
                    )));
                }
                (
                    ModelKind::ProductOfSegments { sigma: one.clone(), tau: one },
                    Basis::with_symbols(&["sigma", "tau"]),
                )
            }
        };
        let representative = super::build_model(&kind)?;
        let hs = representative.halfspaces();
        let dim = basis.dim();
        // The builders list the zero-offset facets first, then sigma, then tau.
        let symbolic_offset = |i: usize| {
            let mut f = vec![Rational::zero(); dim];
            let n = representative.dim();
            if i >= n {
                f[i - n + 1] = Rational::one();
            }
            f
        };
        let vertices = representative
            .vertices()
            .iter()
            .map(|v| {
                let nmat: linalg::Matrix = v
                    .facets
                    .iter()
                    .map(|&i| hs[i].normal().iter().map(|&x| Rational::from_integer(x)).collect())
                    .collect();
                let inv = linalg::inverse(&nmat).expect("simple vertex");
                let offsets: Vec<Vec<Rational>> = v.facets.iter().map(|&i| symbolic_offset(i)).collect();
                (0..representative.dim())
                    .map(|r| {
                        (0..dim)
                            .map(|b| inv[r].iter().zip(&offsets).map(|(m, o)| m * &o[b]).sum())
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(ParametricPolytope { basis, representative, vertices })
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.representative.dim()
    }

    /// The concrete polytope used for combinatorics and edge frames.
    pub fn representative(&self) -> &DelzantPolytope {
        &self.representative
    }

    /// `vertices()[j][i]` is the linear form of coordinate `i` of vertex `j`.
    pub fn vertices(&self) -> &[Vec<Vec<Rational>>] {
        &self.vertices
    }

    /// Center of mass as linear forms (the vertex average).
    pub fn center_of_mass(&self) -> Vec<Vec<Rational>> {
        let m = Rational::from_integer(self.vertices.len() as i64).recip().expect("nonempty");
        (0..self.dim())
            .map(|i| {
                (0..self.basis.dim())
                    .map(|b| self.vertices.iter().map(|v| &v[i][b] * &m).sum())
                    .collect()
            })
            .collect()
    }

    /// The concrete polytope at the given symbol values.
    pub fn specialize(&self, symbols: &[Rational]) -> Result<DelzantPolytope, PolytopeError> {
        let n = self.dim();
        let hs = self
            .representative
            .halfspaces()
            .iter()
            .enumerate()
            .map(|(i, h)| {
                let off = if i >= n { symbols[i - n].clone() } else { Rational::zero() };
                super::HalfSpace::new(h.normal().to_vec(), off)
            })
            .collect::<Result<Vec<_>, _>>()?;
        DelzantPolytope::new(n, hs)
    }
}
