//! Volume, center of mass and face type.

use super::{linalg, DelzantPolytope, LatticeVector, PolytopeError};
use crate::numeric::Rational;

impl DelzantPolytope {
    /// Simplices of a pulling triangulation: each face is coned from its
    /// lexicographically smallest vertex over the facets of the face that miss it.
    pub fn triangulate(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.triangulate_face(&[], self.n, &mut out);
        out
    }

    fn face_vertices(&self, forced: &[usize]) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&i| forced.iter().all(|f| self.vertices[i].facets.contains(f)))
            .collect()
    }

    fn triangulate_face(&self, forced: &[usize], dim: usize, out: &mut Vec<Vec<usize>>) {
        let verts = self.face_vertices(forced);
        let apex = verts[0];
        if dim == 0 {
            out.push(vec![apex]);
            return;
        }
        for j in 0..self.halfspaces.len() {
            if forced.contains(&j) || self.vertices[apex].facets.contains(&j) {
                continue;
            }
            let mut sub: Vec<usize> = forced.to_vec();
            sub.push(j);
            if verts.iter().any(|&v| self.vertices[v].facets.contains(&j)) {
                let mut inner = Vec::new();
                self.triangulate_face(&sub, dim - 1, &mut inner);
                for mut s in inner {
                    s.push(apex);
                    out.push(s);
                }
            }
        }
    }

    fn simplex_volume(&self, s: &[usize]) -> Rational {
        let base = &self.vertices[s[0]].point;
        let m: linalg::Matrix = s[1..]
            .iter()
            .map(|&i| self.vertices[i].point.iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        linalg::det(&m).abs() * Rational::inv_factorial(self.n as u32)
    }

    /// Euclidean volume.
    pub fn volume(&self) -> Rational {
        self.triangulate().iter().map(|s| self.simplex_volume(s)).sum()
    }

    /// Exact centroid, weighting simplex centroids by volume.
    pub fn center_of_mass(&self) -> Vec<Rational> {
        let mut total = Rational::zero();
        let mut acc = vec![Rational::zero(); self.n];
        let share = Rational::frac(1, self.n as i64 + 1);
        for s in self.triangulate() {
            let vol = self.simplex_volume(&s);
            for &i in &s {
                for (a, x) in acc.iter_mut().zip(&self.vertices[i].point) {
                    *a += &(&vol * x * &share);
                }
            }
            total += &vol;
        }
        acc.into_iter().map(|a| a / &total).collect()
    }

    /// Isotropy weights `⟨ρ, X⟩` at each vertex, in frame order.
    pub fn weights(&self, x: &LatticeVector) -> Vec<Vec<i64>> {
        self.vertices
            .iter()
            .map(|v| v.frame.iter().map(|r| x.dot(r)).collect())
            .collect()
    }

    /// Largest dimension of a face whose edge directions are all orthogonal to `X`.
    pub fn face_type(&self, x: &LatticeVector) -> Result<usize, PolytopeError> {
        if x.len() != self.n {
            return Err(PolytopeError::DimensionMismatch { expected: self.n, got: x.len() });
        }
        if x.is_zero() {
            return Err(PolytopeError::ZeroVector);
        }
        Ok(self
            .weights(x)
            .iter()
            .map(|w| w.iter().filter(|&&a| a == 0).count())
            .max()
            .unwrap_or(0))
    }
}
