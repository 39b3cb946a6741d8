//! Delzant polytopes: validation, vertices, edge frames, volume, center of mass.

pub mod linalg;
mod geometry;
mod models;
mod parametric;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numeric::Rational;

pub use models::{build_model, ModelKind};
pub use parametric::{ParametricModel, ParametricPolytope};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("zero normal vector")]
    ZeroNormal,
    #[error("non-primitive normal {0:?}")]
    NonPrimitiveNormal(Vec<i64>),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("polytope is unbounded")]
    Unbounded,
    #[error("constraint system has no vertex")]
    Empty,
    #[error("degenerate vertex {vertex:?}: {facets} facets meet there")]
    Degenerate { vertex: Vec<Rational>, facets: usize },
    #[error("not a Delzant polytope: {0}")]
    NotDelzant(Box<DelzantReport>),
    #[error("infeasible parameters: {0}")]
    InfeasibleParameters(String),
    #[error("zero vector")]
    ZeroVector,
    #[error("matrix is not in GL(n, Z)")]
    NotUnimodular,
    #[error("parametric mode needs a product of simplices: {0}")]
    NotParametric(String),
}

/// An integer vector in the lattice `ℤⁿ` or its dual.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticeVector(pub Vec<i64>);

impl LatticeVector {
    pub fn new(entries: Vec<i64>) -> Self {
        LatticeVector(entries)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Pairing with a rational point.
    pub fn pair(&self, p: &[Rational]) -> Rational {
        self.0.iter().zip(p).map(|(&a, x)| x * Rational::from_integer(a)).sum()
    }

    /// Pairing with another integer vector.
    pub fn dot(&self, v: &[i64]) -> i64 {
        self.0.iter().zip(v).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, m: i64) -> LatticeVector {
        LatticeVector(self.0.iter().map(|x| x * m).collect())
    }
}

impl Deref for LatticeVector {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for LatticeVector {
    fn from(v: Vec<i64>) -> Self {
        LatticeVector(v)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// The constraint `⟨x, normal⟩ ≤ offset` with a primitive integer normal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawHalfSpace", into = "RawHalfSpace")]
pub struct HalfSpace {
    normal: Vec<i64>,
    offset: Rational,
}

#[derive(Serialize, Deserialize)]
struct RawHalfSpace {
    normal: Vec<i64>,
    offset: Rational,
}

impl TryFrom<RawHalfSpace> for HalfSpace {
    type Error = PolytopeError;
    fn try_from(r: RawHalfSpace) -> Result<Self, Self::Error> {
        HalfSpace::new(r.normal, r.offset)
    }
}

impl From<HalfSpace> for RawHalfSpace {
    fn from(h: HalfSpace) -> Self {
        RawHalfSpace { normal: h.normal, offset: h.offset }
    }
}

impl HalfSpace {
    pub fn new(normal: Vec<i64>, offset: Rational) -> Result<Self, PolytopeError> {
        match linalg::gcd_i64(&normal) {
            0 => Err(PolytopeError::ZeroNormal),
            1 => Ok(HalfSpace { normal, offset }),
            _ => Err(PolytopeError::NonPrimitiveNormal(normal)),
        }
    }

    pub fn normal(&self) -> &[i64] {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    /// `offset − ⟨x, normal⟩`, nonnegative exactly on the half-space.
    pub fn slack(&self, x: &[Rational]) -> Rational {
        &self.offset - LatticeVector(self.normal.clone()).pair(x)
    }
}

/// A vertex with its incident facets and primitive edge directions.
///
/// `frame[i]` leaves the facet `facets[i]` and stays on all other incident
/// facets; it points away from the vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub point: Vec<Rational>,
    pub facets: Vec<usize>,
    pub frame: Vec<Vec<i64>>,
}

/// One failed Delzant condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    IncidenceCount { vertex: Vec<Rational>, facets: usize },
    NonPrimitiveEdge { vertex: Vec<Rational>, direction: Vec<Rational> },
    FrameDeterminant { vertex: Vec<Rational>, det: Rational },
    RedundantFacet { facet: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pt = |v: &[Rational]| format!("({})", v.iter().join(","));
        match self {
            Violation::IncidenceCount { vertex, facets } => {
                write!(f, "{} facets meet at {}", facets, pt(vertex))
            }
            Violation::NonPrimitiveEdge { vertex, direction } => {
                write!(f, "edge direction ({}) at {} is not a primitive lattice vector", direction.iter().join(","), pt(vertex))
            }
            Violation::FrameDeterminant { vertex, det } => {
                write!(f, "edge frame at {} has determinant {}", pt(vertex), det)
            }
            Violation::RedundantFacet { facet } => write!(f, "half-space {facet} is not a facet"),
        }
    }
}

/// Result of [`check_delzant`]; empty `violations` means the polytope passes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DelzantReport {
    pub vertex_count: usize,
    pub violations: Vec<Violation>,
}

impl DelzantReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for DelzantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "pass ({} vertices)", self.vertex_count)
        } else {
            write!(f, "{}", self.violations.iter().join("; "))
        }
    }
}

fn check_dims(n: usize, halfspaces: &[HalfSpace]) -> Result<(), PolytopeError> {
    for h in halfspaces {
        if h.normal.len() != n {
            return Err(PolytopeError::DimensionMismatch { expected: n, got: h.normal.len() });
        }
    }
    Ok(())
}

/// Every feasible point cut out by `n` linearly independent constraints, with
/// all constraints tight there. Sorted lexicographically.
fn raw_vertices(n: usize, halfspaces: &[HalfSpace]) -> Result<BTreeMap<Vec<Rational>, Vec<usize>>, PolytopeError> {
    check_dims(n, halfspaces)?;
    let mut found: BTreeMap<Vec<Rational>, Vec<usize>> = BTreeMap::new();
    for subset in (0..halfspaces.len()).combinations(n) {
        let a: linalg::Matrix = subset
            .iter()
            .map(|&i| halfspaces[i].normal.iter().map(|&x| Rational::from_integer(x)).collect())
            .collect();
        let b: Vec<Rational> = subset.iter().map(|&i| halfspaces[i].offset.clone()).collect();
        let Some(x) = linalg::solve(&a, &b) else { continue };
        if found.contains_key(&x) {
            continue;
        }
        let mut tight = Vec::new();
        let mut feasible = true;
        for (i, h) in halfspaces.iter().enumerate() {
            let s = h.slack(&x);
            if s.is_negative() {
                feasible = false;
                break;
            }
            if s.is_zero() {
                tight.push(i);
            }
        }
        if feasible {
            found.insert(x, tight);
        }
    }
    if found.is_empty() {
        return Err(PolytopeError::Empty);
    }
    Ok(found)
}

/// Edge directions at a simple vertex as the columns of `−N⁻¹`.
fn edge_columns(halfspaces: &[HalfSpace], facets: &[usize]) -> Vec<Vec<Rational>> {
    let nmat: linalg::Matrix = facets
        .iter()
        .map(|&i| halfspaces[i].normal.iter().map(|&x| Rational::from_integer(x)).collect())
        .collect();
    let inv = linalg::inverse(&nmat).expect("incident normals at a simple vertex are independent");
    let n = facets.len();
    (0..n).map(|j| (0..n).map(|i| -&inv[i][j]).collect()).collect()
}

fn check_bounded(halfspaces: &[HalfSpace], vertices: &BTreeMap<Vec<Rational>, Vec<usize>>) -> Result<(), PolytopeError> {
    for facets in vertices.values() {
        for dir in edge_columns(halfspaces, facets) {
            let escapes = halfspaces
                .iter()
                .all(|h| !LatticeVector(h.normal.clone()).pair(&dir).is_positive());
            if escapes {
                return Err(PolytopeError::Unbounded);
            }
        }
    }
    Ok(())
}

/// Vertices of `{x : ⟨x, v_i⟩ ≤ k_i}`, sorted lexicographically.
pub fn enumerate_vertices(n: usize, halfspaces: &[HalfSpace]) -> Result<Vec<Vec<Rational>>, PolytopeError> {
    let raw = raw_vertices(n, halfspaces)?;
    for (x, tight) in &raw {
        if tight.len() != n {
            return Err(PolytopeError::Degenerate { vertex: x.clone(), facets: tight.len() });
        }
    }
    check_bounded(halfspaces, &raw)?;
    Ok(raw.into_keys().collect())
}

/// Checks the Delzant conditions vertex by vertex and reports every violation.
///
/// Fails only when the system has no vertices or is unbounded.
pub fn check_delzant(n: usize, halfspaces: &[HalfSpace]) -> Result<DelzantReport, PolytopeError> {
    let raw = raw_vertices(n, halfspaces)?;
    let mut violations = Vec::new();
    let simple: BTreeMap<_, _> = raw.iter().filter(|(_, t)| t.len() == n).collect();
    for (x, tight) in &raw {
        if tight.len() != n {
            violations.push(Violation::IncidenceCount { vertex: x.clone(), facets: tight.len() });
            continue;
        }
        let cols = edge_columns(halfspaces, tight);
        let mut frame = Vec::new();
        for c in &cols {
            if !linalg::is_primitive_integer(c) {
                violations.push(Violation::NonPrimitiveEdge { vertex: x.clone(), direction: c.clone() });
            }
            frame.push(linalg::primitive_direction(c));
        }
        let d = linalg::det(&linalg::from_integers(&frame));
        if d.abs() != Rational::one() {
            violations.push(Violation::FrameDeterminant { vertex: x.clone(), det: d });
        }
    }
    if simple.len() == raw.len() {
        check_bounded(halfspaces, &raw)?;
    }
    for (i, _) in halfspaces.iter().enumerate() {
        let on_facet: linalg::Matrix = raw
            .iter()
            .filter(|(_, t)| t.contains(&i))
            .map(|(x, _)| x.clone())
            .collect();
        let affine_dim = match on_facet.split_first() {
            None => None,
            Some((first, rest)) => {
                let diffs: linalg::Matrix = rest
                    .iter()
                    .map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect())
                    .collect();
                Some(if diffs.is_empty() { 0 } else { linalg::rank(&diffs) })
            }
        };
        if affine_dim != Some(n - 1) {
            violations.push(Violation::RedundantFacet { facet: i });
        }
    }
    Ok(DelzantReport { vertex_count: raw.len(), violations })
}

/// A validated Delzant polytope with eagerly derived vertex data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DelzantPolytope {
    n: usize,
    halfspaces: Vec<HalfSpace>,
    vertices: Vec<Vertex>,
}

impl DelzantPolytope {
    pub fn new(n: usize, halfspaces: Vec<HalfSpace>) -> Result<Self, PolytopeError> {
        let raw = raw_vertices(n, &halfspaces)?;
        for (x, tight) in &raw {
            if tight.len() != n {
                return Err(PolytopeError::Degenerate { vertex: x.clone(), facets: tight.len() });
            }
        }
        check_bounded(&halfspaces, &raw)?;
        let report = check_delzant(n, &halfspaces)?;
        if !report.passed() {
            return Err(PolytopeError::NotDelzant(Box::new(report)));
        }
        let vertices = raw
            .into_iter()
            .map(|(point, facets)| {
                let frame = edge_columns(&halfspaces, &facets)
                    .iter()
                    .map(|c| linalg::primitive_direction(c))
                    .collect();
                Vertex { point, facets, frame }
            })
            .collect();
        Ok(DelzantPolytope { n, halfspaces, vertices })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_points(&self) -> Vec<Vec<Rational>> {
        self.vertices.iter().map(|v| v.point.clone()).collect()
    }

    /// The translate `Δ + t`.
    pub fn translate(&self, t: &[Rational]) -> DelzantPolytope {
        let halfspaces = self
            .halfspaces
            .iter()
            .map(|h| HalfSpace {
                normal: h.normal.clone(),
                offset: &h.offset + LatticeVector(h.normal.clone()).pair(t),
            })
            .collect();
        DelzantPolytope {
            n: self.n,
            halfspaces,
            vertices: self
                .vertices
                .iter()
                .map(|v| Vertex {
                    point: v.point.iter().zip(t).map(|(a, b)| a + b).collect(),
                    facets: v.facets.clone(),
                    frame: v.frame.clone(),
                })
                .collect(),
        }
    }

    /// The translate with center of mass at the origin.
    pub fn recenter(&self) -> DelzantPolytope {
        let cm = self.center_of_mass();
        self.translate(&cm.iter().map(|x| -x).collect::<Vec<_>>())
    }

    /// The image `V(Δ)` under a unimodular integer matrix.
    pub fn transform(&self, v: &[Vec<i64>]) -> Result<DelzantPolytope, PolytopeError> {
        let vm = linalg::from_integers(v);
        if vm.len() != self.n || linalg::det(&vm).abs() != Rational::one() {
            return Err(PolytopeError::NotUnimodular);
        }
        let inv = linalg::inverse(&vm).ok_or(PolytopeError::NotUnimodular)?;
        let inv_t = linalg::transpose(&inv);
        let halfspaces = self
            .halfspaces
            .iter()
            .map(|h| {
                let nv: Vec<Rational> = h.normal.iter().map(|&x| Rational::from_integer(x)).collect();
                let img = linalg::mat_vec(&inv_t, &nv);
                HalfSpace::new(linalg::primitive_direction(&img), h.offset.clone())
            })
            .collect::<Result<Vec<_>, _>>()?;
        DelzantPolytope::new(self.n, halfspaces)
    }
}
