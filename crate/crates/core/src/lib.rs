//! Exact localization invariants of Hamiltonian circle actions.
//!
//! The invariant `S` of a circle action is an exponential sum
//! `Σ_j e^{γ_j u} P_j(u)` with Laurent polynomial coefficients, obtained by
//! summing the fixed-point contributions of the action and recentering by the
//! average of the Hamiltonian. Two actions that are homotopic through
//! Hamiltonian circle actions have equal invariants, so the invariant and
//! the cruder tests derived from it decide many pairs exactly.
//!
//! Two families of manifolds are supported:
//!
//! * symplectic toric manifolds, given by a Delzant polytope ([`polytope`],
//!   [`toric`]);
//! * coadjoint orbits of `SU(n)`, given by a spectrum ([`coadjoint`]).
//!
//! All arithmetic is exact. Non-generic circles, whose fixed points are not
//! isolated, are handled by perturbing the generator along a probe direction
//! and taking the `ε⁰` coefficient of the resulting series ([`localization`]).
//!
//! ```
//! use equiloc_core::{build_model, s_class_general, ModelKind, LatticeVector, Probe, Rational};
//!
//! let square = build_model(&ModelKind::ProductOfSegments {
//!     sigma: Rational::from_integer(1),
//!     tau: Rational::from_integer(1),
//! })
//! .unwrap();
//! let s = s_class_general(&square, &LatticeVector(vec![1, 0]), &Probe::Auto).unwrap();
//! assert_eq!(s.to_text(), "(-1)u^-1 e^{-1/2 u} + (1)u^-1 e^{1/2 u}");
//! ```

pub mod coadjoint;
pub mod equivalence;
pub mod expsum;
pub mod localization;
pub mod numeric;
pub mod polytope;
pub mod toric;

use thiserror::Error;

pub use coadjoint::{
    cpn_decide, flag_necessary, grassmann_necessary, kappa_orbit, orbit_value_tests, s_class_orbit,
    weyl_orbit_test, CoadjointError, OrbitSpec, SuVector,
};
pub use equivalence::{EquivalenceError, Status, Verdict};
pub use expsum::{exp_sum_equal, Basis, ExpSum, ExpSumError, Frequency};
pub use localization::LocalizationError;
pub use numeric::{LaurentPoly, NumericError, Rational, SymPoly};
pub use polytope::{
    build_model, DelzantPolytope, HalfSpace, LatticeVector, ModelKind, ParametricModel, ParametricPolytope,
    PolytopeError,
};
pub use toric::{kappa_toric, s_class_general, s_class_parametric, s_class_type0, Probe, ToricError};

/// Any error raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error(transparent)]
    ExpSum(#[from] ExpSumError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Localization(#[from] LocalizationError),
    #[error(transparent)]
    Toric(#[from] ToricError),
    #[error(transparent)]
    Equivalence(#[from] EquivalenceError),
    #[error(transparent)]
    Coadjoint(#[from] CoadjointError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
