//! Weyl-algebra actions on modules presented pattern by pattern.
//!
//! A [`PatternModule`] stores one finite-dimensional space per sign pattern
//! and the maps between neighbouring patterns. Multiplication by `X_v` or
//! `Y_v`, and `∂_v` for an `X`-variable, are isomorphisms away from the
//! `α_v = -1` / `α_v = 0` boundary, so Koszul and de Rham homology only see
//! finitely many boundary slices, each counted with a lattice multiplicity.

mod euler;
mod homology;
mod module;

pub use euler::{euler_eigencheck, euler_matrix, gen_eulerian_exponent};
pub use homology::{
    coarse_dimension, derham_homology, four_term_check, koszul_homology_x, koszul_homology_y, pattern_count, y_socle,
    Homology, HomologyKind, KoszulConvention,
};
pub use module::{square_commutes, CechModule, LocalizationModule, PatternModule};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeylError {
    #[error("the piece at {0:?} is zero")]
    ZeroPiece(Vec<i64>),
    #[error("the Euler operator is not scalar on the piece at {0:?}")]
    NotEulerian(Vec<i64>),
    #[error("variable {0} is not a degree-1 variable")]
    NotAnXVariable(usize),
    #[error("Koszul homology in Y needs at least one degree-0 variable")]
    NoYVariables,
    #[error("multidegree has {found} coordinates, expected {expected}")]
    DegreeLength { expected: usize, found: usize },
}
