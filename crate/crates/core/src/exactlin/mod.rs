//! Exact linear algebra over the integers and rationals, plus the binomial
//! utilities behind every dimension formula. No floating point is used.

mod complex;
mod matrix;
mod poly;
mod ratmat;

pub use complex::{alternating_sum, cohomology_dims, induced_map_rank, CohomologyBasis, FiniteComplex};
pub use matrix::{rank, ExactMatrix};
pub use poly::{binom_ext, IntegerPolynomial, Validity};
pub use ratmat::RatMatrix;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("a complex needs at least one level")]
    EmptyComplex,
    #[error("{levels} levels need {} maps, got {maps}", levels - 1)]
    MapCount { levels: usize, maps: usize },
    #[error("differential out of level {level}: expected {expected:?}, found {found:?}")]
    Shape {
        level: usize,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("d∘d ≠ 0 starting at level {level}")]
    NotAComplex { level: usize },
    #[error("interpolation nodes must be distinct")]
    DuplicateSample,
    #[error("samples are not those of an integer-valued polynomial")]
    NotIntegerValued,
}
