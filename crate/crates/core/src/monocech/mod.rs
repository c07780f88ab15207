//! Sign-pattern decomposition of the Čech complex of a monomial ideal.
//!
//! For `R = K[Y_1..Y_d][X_1..X_m]` and a monomial ideal `I`, the Čech complex is
//! `Z^{d+m}`-graded and its piece at a multidegree `α` depends only on the set
//! `N(α)` of negative coordinates. Computing one small complex per sign pattern
//! therefore determines every graded piece of `H^i_I(R)`.

mod context;
mod engine;
mod ideal;
mod shape;
mod slice;
mod support;

pub use context::{submasks, SignPattern, VariableContext, MAX_VARS};
pub use engine::{
    hilbert_pair, pattern_report, piece_dimension, piece_nonzero, strand_dimension, Contributor, LocalCohomology,
    PatternReport,
};
pub use ideal::{Localized, MonomialIdeal};
pub use shape::{lattice_count, DegreeSet, DimValue, PatternShape};
pub use slice::{cohomology_profile, slice, slice_complex, CohomologyProfile, SliceComplex};
pub use support::{support_dim, support_min_primes, MonomialPrime, SupportSweep};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonoError {
    #[error("at least one degree-1 variable is required")]
    NoDegreeOneVariables,
    #[error("{0} variables exceed the supported maximum")]
    TooManyVariables(usize),
    #[error("variable names must be nonempty")]
    EmptyName,
    #[error("duplicate variable name {0:?}")]
    DuplicateName(String),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("the zero ideal has no generators")]
    ZeroIdeal,
    #[error("a constant generator makes the unit ideal")]
    UnitIdeal,
    #[error("generator {generator} has {found} exponents, expected {expected}")]
    ExponentLength {
        generator: usize,
        expected: usize,
        found: usize,
    },
    #[error("only degree-0 variables can be inverted")]
    LocalizeNonY,
    #[error("strand has {found} coordinates, expected {expected}")]
    StrandLength { expected: usize, found: usize },
    #[error("dimension over K needs a fixed Y-strand when d = {d} > 0")]
    NeedsStrand { d: usize },
    #[error("H^{index} has infinite-dimensional graded pieces")]
    InfiniteDims { index: usize },
    #[error("degree set {degrees} of H^{index} for {ideal} is not one of the five shapes")]
    ShapeViolation {
        ideal: String,
        index: usize,
        degrees: String,
    },
}
