//! Independent checks of the sign-pattern engine.
//!
//! The window oracle recomputes every Čech piece straight from divisibility,
//! the theorem suite probes the structural laws the engine must satisfy, and
//! the golden corpus pins worked examples to exact values.

mod corpus;
mod oracle;
mod report;
mod suite;
mod sweep;

pub use corpus::{
    attached_modules, check_expectations, golden_corpus, run_corpus, run_spec, weyl_checks, weyl_oracle_checks, Check,
    Expectation, GoldenCase, ModuleRef, Origin,
};
pub use oracle::{
    box_points, localization_witness, oracle_compare, window_complex, window_derham, window_koszul_x, window_oracle,
    window_profile, window_y_socle,
};
pub use report::{CheckResult, Status, VerificationReport, Witness};
pub use suite::{theorem_suite, witness_alpha, SuiteOptions};
pub use sweep::{
    exhaustive_ideals, random_ideal, random_instances, sweep, two_tail_search, SweepSummary, TwoTailSearch,
};
