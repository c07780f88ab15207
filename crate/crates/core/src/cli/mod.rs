//! Command-line front end: spec files, subcommands and reports.

mod commands;
mod report;
mod spec;

pub use commands::{run, run_to_string, thread_limit, DegreeRange, Strand, EXIT_FAILED, EXIT_INPUT, EXIT_OK};
pub use report::{
    ContributorRow, DimensionRow, HilbertRow, HomologyRow, IdealEcho, JsonInt, PatternRow, PolynomialRow,
    ReportDocument, SupportRow, VerificationSummary, SCHEMA_VERSION,
};
pub use spec::{parse_monomial, parse_spec, parse_spec_str, IdealSpec, SpecError};
