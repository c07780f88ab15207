//! Structural checks on one ideal, printed as a report.

use lclab::monocech::MonomialIdeal;
use lclab::verify::{theorem_suite, SuiteOptions};

fn main() {
    let ideal = MonomialIdeal::parse_standard(1, 2, &["Y1*X1", "Y1*X2"]).unwrap();
    let report = theorem_suite(&ideal, &SuiteOptions::default());
    println!("{report}");
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
