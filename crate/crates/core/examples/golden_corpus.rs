//! The built-in worked examples and their verification.

use lclab::verify::{golden_corpus, run_corpus, SuiteOptions};

fn main() {
    for case in golden_corpus() {
        println!(
            "{:<20} {} ({} expectations)",
            case.id,
            case.description,
            case.spec.expect.len()
        );
    }
    let report = run_corpus(&SuiteOptions::default());
    println!("{}", report.to_string().lines().last().unwrap_or_default());
}
