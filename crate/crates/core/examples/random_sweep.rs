//! Seeded random ideals through the theorem suite, plus a two-tail search.

use lclab::verify::{random_instances, sweep, two_tail_search, SuiteOptions};

fn main() {
    let ideals = random_instances(7, 100, 6);
    let summary = sweep(&ideals, &SuiteOptions::default());
    println!("{} ideals, shapes {:?}", summary.instances, summary.shapes);
    println!("{}", summary.report.to_string().lines().last().unwrap_or_default());

    let search = two_tail_search(11, 300, 5);
    println!(
        "two-tail search: {} of {} instances, {} with d <= m, verdict {}",
        search.two_tail_instances, search.searched, search.with_d_at_most_m, search.verdict
    );
}
