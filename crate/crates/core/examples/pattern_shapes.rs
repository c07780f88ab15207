//! Degree-set shapes and dimensions of graded pieces.

use lclab::monocech::{LocalCohomology, MonomialIdeal};

fn show(d: usize, m: usize, gens: &[&str]) {
    let ideal = MonomialIdeal::parse_standard(d, m, gens).unwrap();
    let lc = LocalCohomology::new(&ideal);
    println!("{ideal} with d = {d}, m = {m}");
    for i in 0..=lc.max_index() {
        let report = lc.pattern_report(i).unwrap();
        let pats: Vec<String> = report
            .contributors
            .iter()
            .map(|c| format!("{}:{}", c.pattern.display(lc.context()), c.rank))
            .collect();
        let line = format!("  H^{i}: {:<12} {}", report.shape.to_string(), pats.join(" "));
        println!("{}", line.trim_end());
    }
}

fn main() {
    show(0, 3, &["X1", "X2", "X3"]);
    show(2, 1, &["Y1*Y2", "Y1*X1"]);
    show(0, 2, &["X1"]);

    let irr = LocalCohomology::new(&MonomialIdeal::parse_standard(0, 3, &["X1", "X2", "X3"]).unwrap());
    for n in -7..=0 {
        println!("dim H^3_{n} = {}", irr.piece_dimension(3, n).unwrap());
    }
}
