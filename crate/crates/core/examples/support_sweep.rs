//! Supports of graded pieces over the degree-0 coefficient ring.

use lclab::monocech::{MonomialIdeal, SupportSweep};

fn main() {
    let ideal = MonomialIdeal::parse_standard(2, 2, &["Y1*X1", "Y2*X2", "X1*X2"]).unwrap();
    let ctx = ideal.context();
    let sweep = SupportSweep::new(&ideal);
    for i in 1..=3 {
        for n in [-4, -2, -1, 0, 3] {
            let primes: Vec<String> = sweep.min_primes(i, n).iter().map(|p| p.display(ctx)).collect();
            println!(
                "H^{i}_{n:<3} min primes {:<20} dim {}",
                primes.join(" "),
                sweep.support_dim(i, n)
            );
        }
    }
}
