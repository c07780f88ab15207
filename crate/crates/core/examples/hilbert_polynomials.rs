//! Closed-form Hilbert polynomials on both tails.

use lclab::monocech::{LocalCohomology, MonomialIdeal};

fn main() {
    for m in 1..=4 {
        let gens: Vec<String> = (1..=m).map(|j| format!("X{j}")).collect();
        let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
        let lc = LocalCohomology::new(&MonomialIdeal::parse_standard(0, m, &refs).unwrap());
        let (f, g) = lc.hilbert_pair(m).unwrap();
        println!(
            "m = {m}: f(n) = {f} for {}, g(n) = {g} for {}",
            f.validity(),
            g.validity()
        );
    }

    let all_z = LocalCohomology::new(&MonomialIdeal::parse_standard(0, 2, &["X1"]).unwrap());
    println!("(X1) in two variables: {}", all_z.hilbert_pair(1).unwrap_err());
}
