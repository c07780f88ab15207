//! Brute-force Čech cohomology at single multidegrees, compared with the engine.

use lclab::monocech::MonomialIdeal;
use lclab::verify::{oracle_compare, window_oracle};

fn main() {
    let ideal = MonomialIdeal::parse_standard(1, 2, &["Y1^2*X1", "X2^3", "X1^2*X2"]).unwrap();
    for alpha in [[-1, -1, -1], [0, -2, -1], [-3, 0, -1], [2, 1, 0]] {
        let dims: Vec<usize> = (0..=3).map(|i| window_oracle(&ideal, i, &alpha)).collect();
        println!("{alpha:?}: {dims:?}");
    }
    let report = oracle_compare(&ideal, 2);
    println!("{report}");
}
