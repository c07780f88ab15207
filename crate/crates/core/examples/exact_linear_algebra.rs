//! Exact ranks, complex cohomology, and integer-valued polynomials.

use lclab::exactlin::{binom_ext, ExactMatrix, FiniteComplex, IntegerPolynomial, Validity};
use num_bigint::BigInt;

fn main() {
    let m = ExactMatrix::from_rows(&[vec![2, 4, 6], vec![1, 2, 3], vec![0, 1, 1]]);
    println!("rank of\n{:?}\n= {}", m.to_dense(), m.rank());

    // the simplicial cochain complex of a hollow triangle: H^0 = H^1 = 1
    let d0 = ExactMatrix::from_rows(&[vec![-1, 1, 0], vec![-1, 0, 1], vec![0, -1, 1]]);
    let c = FiniteComplex::new(vec![3, 3], vec![d0]).unwrap();
    println!("hollow triangle cohomology: {:?}", c.cohomology_dims());

    let samples: Vec<(i64, BigInt)> = (-6..=-3).map(|n| (n, binom_ext(-n - 1, 2))).collect();
    let p = IntegerPolynomial::fit(&samples, Validity::AtMost(-3)).unwrap();
    println!(
        "fitted {p} for {}, binomial coordinates {:?}",
        p.validity(),
        p.coefficients()
    );
}
