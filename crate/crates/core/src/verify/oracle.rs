//! Brute-force Čech computation at a single multidegree.
//!
//! Nothing here uses sign patterns: a localization `R_f` has a nonzero piece
//! at `α` exactly when some `f^t x^α` is a polynomial, and we exhibit the `t`.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use super::report::{CheckResult, VerificationReport, Witness};
use crate::exactlin::{cohomology_dims, induced_map_rank, ExactMatrix, FiniteComplex, RatMatrix};
use crate::monocech::{LocalCohomology, MonomialIdeal, SignPattern};

/// Exponent vector of `m_σ = Π_{k ∈ σ} g_k`.
fn product_degree(ideal: &MonomialIdeal, sigma: u32) -> Vec<i64> {
    let n = ideal.context().nvars();
    let mut deg = vec![0i64; n];
    for (k, g) in ideal.generators().iter().enumerate() {
        if sigma >> k & 1 == 1 {
            for (d, &e) in deg.iter_mut().zip(g) {
                *d += i64::from(e);
            }
        }
    }
    deg
}

/// The least `t >= 0` with `α + t·deg >= 0` componentwise, if any.
pub fn localization_witness(alpha: &[i64], deg: &[i64]) -> Option<i64> {
    let mut t = 0i64;
    for (&a, &e) in alpha.iter().zip(deg) {
        if a < 0 {
            if e == 0 {
                return None;
            }
            t = t.max((-a + e - 1) / e);
        }
    }
    // confirm the witness directly
    alpha.iter().zip(deg).all(|(&a, &e)| a + t * e >= 0).then_some(t)
}

/// The Čech complex of `ideal` (as given, not normalized) at multidegree
/// `α`, with the generator subsets labelling each level.
pub fn window_complex(ideal: &MonomialIdeal, alpha: &[i64]) -> (Vec<Vec<u32>>, FiniteComplex) {
    let s = ideal.generator_count();
    let mut cells: Vec<Vec<u32>> = vec![Vec::new(); s + 1];
    for sigma in 0u32..1 << s {
        if localization_witness(alpha, &product_degree(ideal, sigma)).is_some() {
            cells[sigma.count_ones() as usize].push(sigma);
        }
    }
    let levels: Vec<usize> = cells.iter().map(Vec::len).collect();
    let maps = (0..s)
        .map(|p| {
            let mut entries = Vec::new();
            for (row, &tau) in cells[p + 1].iter().enumerate() {
                // d(e_σ) = Σ_j ± e_{σ∪j}; the coefficient of e_τ from e_{τ∖j}
                // is (-1)^(position of j in τ)
                let members: Vec<usize> = (0..s).filter(|&j| tau >> j & 1 == 1).collect();
                for (position, &j) in members.iter().enumerate() {
                    let sigma = tau & !(1 << j);
                    if let Ok(col) = cells[p].binary_search(&sigma) {
                        let sign = if position % 2 == 0 { 1 } else { -1 };
                        entries.push((row, col, BigInt::from(sign)));
                    }
                }
            }
            ExactMatrix::from_entries(levels[p + 1], levels[p], entries)
        })
        .collect();
    let complex = FiniteComplex::new(levels, maps).expect("the Čech differential squares to zero");
    (cells, complex)
}

/// `dim H^i_I(R)_α` by direct computation.
pub fn window_oracle(ideal: &MonomialIdeal, i: usize, alpha: &[i64]) -> usize {
    window_profile(ideal, alpha).get(i).copied().unwrap_or(0)
}

/// `dim H^i_I(R)_α` for every `i`.
pub fn window_profile(ideal: &MonomialIdeal, alpha: &[i64]) -> Vec<usize> {
    cohomology_dims(&window_complex(ideal, alpha).1)
}

/// Chain map between two windows sending `e_σ` to `scalar · e_σ` whenever
/// `σ` is present in both.
fn cellwise(source: &[Vec<u32>], target: &[Vec<u32>], p: usize, scalar: i64) -> RatMatrix {
    let src = source.get(p).map_or(&[][..], Vec::as_slice);
    let dst = target.get(p).map_or(&[][..], Vec::as_slice);
    let mut f = RatMatrix::zeros(dst.len(), src.len());
    if scalar != 0 {
        for (col, sigma) in src.iter().enumerate() {
            if let Ok(row) = dst.binary_search(sigma) {
                f[(row, col)] = BigRational::from_integer(scalar.into());
            }
        }
    }
    f
}

/// Kernel dimension, on `H^i` at `α`, of the joint map into the shifted
/// windows: each target is `(shift, scalar)`, the chain map multiplying
/// `x^α` to `x^{α+shift}` times the scalar.
fn window_kernel(ideal: &MonomialIdeal, i: usize, alpha: &[i64], targets: &[(Vec<i64>, i64)]) -> usize {
    let (cells, complex) = window_complex(ideal, alpha);
    let h = cohomology_dims(&complex).get(i).copied().unwrap_or(0);
    if h == 0 {
        return 0;
    }
    let built: Vec<(Vec<Vec<u32>>, FiniteComplex, i64)> = targets
        .iter()
        .map(|(shift, scalar)| {
            let beta: Vec<i64> = alpha.iter().zip(shift).map(|(a, s)| a + s).collect();
            let (c, x) = window_complex(ideal, &beta);
            (c, x, *scalar)
        })
        .collect();
    let maps: Vec<(&FiniteComplex, RatMatrix)> = built
        .iter()
        .map(|(c, x, scalar)| (x, cellwise(&cells, c, i, *scalar)))
        .collect();
    h - induced_map_rank(&complex, i, &maps)
}

fn unit(n: usize, v: usize, sign: i64) -> Vec<i64> {
    let mut e = vec![0; n];
    e[v] = sign;
    e
}

/// All multidegrees in `[-bound, bound]^n` with coarse degree `target`.
fn box_slice(ideal: &MonomialIdeal, bound: i64, target: i64) -> Vec<Vec<i64>> {
    let ctx = ideal.context();
    box_points(ctx.nvars(), bound)
        .filter(|a| ctx.coarse_degree(a) == target)
        .collect()
}

/// Every point of `[-bound, bound]^n`, in lexicographic order.
pub fn box_points(n: usize, bound: i64) -> impl Iterator<Item = Vec<i64>> {
    let side = (2 * bound + 1) as usize;
    let total = side.pow(n as u32);
    (0..total).map(move |mut k| {
        let mut a = vec![0i64; n];
        for slot in a.iter_mut().rev() {
            *slot = (k % side) as i64 - bound;
            k /= side;
        }
        a
    })
}

/// `(dim H_1, dim H_0)` of multiplication by `X_v` on `H^i_I(R)` at degree
/// `n`, summed over the multidegrees inside the box.
pub fn window_koszul_x(ideal: &MonomialIdeal, i: usize, v: usize, n: i64, bound: i64) -> (usize, usize) {
    let nv = ideal.context().nvars();
    let h1 = box_slice(ideal, bound, n - 1)
        .iter()
        .map(|a| window_kernel(ideal, i, a, &[(unit(nv, v, 1), 1)]))
        .sum();
    let h0 = box_slice(ideal, bound, n)
        .iter()
        .map(|b| {
            let below: Vec<i64> = b.iter().zip(unit(nv, v, -1)).map(|(x, s)| x + s).collect();
            let here = window_oracle(ideal, i, b);
            let image = window_oracle(ideal, i, &below) - window_kernel(ideal, i, &below, &[(unit(nv, v, 1), 1)]);
            here - image
        })
        .sum();
    (h1, h0)
}

/// `(dim H_1, dim H_0)` of `∂_v` on `H^i_I(R)` at degree `n`, summed over
/// the multidegrees inside the box.
pub fn window_derham(ideal: &MonomialIdeal, i: usize, v: usize, n: i64, bound: i64) -> (usize, usize) {
    let nv = ideal.context().nvars();
    let h1 = box_slice(ideal, bound, n + 1)
        .iter()
        .map(|a| window_kernel(ideal, i, a, &[(unit(nv, v, -1), a[v])]))
        .sum();
    let h0 = box_slice(ideal, bound, n)
        .iter()
        .map(|b| {
            let above: Vec<i64> = b.iter().zip(unit(nv, v, 1)).map(|(x, s)| x + s).collect();
            let here = window_oracle(ideal, i, b);
            let image =
                window_oracle(ideal, i, &above) - window_kernel(ideal, i, &above, &[(unit(nv, v, -1), above[v])]);
            here - image
        })
        .sum();
    (h1, h0)
}

/// Joint kernel of all `Y`-multiplications on `H^i_I(R)` at degree `n`,
/// summed over the multidegrees inside the box.
pub fn window_y_socle(ideal: &MonomialIdeal, i: usize, n: i64, bound: i64) -> usize {
    let ctx = ideal.context();
    let nv = ctx.nvars();
    let shifts: Vec<(Vec<i64>, i64)> = ctx.y_vars().map(|u| (unit(nv, u, 1), 1)).collect();
    box_slice(ideal, bound, n)
        .iter()
        .map(|a| window_kernel(ideal, i, a, &shifts))
        .sum()
}

/// Compares the oracle with the sign-pattern engine at every `α` in
/// `[-bound, bound]^{d+m}` and every cohomological index.
pub fn oracle_compare(ideal: &MonomialIdeal, bound: i64) -> VerificationReport {
    let engine = LocalCohomology::new(ideal);
    let ctx = ideal.context();
    let max_i = ideal.generator_count().max(engine.max_index());
    let points: Vec<Vec<i64>> = box_points(ctx.nvars(), bound).collect();
    let mismatch = points.par_iter().find_first(|alpha| {
        let oracle = window_profile(ideal, alpha);
        let s = SignPattern::of_multidegree(alpha);
        (0..=max_i).any(|i| oracle.get(i).copied().unwrap_or(0) != engine.profile().h(i, s))
    });
    let name = format!("oracle agreement on [-{bound},{bound}]^{}", ctx.nvars());
    let citation = "window oracle vs sign-pattern engine";
    let mut report = VerificationReport::default();
    report.push(match mismatch {
        None => CheckResult::pass(&name, citation),
        Some(alpha) => {
            let s = SignPattern::of_multidegree(alpha);
            let oracle = window_profile(ideal, alpha);
            let i = (0..=max_i)
                .find(|&i| oracle.get(i).copied().unwrap_or(0) != engine.profile().h(i, s))
                .unwrap_or(0);
            CheckResult::fail(
                &name,
                citation,
                Witness::new(ideal).index(i).alpha(alpha.clone()).detail(format!(
                    "oracle {} vs engine {}",
                    oracle.get(i).copied().unwrap_or(0),
                    engine.profile().h(i, s)
                )),
            )
        }
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(d: usize, m: usize, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::parse_standard(d, m, gens).unwrap()
    }

    #[test]
    fn witness_is_explicit() {
        assert_eq!(localization_witness(&[-5, 2], &[2, 0]), Some(3));
        assert_eq!(localization_witness(&[-1, -1], &[1, 0]), None);
        assert_eq!(localization_witness(&[0, 3], &[0, 0]), Some(0));
    }

    #[test]
    fn oracle_examples() {
        let irr = ideal(0, 2, &["X1", "X2"]);
        assert_eq!(window_oracle(&irr, 2, &[-1, -1]), 1);
        assert_eq!(window_oracle(&irr, 2, &[0, -2]), 0);
        let j = ideal(2, 1, &["Y1*Y2", "Y1*X1"]);
        assert_eq!(window_oracle(&j, 1, &[-1, 0, 0]), 1);
    }

    #[test]
    fn oracle_handles_powers() {
        let i = ideal(1, 2, &["Y1^2*X1", "X2^3", "X1^2*X2"]);
        assert!(oracle_compare(&i, 2).all_passed());
    }

    #[test]
    fn compare_examples() {
        assert!(oracle_compare(&ideal(0, 2, &["X1", "X2"]), 3).all_passed());
        assert!(oracle_compare(&ideal(2, 1, &["Y1*Y2", "Y1*X1"]), 3).all_passed());
    }

    #[test]
    fn window_homology_examples() {
        let e = ideal(0, 1, &["X1"]);
        assert_eq!(window_koszul_x(&e, 1, 0, 0, 3), (1, 0));
        assert_eq!(window_koszul_x(&e, 1, 0, -2, 4), (0, 0));
        assert_eq!(window_derham(&e, 1, 0, -1, 3), (0, 1));
        assert_eq!(window_derham(&e, 1, 0, -3, 5), (0, 0));
        let p = ideal(1, 1, &["Y1"]);
        assert_eq!(window_y_socle(&p, 1, 2, 3), 1);
        assert_eq!(window_y_socle(&p, 1, -1, 3), 0);
        let j = ideal(2, 1, &["Y1*Y2", "Y1*X1"]);
        for n in -2..=1 {
            assert_eq!(window_y_socle(&j, 2, n, 3), 0, "n={n}");
        }
    }
}
