use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

/// Sparse integer matrix. Zero entries are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from row-major small integers.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged row {i}");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(x));
            }
        }
        m
    }

    pub fn from_entries<I>(rows: usize, cols: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, BigInt)>,
    {
        let mut m = Self::zeros(rows, cols);
        for (i, j, x) in entries {
            let acc = m.get(i, j) + x;
            m.set(i, j, acc);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        if x.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), x);
        }
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(i, j), x)| (i, j, x))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn transpose(&self) -> Self {
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|(&(i, j), x)| ((j, i), x.clone())).collect(),
        }
    }

    /// Returns `self * rhs`, or `None` when the shapes do not compose.
    pub fn mul(&self, rhs: &ExactMatrix) -> Option<ExactMatrix> {
        if self.cols != rhs.rows {
            return None;
        }
        let mut by_row: BTreeMap<usize, Vec<(usize, &BigInt)>> = BTreeMap::new();
        for (&(k, j), x) in &rhs.entries {
            by_row.entry(k).or_default().push((j, x));
        }
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols);
        for (&(i, k), a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(j, b) in row {
                    let acc = out.get(i, j) + a * b;
                    out.set(i, j, acc);
                }
            }
        }
        Some(out)
    }

    /// Applies a row permutation `perm` (new row `i` is old row `perm[i]`) and a column permutation.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        assert_eq!(row_perm.len(), self.rows);
        assert_eq!(col_perm.len(), self.cols);
        let mut inv_r = vec![0; self.rows];
        for (new, &old) in row_perm.iter().enumerate() {
            inv_r[old] = new;
        }
        let mut inv_c = vec![0; self.cols];
        for (new, &old) in col_perm.iter().enumerate() {
            inv_c[old] = new;
        }
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), x)| ((inv_r[i], inv_c[j]), x.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut d = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (&(i, j), x) in &self.entries {
            d[i][j] = x.clone();
        }
        d
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        rank(self)
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Rank over the rationals via fraction-free (Bareiss) elimination.
///
/// Runs in `i128` with checked arithmetic and restarts in `BigInt` if any
/// intermediate minor overflows.
pub fn rank(m: &ExactMatrix) -> usize {
    if m.is_zero() {
        return 0;
    }
    let small: Option<Vec<Vec<i128>>> = (0..m.rows)
        .map(|i| (0..m.cols).map(|j| m.get(i, j).to_i128()).collect())
        .collect();
    if let Some(mut a) = small {
        if let Some(r) = bareiss_i128(&mut a) {
            return r;
        }
    }
    bareiss_big(m.to_dense())
}

// Row elimination reads two rows at once, so indices are clearer than iterators.
#[allow(clippy::needless_range_loop)]
fn bareiss_i128(a: &mut [Vec<i128>]) -> Option<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][c];
        for i in r + 1..rows {
            let lead = a[i][c];
            for j in c + 1..cols {
                let num = pivot.checked_mul(a[i][j])?.checked_sub(lead.checked_mul(a[r][j])?)?;
                a[i][j] = num / prev;
            }
            a[i][c] = 0;
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

#[allow(clippy::needless_range_loop)]
fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        for i in r + 1..rows {
            let lead = a[i][c].clone();
            for j in c + 1..cols {
                let num = &pivot * &a[i][j] - &lead * &a[r][j];
                debug_assert!((&num % &prev).is_zero());
                a[i][j] = num / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}
