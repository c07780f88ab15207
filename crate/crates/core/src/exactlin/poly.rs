use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::LinalgError;

/// Generalized binomial coefficient `a(a-1)...(a-k+1)/k!`, defined for every
/// integer `a`.
pub fn binom_ext(a: i64, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k as i64 {
        acc *= BigInt::from(a - j);
        acc /= BigInt::from(j + 1);
    }
    acc
}

/// Half-line on which a polynomial describes a function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "side", content = "bound", rename_all = "snake_case")]
pub enum Validity {
    /// `n <= bound`
    AtMost(i64),
    /// `n >= bound`
    AtLeast(i64),
}

impl Validity {
    pub fn contains(&self, n: i64) -> bool {
        match *self {
            Validity::AtMost(b) => n <= b,
            Validity::AtLeast(b) => n >= b,
        }
    }
}

impl fmt::Display for Validity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Validity::AtMost(b) => write!(f, "n <= {b}"),
            Validity::AtLeast(b) => write!(f, "n >= {b}"),
        }
    }
}

/// Integer-valued polynomial in `n`, stored in the basis `binom(n + j, j)`.
///
/// Integer-valued polynomials have integer coordinates in this basis, so the
/// coefficients are kept as integers. Trailing zero coefficients are trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
    validity: Validity,
}

impl IntegerPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>, validity: Validity) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntegerPolynomial { coeffs, validity }
    }

    pub fn zero(validity: Validity) -> Self {
        Self::new(Vec::new(), validity)
    }

    /// `c * binom(n + j, j)`.
    pub fn basis_multiple(j: usize, c: BigInt, validity: Validity) -> Self {
        let mut coeffs = vec![BigInt::zero(); j + 1];
        coeffs[j] = c;
        Self::new(coeffs, validity)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn validity(&self) -> Validity {
        self.validity
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, n: i64) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| c * binom_ext(n + j as i64, j as u32))
            .sum()
    }

    /// Interpolates the unique polynomial of degree `< samples.len()` through
    /// the given points and converts it to the binomial basis.
    ///
    /// The backward difference maps `binom(n+j, j)` to `binom(n+j-1, j-1)`, and
    /// `binom(j-1, j)` vanishes for `j >= 1`, so the `j`-th coordinate is the
    /// `j`-th backward difference at `n = -1`.
    pub fn fit(samples: &[(i64, BigInt)], validity: Validity) -> Result<Self, LinalgError> {
        if samples.is_empty() {
            return Ok(Self::zero(validity));
        }
        let newton = NewtonForm::new(samples)?;
        let deg = samples.len() - 1;
        let values: Vec<BigRational> = (0..=deg as i64).map(|t| newton.eval(-1 - t)).collect();
        let mut coeffs = Vec::with_capacity(deg + 1);
        for j in 0..=deg {
            let mut acc = BigRational::zero();
            for (t, v) in values.iter().enumerate().take(j + 1) {
                let term = v * BigRational::from_integer(binom_ext(j as i64, t as u32));
                if t % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            if !acc.is_integer() {
                return Err(LinalgError::NotIntegerValued);
            }
            coeffs.push(acc.to_integer());
        }
        Ok(Self::new(coeffs, validity))
    }

    /// Coefficients in the power basis `1, n, n^2, ...`.
    pub fn power_basis(&self) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.coeffs.len()];
        // running product prod_{t=1..j} (n + t) / t, in power basis
        let mut basis = vec![BigRational::one()];
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                let t = BigRational::from_integer(BigInt::from(j));
                let mut next = vec![BigRational::zero(); basis.len() + 1];
                for (k, b) in basis.iter().enumerate() {
                    // (n + j) / j = 1 + n / j
                    next[k] += b;
                    next[k + 1] += b / &t;
                }
                basis = next;
            }
            let c = BigRational::from_integer(c.clone());
            for (k, b) in basis.iter().enumerate() {
                out[k] += &c * b;
            }
        }
        out
    }
}

impl fmt::Display for IntegerPolynomial {
    /// Expanded power-basis form, e.g. `-n - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pb = self.power_basis();
        let mut terms = Vec::new();
        for (k, c) in pb.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let var = match k {
                0 => String::new(),
                1 => "n".to_string(),
                _ => format!("n^{k}"),
            };
            let body = if k == 0 {
                mag.to_string()
            } else if mag.is_one() {
                var
            } else {
                format!("{mag}{var}")
            };
            terms.push((c.is_negative(), body));
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (neg, body)) in terms.iter().enumerate() {
            match (idx, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

struct NewtonForm {
    nodes: Vec<BigRational>,
    coeffs: Vec<BigRational>,
}

impl NewtonForm {
    fn new(samples: &[(i64, BigInt)]) -> Result<Self, LinalgError> {
        let nodes: Vec<BigRational> = samples
            .iter()
            .map(|(x, _)| BigRational::from_integer(BigInt::from(*x)))
            .collect();
        let mut table: Vec<BigRational> = samples
            .iter()
            .map(|(_, y)| BigRational::from_integer(y.clone()))
            .collect();
        let n = nodes.len();
        let mut coeffs = vec![table[0].clone()];
        for level in 1..n {
            for i in 0..n - level {
                let denom = &nodes[i + level] - &nodes[i];
                if denom.is_zero() {
                    return Err(LinalgError::DuplicateSample);
                }
                table[i] = (&table[i + 1] - &table[i]) / denom;
            }
            coeffs.push(table[0].clone());
        }
        Ok(NewtonForm { nodes, coeffs })
    }

    fn eval(&self, x: i64) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(x));
        let mut acc = BigRational::zero();
        for k in (0..self.coeffs.len()).rev() {
            acc = acc * (&x - &self.nodes[k]) + &self.coeffs[k];
        }
        acc
    }
}
