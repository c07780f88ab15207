use std::fmt;
use std::ops::Add;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::exactlin::binom_ext;

/// The `Z`-degree nonvanishing set of a graded local cohomology module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternShape {
    Empty,
    /// `{n >= 0}`
    NonnegOnly,
    /// `{n <= -m}`
    NegTailOnly,
    AllZ,
    /// `{n <= -m} ∪ {n >= 0}`, only possible for `m >= 2`
    TwoTails,
}

impl PatternShape {
    pub fn contains(self, n: i64, m: usize) -> bool {
        let m = m as i64;
        match self {
            PatternShape::Empty => false,
            PatternShape::NonnegOnly => n >= 0,
            PatternShape::NegTailOnly => n <= -m,
            PatternShape::AllZ => true,
            PatternShape::TwoTails => n >= 0 || n <= -m,
        }
    }

    /// Human description in terms of `n`.
    pub fn describe(self, m: usize) -> String {
        match self {
            PatternShape::Empty => "empty".into(),
            PatternShape::NonnegOnly => "n ≥ 0".into(),
            PatternShape::NegTailOnly => format!("n ≤ −{m}"),
            PatternShape::AllZ => "all n".into(),
            PatternShape::TwoTails => format!("n ≤ −{m} or n ≥ 0"),
        }
    }

    /// Range of `Z`-degrees reached by multidegrees whose sign pattern has
    /// `k` negative `X` coordinates out of `m`.
    pub fn of_x_count(k: usize, m: usize) -> PatternShape {
        if k == 0 {
            PatternShape::NonnegOnly
        } else if k == m {
            PatternShape::NegTailOnly
        } else {
            PatternShape::AllZ
        }
    }
}

impl fmt::Display for PatternShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PatternShape::Empty => "Empty",
            PatternShape::NonnegOnly => "NonnegOnly",
            PatternShape::NegTailOnly => "NegTailOnly",
            PatternShape::AllZ => "AllZ",
            PatternShape::TwoTails => "TwoTails",
        };
        f.write_str(s)
    }
}

/// A finite union of integer intervals, possibly unbounded on either side.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DegreeSet {
    /// Disjoint, non-adjacent, sorted intervals `[lo, hi]`; `None` means unbounded.
    intervals: Vec<(Option<i64>, Option<i64>)>,
}

impl DegreeSet {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn interval(lo: Option<i64>, hi: Option<i64>) -> Self {
        let mut s = Self::empty();
        s.insert(lo, hi);
        s
    }

    pub fn insert(&mut self, lo: Option<i64>, hi: Option<i64>) {
        if let (Some(a), Some(b)) = (lo, hi) {
            if a > b {
                return;
            }
        }
        self.intervals.push((lo, hi));
        self.intervals.sort_by_key(|&(lo, _)| lo.map_or((0, 0), |x| (1, x)));
        let mut merged: Vec<(Option<i64>, Option<i64>)> = Vec::new();
        for &(lo, hi) in &self.intervals {
            if let Some(last) = merged.last_mut() {
                // adjacent or overlapping: lo <= last.hi + 1
                let touches = match (last.1, lo) {
                    (None, _) | (_, None) => true,
                    (Some(h), Some(l)) => l <= h.saturating_add(1),
                };
                if touches {
                    last.1 = match (last.1, hi) {
                        (None, _) | (_, None) => None,
                        (Some(a), Some(b)) => Some(a.max(b)),
                    };
                    continue;
                }
            }
            merged.push((lo, hi));
        }
        self.intervals = merged;
    }

    pub fn intervals(&self) -> &[(Option<i64>, Option<i64>)] {
        &self.intervals
    }

    /// Matches the set against the five admissible shapes for the given `m`.
    pub fn classify(&self, m: usize) -> Option<PatternShape> {
        let neg = (None, Some(-(m as i64)));
        let nonneg = (Some(0), None);
        match self.intervals.as_slice() {
            [] => Some(PatternShape::Empty),
            [(None, None)] => Some(PatternShape::AllZ),
            [x] if *x == nonneg => Some(PatternShape::NonnegOnly),
            [x] if *x == neg => Some(PatternShape::NegTailOnly),
            [a, b] if *a == neg && *b == nonneg => Some(PatternShape::TwoTails),
            _ => None,
        }
    }
}

/// A `K`-dimension that may be infinite.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DimValue {
    Finite(BigUint),
    Infinite,
}

impl DimValue {
    pub fn zero() -> Self {
        DimValue::Finite(BigUint::zero())
    }

    pub fn finite(n: u64) -> Self {
        DimValue::Finite(BigUint::from(n))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, DimValue::Finite(n) if n.is_zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, DimValue::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&BigUint> {
        match self {
            DimValue::Finite(n) => Some(n),
            DimValue::Infinite => None,
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.as_finite().and_then(ToPrimitive::to_u64)
    }

    /// `h` copies of this space.
    pub fn times(&self, h: usize) -> DimValue {
        match self {
            _ if h == 0 => DimValue::zero(),
            DimValue::Finite(n) => DimValue::Finite(n * BigUint::from(h)),
            DimValue::Infinite => DimValue::Infinite,
        }
    }
}

impl Add for DimValue {
    type Output = DimValue;
    fn add(self, rhs: DimValue) -> DimValue {
        match (self, rhs) {
            (DimValue::Finite(a), DimValue::Finite(b)) => DimValue::Finite(a + b),
            _ => DimValue::Infinite,
        }
    }
}

impl std::iter::Sum for DimValue {
    fn sum<I: Iterator<Item = DimValue>>(iter: I) -> DimValue {
        iter.fold(DimValue::zero(), Add::add)
    }
}

impl fmt::Display for DimValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimValue::Finite(n) => write!(f, "{n}"),
            DimValue::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for DimValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            DimValue::Finite(n) => match n.to_u64() {
                Some(x) => s.serialize_u64(x),
                None => s.serialize_str(&n.to_string()),
            },
            DimValue::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl<'de> Deserialize<'de> for DimValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(n) => Ok(DimValue::finite(n)),
            Raw::Text(t) if t == "infinite" => Ok(DimValue::Infinite),
            Raw::Text(t) => t
                .parse::<BigUint>()
                .map(DimValue::Finite)
                .map_err(|_| serde::de::Error::custom(format!("not a dimension: {t:?}"))),
        }
    }
}

/// Number of integer vectors with `neg` coordinates `<= -1`, `nonneg`
/// coordinates `>= 0`, and coordinate sum `total`.
pub fn lattice_count(neg: usize, nonneg: usize, total: i64) -> DimValue {
    let as_dim = |b: BigInt| DimValue::Finite(b.to_biguint().expect("lattice counts are nonnegative"));
    match (neg, nonneg) {
        (0, 0) => DimValue::finite(u64::from(total == 0)),
        (0, b) if total >= 0 => as_dim(binom_ext(total + b as i64 - 1, b as u32 - 1)),
        (a, 0) if total <= -(a as i64) => as_dim(binom_ext(-total - 1, a as u32 - 1)),
        (0, _) | (_, 0) => DimValue::zero(),
        _ => DimValue::Infinite,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(neg: usize, nonneg: usize, total: i64, bound: i64) -> u64 {
        let n = neg + nonneg;
        let mut count = 0;
        let mut v = vec![-bound; n];
        loop {
            let ok = v[..neg].iter().all(|&x| x <= -1) && v[neg..].iter().all(|&x| x >= 0);
            if ok && v.iter().sum::<i64>() == total {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return count;
                }
                v[i] += 1;
                if v[i] <= bound {
                    break;
                }
                v[i] = -bound;
                i += 1;
            }
        }
    }

    #[test]
    fn lattice_count_matches_enumeration() {
        for (neg, nonneg) in [(0, 1), (0, 2), (0, 3), (1, 0), (2, 0), (3, 0)] {
            for total in -8..=8 {
                let expect = brute(neg, nonneg, total, 12);
                assert_eq!(
                    lattice_count(neg, nonneg, total),
                    DimValue::finite(expect),
                    "{neg} {nonneg} {total}"
                );
            }
        }
        assert_eq!(lattice_count(1, 1, 0), DimValue::Infinite);
        assert_eq!(lattice_count(0, 0, 0), DimValue::finite(1));
        assert_eq!(lattice_count(0, 0, 3), DimValue::zero());
    }

    #[test]
    fn degree_set_classification() {
        let mut s = DegreeSet::empty();
        assert_eq!(s.classify(2), Some(PatternShape::Empty));
        s.insert(Some(0), None);
        assert_eq!(s.classify(2), Some(PatternShape::NonnegOnly));
        s.insert(None, Some(-2));
        assert_eq!(s.classify(2), Some(PatternShape::TwoTails));
        s.insert(None, None);
        assert_eq!(s.classify(2), Some(PatternShape::AllZ));

        // for m = 1 the two tails are adjacent and merge into all of Z
        let mut t = DegreeSet::interval(None, Some(-1));
        t.insert(Some(0), None);
        assert_eq!(t.classify(1), Some(PatternShape::AllZ));

        assert_eq!(DegreeSet::interval(Some(-3), Some(4)).classify(2), None);
    }

    #[test]
    fn dim_value_serde() {
        let v = vec![DimValue::finite(3), DimValue::Infinite];
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"[3,"infinite"]"#);
        let back: Vec<DimValue> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }
}
