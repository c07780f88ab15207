use std::fmt;

use serde::{Deserialize, Serialize};

use super::MonoError;

/// Largest number of variables a context may hold; patterns are `u32` masks.
pub const MAX_VARS: usize = 30;

/// The ring `K[Y_1..Y_d][X_1..X_m]` with `deg Y = 0` and `deg X = 1`.
///
/// Variables are indexed `0..d` for the `Y`s followed by `d..d+m` for the `X`s.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VariableContext {
    names: Vec<String>,
    d: usize,
}

impl VariableContext {
    pub fn new<S: Into<String>>(deg0: Vec<S>, deg1: Vec<S>) -> Result<Self, MonoError> {
        let d = deg0.len();
        let names: Vec<String> = deg0.into_iter().chain(deg1).map(Into::into).collect();
        if names.len() == d {
            return Err(MonoError::NoDegreeOneVariables);
        }
        if names.len() > MAX_VARS {
            return Err(MonoError::TooManyVariables(names.len()));
        }
        for (i, a) in names.iter().enumerate() {
            if a.is_empty() {
                return Err(MonoError::EmptyName);
            }
            if names[..i].contains(a) {
                return Err(MonoError::DuplicateName(a.clone()));
            }
        }
        Ok(VariableContext { names, d })
    }

    /// `Y1..Yd` and `X1..Xm`.
    pub fn standard(d: usize, m: usize) -> Result<Self, MonoError> {
        Self::new(
            (1..=d).map(|i| format!("Y{i}")).collect(),
            (1..=m).map(|i| format!("X{i}")).collect(),
        )
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn m(&self) -> usize {
        self.names.len() - self.d
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_y(&self, v: usize) -> bool {
        v < self.d
    }

    pub fn is_x(&self, v: usize) -> bool {
        v >= self.d && v < self.nvars()
    }

    pub fn y_vars(&self) -> std::ops::Range<usize> {
        0..self.d
    }

    pub fn x_vars(&self) -> std::ops::Range<usize> {
        self.d..self.nvars()
    }

    pub fn y_mask(&self) -> u32 {
        low_bits(self.d)
    }

    pub fn x_mask(&self) -> u32 {
        low_bits(self.nvars()) & !self.y_mask()
    }

    pub fn all_mask(&self) -> u32 {
        low_bits(self.nvars())
    }

    /// Sum of the `X` coordinates of a multidegree.
    pub fn coarse_degree(&self, alpha: &[i64]) -> i64 {
        alpha[self.d..].iter().sum()
    }
}

fn low_bits(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// The set `N(α) = {v : α_v < 0}` of variables forced negative.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SignPattern(pub u32);

impl SignPattern {
    pub const EMPTY: SignPattern = SignPattern(0);

    pub fn of_multidegree(alpha: &[i64]) -> Self {
        SignPattern(
            alpha
                .iter()
                .enumerate()
                .filter(|(_, &a)| a < 0)
                .fold(0, |acc, (v, _)| acc | (1 << v)),
        )
    }

    pub fn from_vars<I: IntoIterator<Item = usize>>(vars: I) -> Self {
        SignPattern(vars.into_iter().fold(0, |acc, v| acc | (1 << v)))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: SignPattern) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn with(self, v: usize) -> Self {
        SignPattern(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> Self {
        SignPattern(self.0 & !(1 << v))
    }

    pub fn minus(self, mask: u32) -> Self {
        SignPattern(self.0 & !mask)
    }

    /// `k = |S ∩ X|`.
    pub fn x_count(self, ctx: &VariableContext) -> usize {
        (self.0 & ctx.x_mask()).count_ones() as usize
    }

    pub fn y_part(self, ctx: &VariableContext) -> SignPattern {
        SignPattern(self.0 & ctx.y_mask())
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&v| self.contains(v))
    }

    pub fn display(self, ctx: &VariableContext) -> String {
        let names: Vec<&str> = self.iter().map(|v| ctx.name(v)).collect();
        format!("{{{}}}", names.join(","))
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#b}", self.0)
    }
}

/// Every submask of `mask`, in increasing numeric order.
pub fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(0u32);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask {
            None
        } else {
            Some(((cur | !mask).wrapping_add(1)) & mask)
        };
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_layout() {
        let ctx = VariableContext::standard(2, 3).unwrap();
        assert_eq!((ctx.d(), ctx.m(), ctx.nvars()), (2, 3, 5));
        assert_eq!(ctx.y_mask(), 0b00011);
        assert_eq!(ctx.x_mask(), 0b11100);
        assert_eq!(ctx.index_of("X1"), Some(2));
        assert_eq!(ctx.coarse_degree(&[-5, 7, 1, -2, 0]), -1);
    }

    #[test]
    fn context_rejects_bad_input() {
        assert_eq!(
            VariableContext::new(vec!["Y1"], vec![]),
            Err(MonoError::NoDegreeOneVariables)
        );
        assert_eq!(
            VariableContext::new(vec!["A"], vec!["A"]),
            Err(MonoError::DuplicateName("A".into()))
        );
    }

    #[test]
    fn pattern_of_multidegree() {
        let s = SignPattern::of_multidegree(&[-1, 0, 3, -2]);
        assert_eq!(s, SignPattern::from_vars([0, 3]));
        assert_eq!(s.len(), 2);
        let ctx = VariableContext::standard(1, 3).unwrap();
        assert_eq!(s.x_count(&ctx), 1);
        assert_eq!(s.display(&ctx), "{Y1,X3}");
    }

    #[test]
    fn submask_enumeration() {
        let all: Vec<u32> = submasks(0b1010).collect();
        assert_eq!(all, vec![0b0000, 0b0010, 0b1000, 0b1010]);
        assert_eq!(submasks(0).count(), 1);
        assert_eq!(submasks(0b111).count(), 8);
    }
}
