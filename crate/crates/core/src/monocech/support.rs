//! Supports of graded pieces over `A = K[Y]`.
//!
//! Every piece `H^i_I(R)_n` is `Z^d`-graded over `A`, and the minimal primes of
//! a multigraded module are monomial primes `P_T = (Y_j : j ∈ T)`. Localizing at
//! `P_T` is detected by inverting the `Y`s outside `T`, so the support is
//! decided by a sweep over the `2^d` subsets `T`.

use std::fmt;

use super::context::{submasks, SignPattern, VariableContext};
use super::engine::LocalCohomology;
use super::ideal::{Localized, MonomialIdeal};

/// The monomial prime of `A` generated by the `Y` variables in the mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialPrime(pub SignPattern);

impl MonomialPrime {
    pub fn height(self) -> usize {
        self.0.len()
    }

    /// `dim A/P_T = d - |T|`.
    pub fn coheight(self, ctx: &VariableContext) -> usize {
        ctx.d() - self.height()
    }

    pub fn display(self, ctx: &VariableContext) -> String {
        if self.0.is_empty() {
            "(0)".to_string()
        } else {
            let names: Vec<&str> = self.0.iter().map(|v| ctx.name(v)).collect();
            format!("({})", names.join(", "))
        }
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}", self.0)
    }
}

/// Caches the localized cohomology for every `T ⊆ Y`.
pub struct SupportSweep {
    ctx: VariableContext,
    /// indexed by the mask `T`; `None` when the localization is the unit ideal
    localized: Vec<(u32, Option<LocalCohomology>)>,
}

impl SupportSweep {
    pub fn new(ideal: &MonomialIdeal) -> Self {
        let ctx = ideal.context().clone();
        let y = ctx.y_mask();
        let localized = submasks(y)
            .map(|t| {
                let lc = match ideal.localize(y & !t).expect("only Y variables are inverted") {
                    Localized::Ideal(j) => Some(LocalCohomology::new(&j)),
                    Localized::Unit => None,
                };
                (t, lc)
            })
            .collect();
        SupportSweep { ctx, localized }
    }

    fn nonzero_at(&self, i: usize, n: i64) -> Vec<u32> {
        self.localized
            .iter()
            .filter(|(_, lc)| lc.as_ref().is_some_and(|lc| lc.piece_nonzero(i, n)))
            .map(|(t, _)| *t)
            .collect()
    }

    /// Minimal primes of `Supp_A H^i_I(R)_n`, sorted.
    pub fn min_primes(&self, i: usize, n: i64) -> Vec<MonomialPrime> {
        let hits = self.nonzero_at(i, n);
        let mut out: Vec<MonomialPrime> = hits
            .iter()
            .copied()
            .filter(|&t| !hits.iter().any(|&u| u != t && u & !t == 0))
            .map(|t| MonomialPrime(SignPattern(t)))
            .collect();
        out.sort();
        out
    }

    /// `dim Supp_A H^i_I(R)_n`, or `-1` for a zero piece.
    pub fn support_dim(&self, i: usize, n: i64) -> i64 {
        self.min_primes(i, n)
            .iter()
            .map(|p| p.coheight(&self.ctx) as i64)
            .max()
            .unwrap_or(-1)
    }
}

pub fn support_min_primes(ideal: &MonomialIdeal, i: usize, n: i64) -> Vec<MonomialPrime> {
    SupportSweep::new(ideal).min_primes(i, n)
}

pub fn support_dim(ideal: &MonomialIdeal, i: usize, n: i64) -> i64 {
    SupportSweep::new(ideal).support_dim(i, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show(ideal: &MonomialIdeal, ps: &[MonomialPrime]) -> Vec<String> {
        ps.iter().map(|p| p.display(ideal.context())).collect()
    }

    #[test]
    fn example_ideal_support() {
        let i = MonomialIdeal::parse_standard(2, 1, &["Y1*Y2", "Y1*X1"]).unwrap();
        assert_eq!(show(&i, &support_min_primes(&i, 1, 0)), vec!["(Y1)"]);
        assert_eq!(support_dim(&i, 1, 0), 1);
    }

    #[test]
    fn free_components_are_supported_everywhere() {
        let i = MonomialIdeal::parse_standard(2, 2, &["X1", "X2"]).unwrap();
        assert_eq!(show(&i, &support_min_primes(&i, 2, -2)), vec!["(0)"]);
        let j = MonomialIdeal::parse_standard(3, 2, &["X1", "X2"]).unwrap();
        assert_eq!(support_dim(&j, 2, -2), 3);
    }

    #[test]
    fn extended_prime_support() {
        let i = MonomialIdeal::parse_standard(1, 1, &["Y1"]).unwrap();
        assert_eq!(show(&i, &support_min_primes(&i, 1, 2)), vec!["(Y1)"]);
    }

    #[test]
    fn zero_piece_has_no_support() {
        let i = MonomialIdeal::parse_standard(1, 2, &["X1", "X2"]).unwrap();
        assert!(support_min_primes(&i, 2, 0).is_empty());
        assert_eq!(support_dim(&i, 2, 0), -1);
    }
}
