use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::context::{submasks, SignPattern, VariableContext};
use super::ideal::MonomialIdeal;
use crate::exactlin::{ExactMatrix, FiniteComplex};

/// The Čech complex of a normalized ideal restricted to the multidegrees with
/// a given sign pattern, with the generator subsets labelling each basis vector.
#[derive(Clone, Debug)]
pub struct SliceComplex {
    /// `cells[p]` lists the subsets `σ` (bitmasks over generators) spanning level `p`.
    pub cells: Vec<Vec<u32>>,
    pub complex: FiniteComplex,
}

impl SliceComplex {
    /// Position of `σ` in its level, if present.
    pub fn position(&self, sigma: u32) -> Option<usize> {
        let p = sigma.count_ones() as usize;
        self.cells.get(p)?.binary_search(&sigma).ok()
    }
}

/// Union of generator supports for every subset of generators.
pub(crate) fn subset_supports(supports: &[u32]) -> Vec<u32> {
    let s = supports.len();
    let mut out = vec![0u32; 1 << s];
    for sigma in 1usize..1 << s {
        let low = sigma.trailing_zeros() as usize;
        out[sigma] = out[sigma & (sigma - 1)] | supports[low];
    }
    out
}

/// Sign of inserting generator `j` into `σ`: `(-1)^{#{i in σ : i < j}}`.
pub(crate) fn cech_sign(sigma: u32, j: usize) -> i64 {
    if (sigma & ((1u32 << j) - 1)).count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Builds the standard alternating Čech complex on the given cells.
/// `present` must be upward closed.
pub(crate) fn cech_complex(s: usize, present: impl Fn(u32) -> bool) -> (Vec<Vec<u32>>, FiniteComplex) {
    let mut cells: Vec<Vec<u32>> = vec![Vec::new(); s + 1];
    for sigma in 0u32..1 << s {
        if present(sigma) {
            cells[sigma.count_ones() as usize].push(sigma);
        }
    }
    let levels: Vec<usize> = cells.iter().map(Vec::len).collect();
    let maps = (0..s)
        .map(|p| {
            let mut entries = Vec::new();
            for (col, &sigma) in cells[p].iter().enumerate() {
                for j in (0..s).filter(|&j| sigma >> j & 1 == 0) {
                    let tau = sigma | 1 << j;
                    let row = cells[p + 1]
                        .binary_search(&tau)
                        .expect("cell set must be upward closed");
                    entries.push((row, col, BigInt::from(cech_sign(sigma, j))));
                }
            }
            ExactMatrix::from_entries(levels[p + 1], levels[p], entries)
        })
        .collect();
    let complex = FiniteComplex::new(levels, maps).expect("Čech differential squares to zero");
    (cells, complex)
}

/// The slice of the Čech complex at sign pattern `pattern`: level `p` is spanned
/// by the `p`-subsets `σ` of generators with `pattern ⊆ supp(m_σ)`.
pub fn slice(ideal: &MonomialIdeal, pattern: SignPattern) -> SliceComplex {
    let sups = ideal.supports();
    let unions = subset_supports(&sups);
    let (cells, complex) = cech_complex(sups.len(), |sigma| pattern.bits() & !unions[sigma as usize] == 0);
    SliceComplex { cells, complex }
}

/// The slice complex alone.
pub fn slice_complex(ideal: &MonomialIdeal, pattern: SignPattern) -> FiniteComplex {
    slice(ideal, pattern).complex
}

/// Slice cohomology ranks `h^i(S)` for every sign pattern with a nonzero rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyProfile {
    ctx: VariableContext,
    generator_count: usize,
    entries: BTreeMap<SignPattern, Vec<usize>>,
}

impl CohomologyProfile {
    pub fn context(&self) -> &VariableContext {
        &self.ctx
    }

    /// Number of generators of the normalized ideal; `h^i = 0` beyond it.
    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn h(&self, i: usize, pattern: SignPattern) -> usize {
        self.entries.get(&pattern).and_then(|v| v.get(i)).copied().unwrap_or(0)
    }

    /// Patterns with `h^i(S) != 0`, with their ranks.
    pub fn contributors(&self, i: usize) -> impl Iterator<Item = (SignPattern, usize)> + '_ {
        self.entries
            .iter()
            .filter_map(move |(&s, v)| v.get(i).copied().filter(|&h| h > 0).map(|h| (s, h)))
    }

    pub fn entries(&self) -> &BTreeMap<SignPattern, Vec<usize>> {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Computes `h^•(S)` for every `S` inside the union of supports.
/// Patterns reaching outside the union give the zero complex and are skipped.
pub fn cohomology_profile(ideal: &MonomialIdeal) -> CohomologyProfile {
    let ideal = ideal.normalize();
    let sups = ideal.supports();
    let unions = subset_supports(&sups);
    let s = sups.len();
    let patterns: Vec<u32> = submasks(ideal.union_support()).collect();
    let entries: BTreeMap<SignPattern, Vec<usize>> = patterns
        .par_iter()
        .filter_map(|&pat| {
            let (_, complex) = cech_complex(s, |sigma| pat & !unions[sigma as usize] == 0);
            let h = complex.cohomology_dims();
            h.iter().any(|&x| x > 0).then_some((SignPattern(pat), h))
        })
        .collect();
    CohomologyProfile {
        ctx: ideal.context().clone(),
        generator_count: s,
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(ideal: &MonomialIdeal, names: &[&str]) -> SignPattern {
        SignPattern::from_vars(names.iter().map(|n| ideal.context().index_of(n).unwrap()))
    }

    #[test]
    fn irrelevant_ideal_top_slice() {
        let i = MonomialIdeal::parse_standard(0, 2, &["X1", "X2"]).unwrap();
        let c = slice_complex(&i, pat(&i, &["X1", "X2"]));
        assert_eq!(c.levels(), &[0, 0, 1]);
        assert_eq!(c.cohomology_dims(), vec![0, 0, 1]);
    }

    #[test]
    fn example_ideal_slice_at_y1() {
        let i = MonomialIdeal::parse_standard(2, 1, &["Y1*Y2", "Y1*X1"]).unwrap();
        let c = slice_complex(&i, pat(&i, &["Y1"]));
        assert_eq!(c.levels(), &[0, 2, 1]);
        assert_eq!(c.differential(1), ExactMatrix::from_rows(&[vec![-1, 1]]));
        assert_eq!(c.differential(1).rank(), 1);
    }

    #[test]
    fn pattern_outside_supports_is_zero() {
        let i = MonomialIdeal::parse_standard(1, 2, &["X1"]).unwrap();
        let c = slice_complex(&i, pat(&i, &["X1", "Y1"]));
        assert!(c.is_empty());
    }

    #[test]
    fn empty_pattern_is_acyclic() {
        let i = MonomialIdeal::parse_standard(1, 2, &["X1*Y1", "X2", "Y1*X2"])
            .unwrap()
            .normalize();
        let c = slice_complex(&i, SignPattern::EMPTY);
        assert!(c.cohomology_dims().iter().all(|&h| h == 0));
    }

    #[test]
    fn profile_of_irrelevant_ideal() {
        for m in 1..=4 {
            let gens: Vec<String> = (1..=m).map(|j| format!("X{j}")).collect();
            let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
            let i = MonomialIdeal::parse_standard(0, m, &refs).unwrap();
            let p = cohomology_profile(&i);
            assert_eq!(p.entries().len(), 1);
            let all = SignPattern(i.context().x_mask());
            assert_eq!(p.h(m, all), 1);
        }
    }

    #[test]
    fn profile_of_extended_prime() {
        let i = MonomialIdeal::parse_standard(1, 1, &["Y1"]).unwrap();
        let p = cohomology_profile(&i);
        assert_eq!(p.entries().len(), 1);
        assert_eq!(p.h(1, pat(&i, &["Y1"])), 1);
    }

    #[test]
    fn profile_of_example_ideal() {
        // Checked cell by cell against the window oracle in verify::oracle.
        let i = MonomialIdeal::parse_standard(2, 1, &["Y1*Y2", "Y1*X1"]).unwrap();
        let p = cohomology_profile(&i);
        let got: Vec<(String, Vec<usize>)> = p
            .entries()
            .iter()
            .map(|(s, h)| (s.display(i.context()), h.clone()))
            .collect();
        assert_eq!(
            got,
            vec![
                ("{Y1}".to_string(), vec![0, 1, 0]),
                ("{Y2,X1}".to_string(), vec![0, 0, 1]),
                ("{Y1,Y2,X1}".to_string(), vec![0, 0, 1]),
            ]
        );
    }
}
