use std::collections::{BTreeMap, BTreeSet};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::report::VerificationReport;
use super::suite::{theorem_suite, SuiteOptions};
use crate::cli::IdealSpec;
use crate::monocech::{LocalCohomology, MonomialIdeal, PatternShape, VariableContext};

/// A reproducible pseudo-random ideal with squarefree generators.
///
/// Each generator has a support of uniform size in `1..=max_support`
/// (capped at `d + m`), drawn without replacement.
pub fn random_ideal(seed: u64, d: usize, m: usize, gen_count: usize, max_support: usize) -> MonomialIdeal {
    let ctx = VariableContext::standard(d, m).expect("m >= 1");
    let n = ctx.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let top = max_support.clamp(1, n);
    let supports: Vec<u32> = (0..gen_count.max(1))
        .map(|_| {
            let size = rng.random_range(1..=top);
            sample(&mut rng, n, size).iter().fold(0u32, |acc, v| acc | 1 << v)
        })
        .collect();
    MonomialIdeal::from_supports(ctx, &supports).expect("supports are nonempty")
}

/// Every normalized squarefree ideal on `d + m` variables: one per antichain
/// of nonempty subsets.
pub fn exhaustive_ideals(d: usize, m: usize) -> Vec<MonomialIdeal> {
    let ctx = VariableContext::standard(d, m).expect("m >= 1");
    let n = ctx.nvars();
    let subsets: Vec<u32> = (1u32..1 << n).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    extend_antichains(&subsets, 0, &mut chosen, &mut |gens| {
        let ideal = MonomialIdeal::from_supports(ctx.clone(), gens).expect("nonempty supports");
        out.push(ideal);
    });
    out
}

fn extend_antichains(subsets: &[u32], from: usize, chosen: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if !chosen.is_empty() {
        emit(chosen);
    }
    for k in from..subsets.len() {
        let s = subsets[k];
        if chosen.iter().all(|&c| c & s != c && c & s != s) {
            chosen.push(s);
            extend_antichains(subsets, k + 1, chosen, emit);
            chosen.pop();
        }
    }
}

/// The seeded random instances used by the sweeps: `count` ideals cycling
/// through every `(d, m)` with `d + m` in `2..=max_vars`.
pub fn random_instances(seed: u64, count: usize, max_vars: usize) -> Vec<MonomialIdeal> {
    let shapes: Vec<(usize, usize)> = (2..=max_vars).flat_map(|n| (1..=n).map(move |m| (n - m, m))).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let (d, m) = shapes[k % shapes.len()];
            let n = d + m;
            let gens = rng.random_range(1..=n.min(5));
            random_ideal(rng.random(), d, m, gens, n.min(4))
        })
        .collect()
}

/// Aggregate results of running the theorem suite over many ideals.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct SweepSummary {
    pub instances: usize,
    /// shape name -> number of `(ideal, i)` pairs
    pub shapes: BTreeMap<String, usize>,
    pub two_tails_with_m1: usize,
    pub nonneg_only: usize,
    pub report: VerificationReport,
}

/// Runs the suite on every ideal in parallel; report order follows the input.
pub fn sweep(ideals: &[MonomialIdeal], options: &SuiteOptions) -> SweepSummary {
    let results: Vec<(Vec<PatternShape>, usize, VerificationReport)> = ideals
        .par_iter()
        .map(|ideal| {
            let lc = LocalCohomology::new(ideal);
            let shapes: Vec<PatternShape> = (0..=lc.max_index()).filter_map(|i| lc.shape(i).ok()).collect();
            (shapes, lc.context().m(), theorem_suite(ideal, options))
        })
        .collect();
    let mut summary = SweepSummary {
        instances: ideals.len(),
        ..Default::default()
    };
    for (k, (shapes, m, report)) in results.into_iter().enumerate() {
        for s in shapes {
            *summary.shapes.entry(s.to_string()).or_default() += 1;
            summary.two_tails_with_m1 += usize::from(s == PatternShape::TwoTails && m == 1);
            summary.nonneg_only += usize::from(s == PatternShape::NonnegOnly);
        }
        summary.report.extend(report.with_case(&format!("#{k}")));
    }
    summary
}

/// Outcome of searching random ideals for two-tailed cohomology.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TwoTailSearch {
    pub searched: usize,
    pub two_tail_instances: usize,
    /// instances with `d <= m`
    pub with_d_at_most_m: usize,
    pub examples: Vec<IdealSpec>,
    /// `"found"` or `"inconclusive"`; never a proof of nonexistence
    pub verdict: String,
}

pub fn two_tail_search(seed: u64, count: usize, max_vars: usize) -> TwoTailSearch {
    let ideals = random_instances(seed, count, max_vars);
    let hits: Vec<&MonomialIdeal> = ideals
        .par_iter()
        .filter(|ideal| {
            let lc = LocalCohomology::new(ideal);
            (0..=lc.max_index()).any(|i| lc.shape(i) == Ok(PatternShape::TwoTails))
        })
        .collect();
    let small: Vec<&&MonomialIdeal> = hits.iter().filter(|i| i.context().d() <= i.context().m()).collect();
    let mut seen = BTreeSet::new();
    let examples = small
        .iter()
        .map(|i| IdealSpec::from_ideal(&i.normalize()))
        .filter(|s| seen.insert(serde_json::to_string(s).expect("spec serializes")))
        .take(5)
        .collect();
    TwoTailSearch {
        searched: count,
        two_tail_instances: hits.len(),
        with_d_at_most_m: small.len(),
        examples,
        verdict: if small.is_empty() { "inconclusive" } else { "found" }.into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_ideal_is_deterministic() {
        let a = random_ideal(1, 1, 2, 2, 2);
        assert_eq!(a, random_ideal(1, 1, 2, 2, 2));
        assert_eq!(a.generator_count(), 2);
        assert!(a.generators().iter().all(|g| g.iter().all(|&e| e <= 1)));
    }

    #[test]
    fn seeded_random_ideal_passes_suite() {
        let i = random_ideal(2, 2, 2, 3, 3);
        let r = theorem_suite(&i, &SuiteOptions::default());
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn antichain_counts() {
        // antichains of nonempty subsets of an n-set, excluding the empty family:
        // Dedekind numbers minus 2
        assert_eq!(exhaustive_ideals(0, 1).len(), 1);
        assert_eq!(exhaustive_ideals(0, 2).len(), 4);
        assert_eq!(exhaustive_ideals(1, 2).len(), 18);
        assert_eq!(exhaustive_ideals(2, 2).len(), 166);
        assert!(exhaustive_ideals(1, 2).iter().all(MonomialIdeal::is_normalized));
    }
}
