use num_bigint::BigInt;

use super::oracle::{oracle_compare, window_oracle};
use super::report::{CheckResult, VerificationReport, Witness};
use crate::exactlin::{binom_ext, IntegerPolynomial, Validity};
use crate::monocech::{
    DimValue, LocalCohomology, MonoError, MonomialIdeal, PatternShape, SignPattern, SupportSweep, VariableContext,
};
use crate::weylact::{y_socle, CechModule};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Box half-width for the oracle comparison; `None` skips it.
    pub oracle_bound: Option<i64>,
    /// The oracle only runs on ideals with at most this many variables.
    pub oracle_max_vars: usize,
    /// How far into each tail degrees are probed.
    pub probe_depth: i64,
    /// Whether to run the `Y`-socle checks (needs `d >= 1`).
    pub socle: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            oracle_bound: Some(2),
            oracle_max_vars: 5,
            probe_depth: 8,
            socle: true,
        }
    }
}

impl SuiteOptions {
    /// No oracle comparison, for large sweeps.
    pub fn fast() -> Self {
        SuiteOptions {
            oracle_bound: None,
            ..Self::default()
        }
    }
}

/// A multidegree with sign pattern `s` and coarse degree `n`, if one exists.
pub fn witness_alpha(ctx: &VariableContext, s: SignPattern, n: i64) -> Option<Vec<i64>> {
    let mut alpha: Vec<i64> = (0..ctx.nvars()).map(|v| if s.contains(v) { -1 } else { 0 }).collect();
    let gap = n - ctx.coarse_degree(&alpha);
    if gap != 0 {
        let v = ctx.x_vars().find(|&v| (gap > 0) != s.contains(v))?;
        alpha[v] += gap;
    }
    Some(alpha)
}

struct Probes {
    neg: Vec<i64>,
    gap: Vec<i64>,
    nonneg: Vec<i64>,
}

impl Probes {
    fn new(m: usize, depth: i64) -> Self {
        let m = m as i64;
        Probes {
            neg: (0..=depth).map(|t| -m - t).collect(),
            gap: (-m + 1..0).collect(),
            nonneg: (0..=depth).collect(),
        }
    }

    fn all(&self) -> impl Iterator<Item = i64> + '_ {
        self.neg.iter().chain(&self.gap).chain(&self.nonneg).copied()
    }
}

fn dim_u64(d: &DimValue) -> BigInt {
    BigInt::from(d.as_finite().cloned().expect("finite dimension"))
}

/// `nonzero(n)` must be constant on each tail, and a nonzero gap degree
/// forces every degree to be nonzero.
fn tail_law(probes: &Probes, nonzero: impl Fn(i64) -> bool) -> Result<(), (i64, String)> {
    for tail in [&probes.neg, &probes.nonneg] {
        if let Some(&n) = tail.iter().find(|&&n| nonzero(n) != nonzero(tail[0])) {
            return Err((n, format!("vanishing differs from degree {} on the same tail", tail[0])));
        }
    }
    if let Some(&r) = probes.gap.iter().find(|&&r| nonzero(r)) {
        if let Some(n) = probes.all().find(|&n| !nonzero(n)) {
            return Err((n, format!("zero although the gap degree {r} is nonzero")));
        }
    }
    Ok(())
}

/// Runs every structural check on `H^i_I(R)` for all `i`.
pub fn theorem_suite(ideal: &MonomialIdeal, options: &SuiteOptions) -> VerificationReport {
    let lc = LocalCohomology::new(ideal);
    let ctx = lc.context().clone();
    let (d, m) = (ctx.d(), ctx.m());
    let probes = Probes::new(m, options.probe_depth);
    let sweep = (d > 0).then(|| SupportSweep::new(ideal));
    let mut report = VerificationReport::default();

    for i in 0..=lc.max_index() {
        let at = |n: i64| Witness::new(ideal).index(i).degree(n);
        let shape = match lc.shape(i) {
            Ok(shape) => {
                report.push(CheckResult::pass(
                    &format!("H^{i} shape"),
                    "degree set is one of five shapes",
                ));
                shape
            }
            Err(e) => {
                report.push(CheckResult::fail(
                    &format!("H^{i} shape"),
                    "degree set is one of five shapes",
                    Witness::new(ideal).index(i).detail(e.to_string()),
                ));
                continue;
            }
        };
        if shape == PatternShape::TwoTails {
            report.push(CheckResult::check(
                &format!("H^{i} two tails need m >= 2"),
                "two tails only with at least two degree-1 variables",
                m >= 2,
                || Witness::new(ideal).index(i).detail("two tails with m = 1"),
            ));
        }

        let nonzero = |n: i64| lc.piece_nonzero(i, n);
        let name = format!("H^{i} tail rigidity");
        report.push(match tail_law(&probes, nonzero) {
            Ok(()) => CheckResult::pass(&name, "vanishing is constant on each tail; a nonzero gap forces all"),
            Err((n, why)) => CheckResult::fail(
                &name,
                "vanishing is constant on each tail; a nonzero gap forces all",
                at(n).detail(why),
            ),
        });
        report.push(CheckResult::check(
            &format!("H^{i} shape agrees with probes"),
            "reported shape matches pointwise vanishing",
            probes.all().all(|n| shape.contains(n, m) == nonzero(n)),
            || Witness::new(ideal).index(i).detail(format!("shape {shape}")),
        ));

        for c in lc.contributors(i) {
            let n = match PatternShape::of_x_count(c.x_count, m) {
                PatternShape::NegTailOnly => -(m as i64),
                _ => 0,
            };
            let alpha = witness_alpha(&ctx, c.pattern, n).expect("the pattern reaches its own degree range");
            let oracle = window_oracle(ideal, i, &alpha);
            report.push(CheckResult::check(
                &format!("H^{i} contributor {} confirmed", c.pattern.display(&ctx)),
                "contributing pattern is nonzero in the window oracle",
                oracle == c.rank,
                || {
                    Witness::new(ideal)
                        .index(i)
                        .alpha(alpha.clone())
                        .detail(format!("oracle {oracle}, engine {}", c.rank))
                },
            ));
        }

        if shape == PatternShape::NonnegOnly {
            let name = format!("H^{i} nonnegative-only has a coefficient witness");
            let property = "every generator involves a degree-0 variable";
            report.push(match ideal.normalize().y_part_ideal() {
                Some(q) => {
                    let gens: Vec<String> = q.iter().map(|s| s.display(&ctx)).collect();
                    let mut entry = CheckResult::pass(&name, property);
                    entry.witness = Some(
                        Witness::new(ideal)
                            .index(i)
                            .detail(format!("Q = ({})", gens.join(", "))),
                    );
                    entry
                }
                None => CheckResult::fail(
                    &name,
                    property,
                    Witness::new(ideal).index(i).detail("a generator has no Y"),
                ),
            });
        }

        if d == 0 {
            hilbert_checks(&lc, ideal, i, &probes, &mut report);
        }

        if ideal.meets_coefficient_ring() {
            let bad = probes.all().find(|&n| nonzero(n) && lc.piece_finitely_generated(i, n));
            report.push(CheckResult::check(
                &format!("H^{i} infinite generation"),
                "with I ∩ A ≠ 0 every nonzero piece is not finitely generated over A",
                bad.is_none(),
                || at(bad.unwrap_or(0)).detail("finitely generated nonzero piece"),
            ));
        }

        if let Some(sweep) = &sweep {
            let mm = m as i64;
            for (tail, degrees) in [
                ("negative", vec![-mm, -mm - 1, -mm - 3, -mm - 5, -mm - 7]),
                ("nonnegative", vec![0, 1, 3, 5, 7]),
            ] {
                let first = sweep.min_primes(i, degrees[0]);
                let bad = degrees.iter().copied().find(|&n| sweep.min_primes(i, n) != first);
                report.push(CheckResult::check(
                    &format!("H^{i} support stable on the {tail} tail"),
                    "minimal primes of the support are constant along the tail",
                    bad.is_none(),
                    || at(bad.unwrap_or(0)).detail(format!("differs from degree {}", degrees[0])),
                ));
            }
            let bound = sweep.support_dim(i, -mm).min(sweep.support_dim(i, 0));
            let bad = probes.gap.iter().copied().find(|&r| sweep.support_dim(i, r) > bound);
            if !probes.gap.is_empty() {
                report.push(CheckResult::check(
                    &format!("H^{i} gap support dimension"),
                    "support dimension in the gap is at most that at -m and at 0",
                    bad.is_none(),
                    || at(bad.unwrap_or(0)).detail(format!("exceeds {bound}")),
                ));
            }
            if options.socle {
                let module = CechModule::new(ideal, i);
                let socle = |n: i64| !y_socle(&module, n).expect("d >= 1").is_zero();
                let name = format!("H^{i} socle shape");
                let inside = probes.all().find(|&n| socle(n) && !nonzero(n));
                let law = tail_law(&probes, socle);
                report.push(match (inside, law) {
                    (None, Ok(())) => CheckResult::pass(&name, "socle in Y vanishes like a five-shape module"),
                    (Some(n), _) => CheckResult::fail(
                        &name,
                        "socle in Y vanishes like a five-shape module",
                        at(n).detail("socle nonzero on a zero piece"),
                    ),
                    (None, Err((n, why))) => {
                        CheckResult::fail(&name, "socle in Y vanishes like a five-shape module", at(n).detail(why))
                    }
                });
            }
        }
    }

    if let Some(bound) = options.oracle_bound.filter(|_| ctx.nvars() <= options.oracle_max_vars) {
        report.extend(oracle_compare(ideal, bound));
    }
    report
}

fn hilbert_checks(
    lc: &LocalCohomology,
    ideal: &MonomialIdeal,
    i: usize,
    probes: &Probes,
    report: &mut VerificationReport,
) {
    let m = lc.context().m();
    let mm = m as i64;
    let (f, g) = match lc.hilbert_pair(i) {
        Ok(pair) => pair,
        Err(MonoError::InfiniteDims { .. }) => {
            report.push(CheckResult::skip(
                &format!("H^{i} Hilbert polynomials"),
                "pieces are finite-dimensional",
                Witness::new(ideal).index(i).detail("infinite-dimensional pieces"),
            ));
            return;
        }
        Err(e) => {
            report.push(CheckResult::fail(
                &format!("H^{i} Hilbert polynomials"),
                "pieces are finite-dimensional",
                Witness::new(ideal).index(i).detail(e.to_string()),
            ));
            return;
        }
    };
    let dim = |n: i64| dim_u64(&lc.piece_dimension(i, n).expect("d = 0"));
    let samples = |ns: Vec<i64>| -> Vec<(i64, BigInt)> { ns.into_iter().map(|n| (n, dim(n))).collect() };
    let count = m as i64 + 2;
    let fit_f = IntegerPolynomial::fit(&samples((0..count).map(|t| -mm - t).collect()), Validity::AtMost(-mm));
    let fit_g = IntegerPolynomial::fit(&samples((0..count).collect()), Validity::AtLeast(0));
    let fits = fit_f.as_ref().is_ok_and(|p| *p == f) && fit_g.as_ref().is_ok_and(|p| *p == g);
    report.push(CheckResult::check(
        &format!("H^{i} Hilbert polynomials fit"),
        "interpolated dimensions agree with the closed form",
        fits,
        || {
            Witness::new(ideal)
                .index(i)
                .detail(format!("closed form f = {f}, g = {g}"))
        },
    ));
    let low = |p: &IntegerPolynomial| p.degree().is_none_or(|k| k < m);
    report.push(CheckResult::check(
        &format!("H^{i} Hilbert degree bound"),
        "Hilbert polynomials have degree at most m - 1",
        low(&f) && low(&g),
        || Witness::new(ideal).index(i).detail(format!("f = {f}, g = {g}")),
    ));

    let nonzero_module = probes.all().any(|n| lc.piece_nonzero(i, n));
    let zero_gap = probes.gap.iter().any(|&r| !lc.piece_nonzero(i, r));
    if nonzero_module && zero_gap {
        let exact = |p: &IntegerPolynomial| p.is_zero() || p.degree() == Some(m - 1);
        report.push(CheckResult::check(
            &format!("H^{i} Hilbert degree exact"),
            "with a zero gap degree each polynomial is zero or of degree m - 1",
            exact(&f) && exact(&g),
            || Witness::new(ideal).index(i).detail(format!("f = {f}, g = {g}")),
        ));
        let k = (m - 1) as u32;
        let at_zero = dim(0);
        let at_tail = dim(-mm);
        let bad = probes
            .nonneg
            .iter()
            .copied()
            .find(|&n| dim(n) != &at_zero * binom_ext(n + mm - 1, k))
            .or_else(|| {
                probes
                    .neg
                    .iter()
                    .copied()
                    .find(|&n| dim(n) != &at_tail * binom_ext(-n - 1, k))
            });
        report.push(CheckResult::check(
            &format!("H^{i} binomial growth"),
            "dimensions are a fixed multiple of binom(n+m-1, m-1) on each tail",
            bad.is_none(),
            || {
                Witness::new(ideal)
                    .index(i)
                    .degree(bad.unwrap_or(0))
                    .detail("not a multiple of the binomial")
            },
        ));
    }
}
