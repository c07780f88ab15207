use std::fmt;

use serde::{Deserialize, Serialize};

use super::module::PatternModule;
use super::WeylError;
use crate::exactlin::RatMatrix;
use crate::monocech::{lattice_count, DimValue, MonomialIdeal, SignPattern, VariableContext};
use crate::weylact::CechModule;

/// Which operator a two-term Koszul complex is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HomologyKind {
    /// multiplication by a variable, raising degree by one
    Mult,
    /// `∂_v`, lowering degree by one
    Derham,
}

impl fmt::Display for HomologyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HomologyKind::Mult => "mult",
            HomologyKind::Derham => "derham",
        })
    }
}

/// The grading of `H_l(x; M)` and `H_l(∂; M)`, fixed so that the sequences
///
/// ```text
/// 0 -> H_1(x; M)_j -> M_{j-1} --x--> M_j -> H_0(x; M)_j -> 0
/// 0 -> H_1(∂; M)_j -> M_{j+1} --∂--> M_j -> H_0(∂; M)_j -> 0
/// ```
///
/// are exact. Every homology operation in this module uses it.
pub struct KoszulConvention;

impl KoszulConvention {
    /// Degree of the source piece whose kernel is `H_1(·; M)_j`.
    pub fn source_degree(kind: HomologyKind, j: i64) -> i64 {
        match kind {
            HomologyKind::Mult => j - 1,
            HomologyKind::Derham => j + 1,
        }
    }
}

/// Dimensions of `H_1` and `H_0` at one degree, with the patterns that
/// contribute to each.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Homology {
    pub h1: DimValue,
    pub h0: DimValue,
    pub h1_patterns: Vec<SignPattern>,
    pub h0_patterns: Vec<SignPattern>,
}

/// Number of multidegrees `α` with `N(α) = s`, `α_u = value` for each fixed
/// pair, and coarse degree `n`.
pub fn pattern_count(ctx: &VariableContext, s: SignPattern, fixed: &[(usize, i64)], n: i64) -> DimValue {
    let mut fixed_mask = 0u32;
    let mut total = n;
    for &(u, value) in fixed {
        if (value < 0) != s.contains(u) {
            return DimValue::zero();
        }
        fixed_mask |= 1 << u;
        if ctx.is_x(u) {
            total -= value;
        }
    }
    let free_x = ctx.x_mask() & !fixed_mask;
    let neg = (free_x & s.bits()).count_ones() as usize;
    let nonneg = (free_x & !s.bits()).count_ones() as usize;
    let count = lattice_count(neg, nonneg, total);
    let free_y = ctx.y_mask() & !fixed_mask;
    if free_y != 0 && !count.is_zero() {
        DimValue::Infinite
    } else {
        count
    }
}

/// `dim_K M_n`, summed over all patterns.
pub fn coarse_dimension(module: &dyn PatternModule, n: i64) -> DimValue {
    let ctx = module.context();
    module
        .nonzero_patterns()
        .into_iter()
        .map(|s| pattern_count(ctx, s, &[], n).times(module.pattern_dim(s)))
        .sum()
}

fn require_x(module: &dyn PatternModule, v: usize) -> Result<(), WeylError> {
    if module.context().is_x(v) {
        Ok(())
    } else {
        Err(WeylError::NotAnXVariable(v))
    }
}

fn accumulate(terms: impl Iterator<Item = (SignPattern, DimValue)>) -> (DimValue, Vec<SignPattern>) {
    let mut total = DimValue::zero();
    let mut patterns = Vec::new();
    for (s, dim) in terms {
        if !dim.is_zero() {
            patterns.push(s);
            total = total + dim;
        }
    }
    (total, patterns)
}

/// Koszul homology of multiplication by the `X`-variable `v` at degree `n`.
///
/// Away from `α_v = -1` the map is the identity, so the kernel lives on
/// source multidegrees with `α_v = -1` and the cokernel on target
/// multidegrees with `β_v = 0`.
pub fn koszul_homology_x(module: &dyn PatternModule, v: usize, n: i64) -> Result<Homology, WeylError> {
    require_x(module, v)?;
    let ctx = module.context();
    let patterns = module.nonzero_patterns();
    let source = KoszulConvention::source_degree(HomologyKind::Mult, n);
    let (h1, h1_patterns) = accumulate(patterns.iter().filter(|s| s.contains(v)).map(|&s| {
        let kernel = module.pattern_dim(s) - module.boundary_map(s, v).rank();
        (s, pattern_count(ctx, s, &[(v, -1)], source).times(kernel))
    }));
    let (h0, h0_patterns) = accumulate(patterns.iter().filter(|s| !s.contains(v)).map(|&s| {
        let image = module.boundary_map(s.with(v), v).rank();
        let coker = module.pattern_dim(s) - image;
        (s, pattern_count(ctx, s, &[(v, 0)], n).times(coker))
    }));
    Ok(Homology {
        h1,
        h0,
        h1_patterns,
        h0_patterns,
    })
}

/// de Rham homology of `∂_v` at degree `n`.
///
/// `∂_v` is a nonzero scalar unless the source exponent `α_v` is zero, where
/// it vanishes; so the kernel sits at `α_v = 0` and the cokernel at `β_v = -1`.
pub fn derham_homology(module: &dyn PatternModule, v: usize, n: i64) -> Result<Homology, WeylError> {
    require_x(module, v)?;
    let ctx = module.context();
    let patterns = module.nonzero_patterns();
    let source = KoszulConvention::source_degree(HomologyKind::Derham, n);
    let (h1, h1_patterns) = accumulate(
        patterns
            .iter()
            .filter(|s| !s.contains(v))
            .map(|&s| (s, pattern_count(ctx, s, &[(v, 0)], source).times(module.pattern_dim(s)))),
    );
    let (h0, h0_patterns) = accumulate(
        patterns
            .iter()
            .filter(|s| s.contains(v))
            .map(|&s| (s, pattern_count(ctx, s, &[(v, -1)], n).times(module.pattern_dim(s)))),
    );
    Ok(Homology {
        h1,
        h0,
        h1_patterns,
        h0_patterns,
    })
}

/// `dim_K H_d(Y_1..Y_d; M)_n`: the joint kernel of all `Y`-multiplications.
///
/// Each `Y_j` is the identity unless `α_{Y_j} = -1`, so only the corner
/// multidegrees with every `Y`-coordinate equal to `-1` contribute.
pub fn y_socle(module: &dyn PatternModule, n: i64) -> Result<DimValue, WeylError> {
    let ctx = module.context();
    if ctx.d() == 0 {
        return Err(WeylError::NoYVariables);
    }
    let y = ctx.y_mask();
    let corner: Vec<(usize, i64)> = ctx.y_vars().map(|u| (u, -1)).collect();
    Ok(module
        .nonzero_patterns()
        .into_iter()
        .filter(|s| s.bits() & y == y)
        .map(|s| {
            let dim = module.pattern_dim(s);
            let stacked = ctx
                .y_vars()
                .map(|u| module.boundary_map(s, u))
                .fold(RatMatrix::zeros(0, dim), |acc, b| acc.vstack(&b));
            pattern_count(ctx, s, &corner, n).times(dim - stacked.rank())
        })
        .sum())
}

/// `y_socle` of `H^i_I(R)`.
pub fn koszul_homology_y(ideal: &MonomialIdeal, i: usize, n: i64) -> Result<DimValue, WeylError> {
    y_socle(&CechModule::new(ideal, i), n)
}

/// Checks `dim H_1 - dim M_source + dim M_n - dim H_0 = 0` at degree `n`.
/// `None` when any of the four terms is infinite.
pub fn four_term_check(
    module: &dyn PatternModule,
    v: usize,
    kind: HomologyKind,
    n: i64,
) -> Result<Option<bool>, WeylError> {
    let h = match kind {
        HomologyKind::Mult => koszul_homology_x(module, v, n)?,
        HomologyKind::Derham => derham_homology(module, v, n)?,
    };
    let source = coarse_dimension(module, KoszulConvention::source_degree(kind, n));
    let target = coarse_dimension(module, n);
    let terms = [&h.h1, &source, &target, &h.h0];
    let finite: Option<Vec<_>> = terms.iter().map(|d| d.as_finite().cloned()).collect();
    Ok(finite.map(|t| &t[0] + &t[2] == &t[1] + &t[3]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weylact::LocalizationModule;

    fn ring(m: usize) -> LocalizationModule {
        LocalizationModule::ring(VariableContext::standard(0, m).unwrap())
    }

    fn injective_hull() -> CechModule {
        CechModule::new(&MonomialIdeal::parse_standard(0, 1, &["X1"]).unwrap(), 1)
    }

    fn fin(n: u64) -> DimValue {
        DimValue::finite(n)
    }

    #[test]
    fn mult_homology_m1() {
        let e = injective_hull();
        for n in -5..=5 {
            let h = koszul_homology_x(&e, 0, n).unwrap();
            assert_eq!(h.h1, fin(u64::from(n == 0)), "n={n}");
            assert_eq!(h.h0, fin(0));
            let r = koszul_homology_x(&ring(1), 0, n).unwrap();
            assert_eq!(r.h1, fin(0));
            assert_eq!(r.h0, fin(u64::from(n == 0)));
        }
    }

    #[test]
    fn derham_homology_m1() {
        for n in -5..=5 {
            let r = derham_homology(&ring(1), 0, n).unwrap();
            assert_eq!((r.h1, r.h0), (fin(u64::from(n == -1)), fin(0)), "n={n}");
            let e = derham_homology(&injective_hull(), 0, n).unwrap();
            assert_eq!((e.h1, e.h0), (fin(0), fin(u64::from(n == -1))), "n={n}");
        }
    }

    #[test]
    fn derham_second_variable_m2() {
        for j in -4..=4 {
            let h = derham_homology(&ring(2), 1, j).unwrap();
            assert_eq!(h.h1, fin(u64::from(j >= -1)), "j={j}");
            assert_eq!(h.h0, fin(0));
        }
    }

    #[test]
    fn mult_homology_of_partial_localization() {
        let m = CechModule::new(&MonomialIdeal::parse_standard(0, 2, &["X1"]).unwrap(), 1);
        for n in -4..=4 {
            let h = koszul_homology_x(&m, 1, n).unwrap();
            assert_eq!(h.h1, fin(0));
            assert_eq!(h.h0, fin(u64::from(n <= -1)), "n={n}");
        }
    }

    #[test]
    fn y_socle_examples() {
        let p = MonomialIdeal::parse_standard(1, 1, &["Y1"]).unwrap();
        for n in -4..=4 {
            assert_eq!(koszul_homology_y(&p, 1, n).unwrap(), fin(u64::from(n >= 0)));
        }
        let free = MonomialIdeal::parse_standard(2, 2, &["X1", "X2"]).unwrap();
        for n in -4..=1 {
            assert_eq!(koszul_homology_y(&free, 2, n).unwrap(), fin(0));
        }
        let j = MonomialIdeal::parse_standard(2, 1, &["Y1*Y2", "Y1*X1"]).unwrap();
        for n in -4..=2 {
            assert_eq!(koszul_homology_y(&j, 2, n).unwrap(), fin(0));
        }
        let no_y = MonomialIdeal::parse_standard(0, 1, &["X1"]).unwrap();
        assert_eq!(koszul_homology_y(&no_y, 1, 0), Err(WeylError::NoYVariables));
    }

    #[test]
    fn four_term_examples() {
        assert_eq!(
            four_term_check(&ring(1), 0, HomologyKind::Derham, -1).unwrap(),
            Some(true)
        );
        assert_eq!(
            four_term_check(&injective_hull(), 0, HomologyKind::Mult, 0).unwrap(),
            Some(true)
        );
        let h = CechModule::new(&MonomialIdeal::parse_standard(0, 2, &["X1", "X2"]).unwrap(), 2);
        assert_eq!(four_term_check(&h, 1, HomologyKind::Mult, -1).unwrap(), Some(true));
        let all_z = CechModule::new(&MonomialIdeal::parse_standard(0, 2, &["X1"]).unwrap(), 1);
        assert_eq!(four_term_check(&all_z, 1, HomologyKind::Mult, 0).unwrap(), None);
    }

    #[test]
    fn rejects_y_variable() {
        let ctx = VariableContext::standard(1, 1).unwrap();
        let r = LocalizationModule::ring(ctx);
        assert_eq!(koszul_homology_x(&r, 0, 0), Err(WeylError::NotAnXVariable(0)));
    }

    #[test]
    fn pattern_count_cases() {
        let ctx = VariableContext::standard(1, 2).unwrap();
        let x1 = SignPattern::from_vars([1]);
        // Y free with a nonempty X count is infinite
        assert_eq!(pattern_count(&ctx, x1, &[(2, 0)], -1), DimValue::Infinite);
        assert_eq!(pattern_count(&ctx, x1, &[(0, 3), (2, 0)], -2), fin(1));
        // fixed value inconsistent with the pattern
        assert_eq!(pattern_count(&ctx, x1, &[(1, 0)], 0), fin(0));
    }
}
