use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::exactlin::{CohomologyBasis, RatMatrix};
use crate::monocech::{
    cohomology_profile, slice, submasks, CohomologyProfile, MonomialIdeal, SignPattern, SliceComplex, VariableContext,
};

/// A `Z^{d+m}`-graded module whose piece at `α` depends only on `N(α)`, with
/// multiplication by a variable `v` an isomorphism except when `α_v = -1`.
///
/// Implementors supply the pattern dimensions and the boundary maps
/// `piece(S) -> piece(S \ {v})`; every transition and derivation is built
/// from those.
pub trait PatternModule {
    fn context(&self) -> &VariableContext;

    fn pattern_dim(&self, s: SignPattern) -> usize;

    /// Multiplication by `v` from a multidegree with `α_v = -1` and pattern
    /// `s ∋ v` to the neighbouring multidegree with pattern `s \ {v}`.
    fn boundary_map(&self, s: SignPattern, v: usize) -> RatMatrix;

    /// Patterns with a nonzero piece.
    fn nonzero_patterns(&self) -> Vec<SignPattern>;

    fn label(&self) -> String;

    fn piece_dim(&self, alpha: &[i64]) -> usize {
        self.pattern_dim(SignPattern::of_multidegree(alpha))
    }

    /// Matrix of multiplication by `v`, `piece(α) -> piece(α + e_v)`.
    fn transition(&self, alpha: &[i64], v: usize) -> RatMatrix {
        let s = SignPattern::of_multidegree(alpha);
        if alpha[v] == -1 {
            self.boundary_map(s, v)
        } else {
            RatMatrix::identity(self.pattern_dim(s))
        }
    }

    /// Matrix of `∂_v`, `piece(α) -> piece(α - e_v)`. On a monomial class it
    /// multiplies by the source exponent `α_v`, so it vanishes when `α_v = 0`.
    fn derivation(&self, alpha: &[i64], v: usize) -> RatMatrix {
        let src = self.piece_dim(alpha);
        let mut lowered = alpha.to_vec();
        lowered[v] -= 1;
        let dst = self.piece_dim(&lowered);
        if alpha[v] == 0 {
            RatMatrix::zeros(dst, src)
        } else {
            debug_assert_eq!(src, dst);
            RatMatrix::scalar(src, BigRational::from_integer(BigInt::from(alpha[v])))
        }
    }
}

/// `R_F`: the ring with the variables in `F` inverted. Its piece at `α` is `K`
/// exactly when `α_v >= 0` for every `v` outside `F`.
#[derive(Clone, Debug)]
pub struct LocalizationModule {
    ctx: VariableContext,
    inverted: SignPattern,
}

impl LocalizationModule {
    pub fn new(ctx: VariableContext, inverted: SignPattern) -> Self {
        LocalizationModule { ctx, inverted }
    }

    /// `R` itself.
    pub fn ring(ctx: VariableContext) -> Self {
        Self::new(ctx, SignPattern::EMPTY)
    }

    pub fn inverted(&self) -> SignPattern {
        self.inverted
    }
}

impl PatternModule for LocalizationModule {
    fn context(&self) -> &VariableContext {
        &self.ctx
    }

    fn pattern_dim(&self, s: SignPattern) -> usize {
        usize::from(s.is_subset(self.inverted))
    }

    fn boundary_map(&self, s: SignPattern, v: usize) -> RatMatrix {
        let src = self.pattern_dim(s);
        let dst = self.pattern_dim(s.without(v));
        if src == 1 && dst == 1 {
            RatMatrix::identity(1)
        } else {
            RatMatrix::zeros(dst, src)
        }
    }

    fn nonzero_patterns(&self) -> Vec<SignPattern> {
        submasks(self.inverted.bits()).map(SignPattern).collect()
    }

    fn label(&self) -> String {
        if self.inverted.is_empty() {
            "R".into()
        } else {
            format!("R_{}", self.inverted.display(&self.ctx))
        }
    }
}

struct PatternData {
    slice: SliceComplex,
    basis: CohomologyBasis,
}

/// `H^i_I(R)` with its `R`- and `∂`-actions, presented pattern by pattern
/// through the Čech slice complexes.
///
/// For `S' ⊆ S` the slice at `S` is a subcomplex of the slice at `S'`, and
/// multiplication by `v` at `α_v = -1` is the map on cohomology induced by
/// that inclusion.
pub struct CechModule {
    ideal: MonomialIdeal,
    index: usize,
    profile: CohomologyProfile,
    cache: Mutex<HashMap<SignPattern, Arc<PatternData>>>,
}

impl CechModule {
    pub fn new(ideal: &MonomialIdeal, index: usize) -> Self {
        let ideal = ideal.normalize();
        let profile = cohomology_profile(&ideal);
        CechModule {
            ideal,
            index,
            profile,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn index(&self) -> usize {
        self.index
    }

    fn data(&self, s: SignPattern) -> Arc<PatternData> {
        let mut cache = self.cache.lock().expect("cache lock poisoned");
        cache
            .entry(s)
            .or_insert_with(|| {
                let slice = slice(&self.ideal, s);
                let basis = CohomologyBasis::new(&slice.complex, self.index);
                Arc::new(PatternData { slice, basis })
            })
            .clone()
    }
}

impl PatternModule for CechModule {
    fn context(&self) -> &VariableContext {
        self.ideal.context()
    }

    fn pattern_dim(&self, s: SignPattern) -> usize {
        self.profile.h(self.index, s)
    }

    fn boundary_map(&self, s: SignPattern, v: usize) -> RatMatrix {
        debug_assert!(s.contains(v));
        let src = self.data(s);
        let dst = self.data(s.without(v));
        let p = self.index;
        let src_cells = src.slice.cells.get(p).map_or(&[][..], Vec::as_slice);
        let dst_len = dst.slice.cells.get(p).map_or(0, Vec::len);
        let mut inclusion = RatMatrix::zeros(dst_len, src_cells.len());
        for (col, &sigma) in src_cells.iter().enumerate() {
            let row = dst.slice.position(sigma).expect("slices shrink as the pattern grows");
            inclusion[(row, col)] = BigRational::from_integer(1.into());
        }
        src.basis.induced_map(&dst.basis, &inclusion)
    }

    fn nonzero_patterns(&self) -> Vec<SignPattern> {
        self.profile.contributors(self.index).map(|(s, _)| s).collect()
    }

    fn label(&self) -> String {
        format!("H^{}_{}(R)", self.index, self.ideal)
    }
}

/// Whether multiplying by `v` then `w` agrees with `w` then `v` at `α`.
pub fn square_commutes(module: &dyn PatternModule, alpha: &[i64], v: usize, w: usize) -> bool {
    let step = |first: usize, second: usize| {
        let mut mid = alpha.to_vec();
        mid[first] += 1;
        module.transition(&mid, second).mul(&module.transition(alpha, first))
    };
    step(v, w) == step(w, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares_commute_on_cech_module() {
        let i = MonomialIdeal::parse_standard(1, 2, &["Y1*X1", "X2"]).unwrap();
        for index in 0..=2 {
            let m = CechModule::new(&i, index);
            for a in -2..=1 {
                for b in -2..=1 {
                    for c in -2..=1 {
                        for (v, w) in [(0, 1), (0, 2), (1, 2)] {
                            assert!(square_commutes(&m, &[a, b, c], v, w), "{index} {a} {b} {c} {v} {w}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn localization_pieces() {
        let ctx = VariableContext::standard(0, 2).unwrap();
        let rx = LocalizationModule::new(ctx.clone(), SignPattern::from_vars([0]));
        assert_eq!(rx.piece_dim(&[-3, 0]), 1);
        assert_eq!(rx.piece_dim(&[-3, -1]), 0);
        assert_eq!(rx.transition(&[-1, 2], 0), RatMatrix::identity(1));
        let r = LocalizationModule::ring(ctx);
        assert_eq!(r.transition(&[-1, 0], 0), RatMatrix::zeros(1, 0));
        assert_eq!(r.nonzero_patterns(), vec![SignPattern::EMPTY]);
    }

    #[test]
    fn derivation_vanishes_on_constants_in_that_variable() {
        let ctx = VariableContext::standard(0, 1).unwrap();
        let r = LocalizationModule::ring(ctx);
        assert_eq!(r.derivation(&[0], 0), RatMatrix::zeros(0, 1));
        assert_eq!(
            r.derivation(&[3], 0),
            RatMatrix::scalar(1, BigRational::from_integer(3.into()))
        );
    }

    #[test]
    fn cech_boundary_map_of_extended_prime() {
        // H^1_{(Y1)}(R): multiplying Y1^{-1} X^a by Y1 lands in R, i.e. zero.
        let i = MonomialIdeal::parse_standard(1, 1, &["Y1"]).unwrap();
        let m = CechModule::new(&i, 1);
        let s = SignPattern::from_vars([0]);
        assert_eq!(m.pattern_dim(s), 1);
        assert_eq!(m.boundary_map(s, 0), RatMatrix::zeros(0, 1));
    }

    #[test]
    fn cech_boundary_map_iso_across_patterns() {
        // H^2 of (Y1Y2, Y1X1): Y1 maps pattern {Y1,Y2,X1} isomorphically onto {Y2,X1}.
        let i = MonomialIdeal::parse_standard(2, 1, &["Y1*Y2", "Y1*X1"]).unwrap();
        let m = CechModule::new(&i, 2);
        let b = m.boundary_map(SignPattern::from_vars([0, 1, 2]), 0);
        assert_eq!(b.rows(), 1);
        assert_eq!(b.rank(), 1);
    }
}
