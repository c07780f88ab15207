use num_bigint::BigInt;

use super::context::{SignPattern, VariableContext};
use super::ideal::MonomialIdeal;
use super::shape::{lattice_count, DegreeSet, DimValue, PatternShape};
use super::slice::{cohomology_profile, CohomologyProfile};
use super::MonoError;
use crate::exactlin::{IntegerPolynomial, Validity};

/// One sign pattern contributing to `H^i_I(R)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contributor {
    pub pattern: SignPattern,
    /// `h^i(S)`
    pub rank: usize,
    /// `|S ∩ X|`
    pub x_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternReport {
    pub ideal: MonomialIdeal,
    pub index: usize,
    pub shape: PatternShape,
    pub contributors: Vec<Contributor>,
}

/// `H^•_I(R)` for a monomial ideal, held as its cohomology profile.
///
/// The graded piece at a multidegree `α` is `K^{h^i(N(α))}`, so every query
/// below reduces to the profile plus lattice-point counts.
#[derive(Clone, Debug)]
pub struct LocalCohomology {
    ideal: MonomialIdeal,
    profile: CohomologyProfile,
}

impl LocalCohomology {
    pub fn new(ideal: &MonomialIdeal) -> Self {
        let ideal = ideal.normalize();
        let profile = cohomology_profile(&ideal);
        LocalCohomology { ideal, profile }
    }

    /// The normalized ideal.
    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn context(&self) -> &VariableContext {
        self.ideal.context()
    }

    pub fn profile(&self) -> &CohomologyProfile {
        &self.profile
    }

    /// Largest cohomological index that can be nonzero.
    pub fn max_index(&self) -> usize {
        self.profile.generator_count()
    }

    pub fn contributors(&self, i: usize) -> Vec<Contributor> {
        let ctx = self.context();
        self.profile
            .contributors(i)
            .map(|(pattern, rank)| Contributor {
                pattern,
                rank,
                x_count: pattern.x_count(ctx),
            })
            .collect()
    }

    pub fn pattern_report(&self, i: usize) -> Result<PatternReport, MonoError> {
        let m = self.context().m();
        let contributors = self.contributors(i);
        let mut set = DegreeSet::empty();
        let neg_tail = -(m as i64);
        for c in &contributors {
            match PatternShape::of_x_count(c.x_count, m) {
                PatternShape::NonnegOnly => set.insert(Some(0), None),
                PatternShape::NegTailOnly => set.insert(None, Some(neg_tail)),
                _ => set.insert(None, None),
            }
        }
        let shape = set.classify(m).ok_or_else(|| MonoError::ShapeViolation {
            ideal: self.ideal.to_string(),
            index: i,
            degrees: format!("{:?}", set.intervals()),
        })?;
        if shape == PatternShape::TwoTails && m < 2 {
            return Err(MonoError::ShapeViolation {
                ideal: self.ideal.to_string(),
                index: i,
                degrees: "two tails with m = 1".into(),
            });
        }
        Ok(PatternReport {
            ideal: self.ideal.clone(),
            index: i,
            shape,
            contributors,
        })
    }

    pub fn shape(&self, i: usize) -> Result<PatternShape, MonoError> {
        self.pattern_report(i).map(|r| r.shape)
    }

    pub fn piece_nonzero(&self, i: usize, n: i64) -> bool {
        let m = self.context().m();
        self.contributors(i)
            .iter()
            .any(|c| PatternShape::of_x_count(c.x_count, m).contains(n, m))
    }

    /// `dim_K H^i_I(R)_n`; only meaningful over a field, so `d = 0` is required.
    pub fn piece_dimension(&self, i: usize, n: i64) -> Result<DimValue, MonoError> {
        let ctx = self.context();
        if ctx.d() > 0 {
            return Err(MonoError::NeedsStrand { d: ctx.d() });
        }
        let m = ctx.m();
        Ok(self
            .contributors(i)
            .iter()
            .map(|c| lattice_count(c.x_count, m - c.x_count, n).times(c.rank))
            .sum())
    }

    /// Dimension of the part of `H^i_I(R)_n` with fixed `Y`-multidegree.
    pub fn strand_dimension(&self, i: usize, y_degree: &[i64], n: i64) -> Result<DimValue, MonoError> {
        let ctx = self.context();
        if y_degree.len() != ctx.d() {
            return Err(MonoError::StrandLength {
                expected: ctx.d(),
                found: y_degree.len(),
            });
        }
        let y_pattern = SignPattern::of_multidegree(y_degree);
        let m = ctx.m();
        Ok(self
            .contributors(i)
            .iter()
            .filter(|c| c.pattern.y_part(ctx) == y_pattern)
            .map(|c| lattice_count(c.x_count, m - c.x_count, n).times(c.rank))
            .sum())
    }

    /// Polynomials `f` (valid for `n <= -m`) and `g` (valid for `n >= 0`) with
    /// `f(n) = dim H^i_I(R)_n` and `g(n) = dim H^i_I(R)_n` on those ranges.
    pub fn hilbert_pair(&self, i: usize) -> Result<(IntegerPolynomial, IntegerPolynomial), MonoError> {
        let ctx = self.context();
        if ctx.d() > 0 {
            return Err(MonoError::NeedsStrand { d: ctx.d() });
        }
        let m = ctx.m();
        let mut neg = 0usize;
        let mut nonneg = 0usize;
        for c in self.contributors(i) {
            match PatternShape::of_x_count(c.x_count, m) {
                PatternShape::NegTailOnly => neg += c.rank,
                PatternShape::NonnegOnly => nonneg += c.rank,
                _ => return Err(MonoError::InfiniteDims { index: i }),
            }
        }
        // binom(-n-1, m-1) = (-1)^(m-1) binom(n+m-1, m-1) as polynomials in n
        let sign = if (m - 1).is_multiple_of(2) { 1 } else { -1 };
        let f =
            IntegerPolynomial::basis_multiple(m - 1, BigInt::from(sign * neg as i64), Validity::AtMost(-(m as i64)));
        let g = IntegerPolynomial::basis_multiple(m - 1, BigInt::from(nonneg), Validity::AtLeast(0));
        Ok((f, g))
    }

    /// Whether `H^i_I(R)_n` is finitely generated over `A = K[Y]`.
    ///
    /// A contributing pattern with a negative `Y` coordinate has `Y`-degrees
    /// unbounded below; one with `0 < k < m` contributes infinitely many
    /// `X`-monomials. Otherwise the piece is a free `A`-module of finite rank.
    pub fn piece_finitely_generated(&self, i: usize, n: i64) -> bool {
        let ctx = self.context();
        let m = ctx.m();
        self.contributors(i).iter().all(|c| {
            let reaches = PatternShape::of_x_count(c.x_count, m).contains(n, m);
            !reaches || (c.pattern.y_part(ctx).is_empty() && (c.x_count == 0 || c.x_count == m))
        })
    }
}

pub fn pattern_report(ideal: &MonomialIdeal, i: usize) -> Result<PatternReport, MonoError> {
    LocalCohomology::new(ideal).pattern_report(i)
}

pub fn piece_nonzero(ideal: &MonomialIdeal, i: usize, n: i64) -> bool {
    LocalCohomology::new(ideal).piece_nonzero(i, n)
}

pub fn piece_dimension(ideal: &MonomialIdeal, i: usize, n: i64) -> Result<DimValue, MonoError> {
    LocalCohomology::new(ideal).piece_dimension(i, n)
}

pub fn strand_dimension(ideal: &MonomialIdeal, i: usize, y_degree: &[i64], n: i64) -> Result<DimValue, MonoError> {
    LocalCohomology::new(ideal).strand_dimension(i, y_degree, n)
}

pub fn hilbert_pair(ideal: &MonomialIdeal, i: usize) -> Result<(IntegerPolynomial, IntegerPolynomial), MonoError> {
    LocalCohomology::new(ideal).hilbert_pair(i)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lc(d: usize, m: usize, gens: &[&str]) -> LocalCohomology {
        LocalCohomology::new(&MonomialIdeal::parse_standard(d, m, gens).unwrap())
    }

    fn irrelevant(d: usize, m: usize) -> LocalCohomology {
        let gens: Vec<String> = (1..=m).map(|j| format!("X{j}")).collect();
        let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
        lc(d, m, &refs)
    }

    #[test]
    fn irrelevant_ideal_has_negative_tail() {
        for m in 1..=4 {
            let h = irrelevant(0, m);
            assert_eq!(h.shape(m).unwrap(), PatternShape::NegTailOnly);
            for i in 0..m {
                assert_eq!(h.shape(i).unwrap(), PatternShape::Empty);
            }
        }
    }

    #[test]
    fn principal_x_ideal_is_all_of_z() {
        let h = lc(0, 2, &["X1"]);
        assert_eq!(h.shape(1).unwrap(), PatternShape::AllZ);
        assert_eq!(h.piece_dimension(1, 5).unwrap(), DimValue::Infinite);
    }

    #[test]
    fn example_ideal_shapes() {
        let h = lc(2, 1, &["Y1*Y2", "Y1*X1"]);
        assert_eq!(h.shape(1).unwrap(), PatternShape::NonnegOnly);
        assert_eq!(h.shape(2).unwrap(), PatternShape::NegTailOnly);
        assert!(h.piece_nonzero(1, 0));
        assert!(!h.piece_nonzero(1, -1));
    }

    #[test]
    fn piece_nonzero_examples() {
        let h = irrelevant(0, 2);
        assert!(h.piece_nonzero(2, -2));
        assert!(!h.piece_nonzero(2, -1));
        for n in -5..5 {
            assert!(!h.piece_nonzero(0, n));
        }
    }

    #[test]
    fn piece_dimension_examples() {
        let h = irrelevant(0, 2);
        assert_eq!(h.piece_dimension(2, -2).unwrap(), DimValue::finite(1));
        assert_eq!(h.piece_dimension(2, -3).unwrap(), DimValue::finite(2));
        assert_eq!(h.piece_dimension(2, 0).unwrap(), DimValue::zero());
        assert!(matches!(
            irrelevant(1, 2).piece_dimension(2, -2),
            Err(MonoError::NeedsStrand { d: 1 })
        ));
    }

    #[test]
    fn strand_dimension_examples() {
        let p = lc(1, 1, &["Y1"]);
        assert_eq!(p.strand_dimension(1, &[-1], 3).unwrap(), DimValue::finite(1));
        for n in -3..4 {
            assert_eq!(p.strand_dimension(1, &[0], n).unwrap(), DimValue::zero());
        }
        let h = lc(2, 1, &["Y1*Y2", "Y1*X1"]);
        assert_eq!(h.strand_dimension(1, &[-1, 0], 0).unwrap(), DimValue::finite(1));
        assert!(h.strand_dimension(1, &[0], 0).is_err());
    }

    #[test]
    fn hilbert_pair_examples() {
        let (f, g) = irrelevant(0, 2).hilbert_pair(2).unwrap();
        assert_eq!(f.to_string(), "-n - 1");
        assert_eq!(f.degree(), Some(1));
        assert!(g.is_zero());

        let (f, g) = irrelevant(0, 1).hilbert_pair(1).unwrap();
        assert_eq!(f.to_string(), "1");
        assert!(g.is_zero());

        let (f, g) = irrelevant(0, 2).hilbert_pair(1).unwrap();
        assert!(f.is_zero() && g.is_zero());

        assert!(matches!(
            lc(0, 2, &["X1"]).hilbert_pair(1),
            Err(MonoError::InfiniteDims { index: 1 })
        ));
    }

    #[test]
    fn finite_generation_over_coefficients() {
        // free components
        assert!(irrelevant(2, 2).piece_finitely_generated(2, -3));
        // I ∩ A ≠ 0
        assert!(!lc(1, 1, &["Y1"]).piece_finitely_generated(1, 0));
        // zero pieces are trivially finitely generated
        assert!(lc(1, 1, &["Y1"]).piece_finitely_generated(1, -4));
    }
}
