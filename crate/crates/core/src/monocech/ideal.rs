use std::fmt;

use super::context::{SignPattern, VariableContext};
use super::MonoError;

/// A proper nonzero monomial ideal, given by exponent vectors of its generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ctx: VariableContext,
    generators: Vec<Vec<u32>>,
}

/// Result of inverting variables: either a proper ideal again or the unit ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Localized {
    Ideal(MonomialIdeal),
    Unit,
}

impl MonomialIdeal {
    /// Rejects the zero ideal (no generators) and the unit ideal (a constant generator).
    pub fn new(ctx: VariableContext, generators: Vec<Vec<u32>>) -> Result<Self, MonoError> {
        if generators.is_empty() {
            return Err(MonoError::ZeroIdeal);
        }
        for (j, g) in generators.iter().enumerate() {
            if g.len() != ctx.nvars() {
                return Err(MonoError::ExponentLength {
                    generator: j,
                    expected: ctx.nvars(),
                    found: g.len(),
                });
            }
            if g.iter().all(|&e| e == 0) {
                return Err(MonoError::UnitIdeal);
            }
        }
        Ok(MonomialIdeal { ctx, generators })
    }

    /// Squarefree generators with the given supports (bitmasks over variables).
    pub fn from_supports(ctx: VariableContext, supports: &[u32]) -> Result<Self, MonoError> {
        let n = ctx.nvars();
        let gens = supports.iter().map(|&s| (0..n).map(|v| s >> v & 1).collect()).collect();
        Self::new(ctx, gens)
    }

    /// Parses generators written as `name` or `name^e` joined by `*`, using
    /// the standard `Y1..Yd`, `X1..Xm` names. Meant for tests and examples;
    /// the spec-file parser reports positions.
    pub fn parse_standard(d: usize, m: usize, gens: &[&str]) -> Result<Self, MonoError> {
        let ctx = VariableContext::standard(d, m)?;
        let mut out = Vec::new();
        for g in gens {
            let mut e = vec![0u32; ctx.nvars()];
            for term in g.split('*') {
                let term = term.trim();
                let (name, pow) = match term.split_once('^') {
                    Some((n, p)) => (
                        n.trim(),
                        p.trim().parse().map_err(|_| MonoError::UnknownVariable(term.into()))?,
                    ),
                    None => (term, 1),
                };
                let v = ctx
                    .index_of(name)
                    .ok_or_else(|| MonoError::UnknownVariable(name.into()))?;
                e[v] += pow;
            }
            out.push(e);
        }
        Self::new(ctx, out)
    }

    pub fn context(&self) -> &VariableContext {
        &self.ctx
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    /// `supp(g_j)` for each generator, in generator order.
    pub fn supports(&self) -> Vec<u32> {
        self.generators
            .iter()
            .map(|g| {
                g.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .fold(0, |acc, (v, _)| acc | 1 << v)
            })
            .collect()
    }

    pub fn union_support(&self) -> u32 {
        self.supports().into_iter().fold(0, |a, b| a | b)
    }

    /// Squarefree, deduplicated, containment-pruned generators sorted by mask.
    ///
    /// Local cohomology only sees the radical, and the radical of a monomial
    /// ideal is generated by the supports of its generators.
    pub fn normalize(&self) -> MonomialIdeal {
        let mut sups = self.supports();
        sups.sort_unstable();
        sups.dedup();
        let minimal: Vec<u32> = sups
            .iter()
            .copied()
            .filter(|&s| !sups.iter().any(|&t| t != s && t & !s == 0))
            .collect();
        MonomialIdeal::from_supports(self.ctx.clone(), &minimal).expect("supports of a proper ideal are nonempty")
    }

    pub fn is_normalized(&self) -> bool {
        *self == self.normalize()
    }

    /// Inverts the variables in `invert` (all of which must be `Y`s):
    /// they are deleted from every support.
    pub fn localize(&self, invert: u32) -> Result<Localized, MonoError> {
        if invert & !self.ctx.y_mask() != 0 {
            return Err(MonoError::LocalizeNonY);
        }
        let sups: Vec<u32> = self.supports().into_iter().map(|s| s & !invert).collect();
        if sups.contains(&0) {
            return Ok(Localized::Unit);
        }
        Ok(Localized::Ideal(
            MonomialIdeal::from_supports(self.ctx.clone(), &sups)?.normalize(),
        ))
    }

    /// True when some generator lives in `A = K[Y]`, i.e. `I ∩ A ≠ 0`.
    pub fn meets_coefficient_ring(&self) -> bool {
        let y = self.ctx.y_mask();
        self.supports().into_iter().any(|s| s & !y == 0)
    }

    /// The ideal of `A` generated by the `Y`-parts of the generators, if
    /// every generator has one.
    pub fn y_part_ideal(&self) -> Option<Vec<SignPattern>> {
        let y = self.ctx.y_mask();
        self.supports()
            .into_iter()
            .map(|s| (s & y != 0).then_some(SignPattern(s & y)))
            .collect()
    }

    pub fn monomial_string(&self, g: &[u32]) -> String {
        let parts: Vec<String> = g
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| {
                if e == 1 {
                    self.ctx.name(v).to_string()
                } else {
                    format!("{}^{e}", self.ctx.name(v))
                }
            })
            .collect();
        parts.join("*")
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.generators.iter().map(|g| self.monomial_string(g)).collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator_strings().join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sups(i: &MonomialIdeal) -> Vec<String> {
        i.supports()
            .into_iter()
            .map(|s| SignPattern(s).display(i.context()))
            .collect()
    }

    #[test]
    fn radical_of_power() {
        let i = MonomialIdeal::parse_standard(1, 1, &["Y1^2*X1^3"]).unwrap();
        assert_eq!(sups(&i.normalize()), vec!["{Y1,X1}"]);
    }

    #[test]
    fn containment_pruning() {
        let i = MonomialIdeal::parse_standard(0, 2, &["X1*X2", "X1^2*X2"]).unwrap();
        assert_eq!(sups(&i.normalize()), vec!["{X1,X2}"]);
    }

    #[test]
    fn no_pruning_for_incomparable_supports() {
        let i = MonomialIdeal::parse_standard(2, 1, &["Y1*Y2", "Y1*X1"]).unwrap();
        let n = i.normalize();
        assert_eq!(n.generator_count(), 2);
        assert_eq!(sups(&n), vec!["{Y1,Y2}", "{Y1,X1}"]);
    }

    #[test]
    fn zero_and_unit_rejected() {
        let ctx = VariableContext::standard(0, 1).unwrap();
        assert_eq!(MonomialIdeal::new(ctx.clone(), vec![]), Err(MonoError::ZeroIdeal));
        assert_eq!(MonomialIdeal::new(ctx, vec![vec![0]]), Err(MonoError::UnitIdeal));
    }

    #[test]
    fn localization_examples() {
        let i = MonomialIdeal::parse_standard(2, 1, &["Y1*Y2", "Y1*X1"]).unwrap();
        match i.localize(0b10).unwrap() {
            Localized::Ideal(j) => assert_eq!(sups(&j), vec!["{Y1}"]),
            Localized::Unit => panic!("expected a proper ideal"),
        }
        let p = MonomialIdeal::parse_standard(1, 1, &["Y1"]).unwrap();
        assert_eq!(p.localize(0b1).unwrap(), Localized::Unit);
        let r = MonomialIdeal::parse_standard(0, 2, &["X1", "X2"]).unwrap();
        assert_eq!(r.localize(0).unwrap(), Localized::Ideal(r.clone()));
        assert_eq!(r.localize(0b1), Err(MonoError::LocalizeNonY));
    }

    #[test]
    fn y_part_ideal_requires_every_generator() {
        let i = MonomialIdeal::parse_standard(2, 1, &["Y1*Y2", "Y1*X1"]).unwrap();
        assert_eq!(i.y_part_ideal().unwrap().len(), 2);
        let j = MonomialIdeal::parse_standard(1, 1, &["Y1", "X1"]).unwrap();
        assert!(j.y_part_ideal().is_none());
        assert!(j.meets_coefficient_ring());
    }
}
