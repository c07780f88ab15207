use num_rational::BigRational;

use super::{ExactMatrix, LinalgError, RatMatrix};

/// A bounded cochain complex `0 -> C^0 -> C^1 -> ... -> C^s -> 0` of
/// finite-dimensional spaces with integer differentials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteComplex {
    levels: Vec<usize>,
    maps: Vec<ExactMatrix>,
}

impl FiniteComplex {
    /// Validates shapes and `d^{p+1} d^p = 0`.
    pub fn new(levels: Vec<usize>, maps: Vec<ExactMatrix>) -> Result<Self, LinalgError> {
        if levels.is_empty() {
            return Err(LinalgError::EmptyComplex);
        }
        if maps.len() + 1 != levels.len() {
            return Err(LinalgError::MapCount {
                levels: levels.len(),
                maps: maps.len(),
            });
        }
        for (p, d) in maps.iter().enumerate() {
            if d.cols() != levels[p] || d.rows() != levels[p + 1] {
                return Err(LinalgError::Shape {
                    level: p,
                    expected: (levels[p + 1], levels[p]),
                    found: (d.rows(), d.cols()),
                });
            }
        }
        for p in 1..maps.len() {
            let dd = maps[p].mul(&maps[p - 1]).expect("shapes checked above");
            if !dd.is_zero() {
                return Err(LinalgError::NotAComplex { level: p - 1 });
            }
        }
        Ok(FiniteComplex { levels, maps })
    }

    /// The complex with a single nonzero level `dim` placed at position `at`.
    pub fn concentrated(len: usize, at: usize, dim: usize) -> Self {
        let mut levels = vec![0; len];
        levels[at] = dim;
        let maps = (0..len.saturating_sub(1))
            .map(|p| ExactMatrix::zeros(levels[p + 1], levels[p]))
            .collect();
        FiniteComplex { levels, maps }
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.iter().all(|&c| c == 0)
    }

    /// `d^p : C^p -> C^{p+1}`; zero map out of the top level.
    pub fn differential(&self, p: usize) -> ExactMatrix {
        match self.maps.get(p) {
            Some(d) => d.clone(),
            None => ExactMatrix::zeros(0, self.levels.get(p).copied().unwrap_or(0)),
        }
    }

    /// `d^{p-1} : C^{p-1} -> C^p`; zero map into level 0.
    pub fn incoming(&self, p: usize) -> ExactMatrix {
        if p == 0 || p > self.maps.len() {
            ExactMatrix::zeros(self.levels.get(p).copied().unwrap_or(0), 0)
        } else {
            self.maps[p - 1].clone()
        }
    }

    pub fn cohomology_dims(&self) -> Vec<usize> {
        cohomology_dims(self)
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.levels)
    }
}

/// `h^p = c^p - rank d^p - rank d^{p-1}` for every level.
pub fn cohomology_dims(c: &FiniteComplex) -> Vec<usize> {
    let ranks: Vec<usize> = c.maps.iter().map(ExactMatrix::rank).collect();
    (0..c.levels.len())
        .map(|p| {
            let out = ranks.get(p).copied().unwrap_or(0);
            let inc = if p == 0 { 0 } else { ranks[p - 1] };
            c.levels[p] - out - inc
        })
        .collect()
}

pub fn alternating_sum(xs: &[usize]) -> i64 {
    xs.iter()
        .enumerate()
        .map(|(p, &x)| if p % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum()
}

/// Chosen cocycle representatives for `H^p(C)` together with the data needed
/// to read off coordinates of any cocycle.
#[derive(Clone, Debug)]
pub struct CohomologyBasis {
    level_dim: usize,
    reps: RatMatrix,
    boundaries: RatMatrix,
}

impl CohomologyBasis {
    pub fn new(c: &FiniteComplex, p: usize) -> Self {
        let level_dim = c.levels().get(p).copied().unwrap_or(0);
        let cocycles = RatMatrix::from(&c.differential(p)).kernel();
        let boundaries = RatMatrix::from(&c.incoming(p));
        let mut span = boundaries.clone();
        let mut base_rank = span.rank();
        let mut chosen = Vec::new();
        for z in cocycles.columns() {
            let grown = span.hstack(&RatMatrix::from_columns(level_dim, std::slice::from_ref(&z)));
            let r = grown.rank();
            if r > base_rank {
                span = grown;
                base_rank = r;
                chosen.push(z);
            }
        }
        CohomologyBasis {
            level_dim,
            reps: RatMatrix::from_columns(level_dim, &chosen),
            boundaries,
        }
    }

    pub fn dim(&self) -> usize {
        self.reps.cols()
    }

    pub fn level_dim(&self) -> usize {
        self.level_dim
    }

    /// Representative cochains, one per column.
    pub fn representatives(&self) -> &RatMatrix {
        &self.reps
    }

    /// Coordinates of the class of `cocycle`; `None` if it is not in the span
    /// of cocycles (i.e. the input was not a cocycle).
    pub fn coordinates(&self, cocycle: &[BigRational]) -> Option<Vec<BigRational>> {
        let system = self.reps.hstack(&self.boundaries);
        let x = system.solve(cocycle)?;
        Some(x[..self.reps.cols()].to_vec())
    }

    /// Matrix of the map `H^p(C) -> H^p(D)` induced by a chain map whose
    /// degree-`p` component is `f : C^p -> D^p`.
    pub fn induced_map(&self, target: &CohomologyBasis, f: &RatMatrix) -> RatMatrix {
        assert_eq!(f.cols(), self.level_dim);
        assert_eq!(f.rows(), target.level_dim);
        let cols: Vec<Vec<BigRational>> = self
            .reps
            .columns()
            .iter()
            .map(|z| {
                target
                    .coordinates(&f.apply(z))
                    .expect("chain maps send cocycles to cocycles")
            })
            .collect();
        RatMatrix::from_columns(target.dim(), &cols)
    }
}

/// Rank of the map on `H^p` induced by chain maps `f_j : C -> D_j` into a
/// direct sum of targets, computed without choosing cohomology bases:
/// `rank = rank [f Z(C) | B(D)] - rank B(D)`.
pub fn induced_map_rank(source: &FiniteComplex, p: usize, targets: &[(&FiniteComplex, RatMatrix)]) -> usize {
    let cocycles = RatMatrix::from(&source.differential(p)).kernel();
    let total_rows: usize = targets
        .iter()
        .map(|(d, _)| d.levels().get(p).copied().unwrap_or(0))
        .sum();
    let mut images = RatMatrix::zeros(0, cocycles.cols());
    let mut bounds_cols = 0;
    for (d, f) in targets {
        images = images.vstack(&f.mul(&cocycles));
        bounds_cols += d.incoming(p).cols();
    }
    let mut bounds = RatMatrix::zeros(total_rows, bounds_cols);
    let (mut r0, mut c0) = (0, 0);
    for (d, _) in targets {
        let b = RatMatrix::from(&d.incoming(p));
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                bounds[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
        r0 += b.rows();
        c0 += b.cols();
    }
    images.hstack(&bounds).rank() - bounds.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_complex_is_acyclic() {
        let c = FiniteComplex::new(vec![1, 1], vec![ExactMatrix::identity(1)]).unwrap();
        assert_eq!(c.cohomology_dims(), vec![0, 0]);
    }

    #[test]
    fn lone_top_level() {
        let c = FiniteComplex::new(vec![0, 1], vec![ExactMatrix::zeros(1, 0)]).unwrap();
        assert_eq!(c.cohomology_dims(), vec![0, 1]);
    }

    #[test]
    fn rejects_non_complex() {
        let d0 = ExactMatrix::from_rows(&[vec![1]]);
        let d1 = ExactMatrix::from_rows(&[vec![1]]);
        assert_eq!(
            FiniteComplex::new(vec![1, 1, 1], vec![d0, d1]),
            Err(LinalgError::NotAComplex { level: 0 })
        );
    }

    #[test]
    fn rejects_bad_shapes() {
        let d0 = ExactMatrix::zeros(2, 1);
        assert!(matches!(
            FiniteComplex::new(vec![1, 1], vec![d0]),
            Err(LinalgError::Shape { level: 0, .. })
        ));
        assert!(matches!(
            FiniteComplex::new(vec![1, 1], vec![]),
            Err(LinalgError::MapCount { .. })
        ));
    }

    #[test]
    fn cohomology_basis_and_induced_rank_agree() {
        // C: 0 -> K^2 -(1,1)-> K -> 0 ; H^0 = 1 dim, H^1 = 0.
        let c = FiniteComplex::new(vec![2, 1], vec![ExactMatrix::from_rows(&[vec![1, 1]])]).unwrap();
        let basis = CohomologyBasis::new(&c, 0);
        assert_eq!(basis.dim(), 1);
        // identity chain map to itself induces identity on H^0
        let id = RatMatrix::identity(2);
        let m = basis.induced_map(&basis, &id);
        assert_eq!(m, RatMatrix::identity(1));
        assert_eq!(induced_map_rank(&c, 0, &[(&c, id)]), 1);
    }
}
