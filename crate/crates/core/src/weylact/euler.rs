use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::module::PatternModule;
use super::WeylError;
use crate::exactlin::RatMatrix;

fn check_len(module: &dyn PatternModule, alpha: &[i64]) -> Result<(), WeylError> {
    let expected = module.context().nvars();
    if alpha.len() != expected {
        return Err(WeylError::DegreeLength {
            expected,
            found: alpha.len(),
        });
    }
    Ok(())
}

/// Matrix of `E = Σ X_v ∂_v` on `piece(α)`, composed from the derivation
/// `piece(α) -> piece(α - e_v)` and the multiplication back up.
pub fn euler_matrix(module: &dyn PatternModule, alpha: &[i64]) -> Result<RatMatrix, WeylError> {
    check_len(module, alpha)?;
    let dim = module.piece_dim(alpha);
    let mut e = RatMatrix::zeros(dim, dim);
    for v in module.context().x_vars() {
        let mut lowered = alpha.to_vec();
        lowered[v] -= 1;
        let term = module.transition(&lowered, v).mul(&module.derivation(alpha, v));
        e = e.add(&term);
    }
    Ok(e)
}

/// Eigenvalue of `E` on `piece(α)`; errors unless `E` is a scalar there.
pub fn euler_eigencheck(module: &dyn PatternModule, alpha: &[i64]) -> Result<i64, WeylError> {
    let e = euler_matrix(module, alpha)?;
    if e.rows() == 0 {
        return Err(WeylError::ZeroPiece(alpha.to_vec()));
    }
    e.as_scalar()
        .filter(|s| s.is_integer())
        .and_then(|s| s.to_integer().to_i64())
        .ok_or_else(|| WeylError::NotEulerian(alpha.to_vec()))
}

/// Least `a` with `(E - |α|)^a = 0` on `piece(α)`.
pub fn gen_eulerian_exponent(module: &dyn PatternModule, alpha: &[i64]) -> Result<usize, WeylError> {
    let e = euler_matrix(module, alpha)?;
    let dim = e.rows();
    if dim == 0 {
        return Err(WeylError::ZeroPiece(alpha.to_vec()));
    }
    let degree = BigRational::from_integer(BigInt::from(module.context().coarse_degree(alpha)));
    let shifted = e.add(&RatMatrix::scalar(dim, -degree));
    let mut power = shifted.clone();
    for a in 1..=dim {
        if power.is_zero() {
            return Ok(a);
        }
        power = power.mul(&shifted);
    }
    Err(WeylError::NotEulerian(alpha.to_vec()))
}
