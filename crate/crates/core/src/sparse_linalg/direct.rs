use faer::prelude::*;
use faer::sparse::{SparseColMat, Triplet};

use super::csr::CsrMatrix;
use crate::error::{Error, Result};

/// Sparse LU with partial pivoting (faer).
pub(crate) fn lu_solve(a: &CsrMatrix, b: &[f64]) -> Result<Vec<f64>> {
    let triplets: Vec<Triplet<usize, usize, f64>> = a
        .triplets()
        .map(|(r, c, v)| Triplet::new(r, c, v))
        .collect();
    let mat = SparseColMat::<usize, f64>::try_new_from_triplets(a.nrows(), a.ncols(), &triplets)
        .map_err(|e| Error::SolveFailed {
            reason: format!("could not build sparse matrix: {e:?}"),
            residual: f64::NAN,
            iterations: 0,
            history: vec![],
        })?;
    let lu = mat.sp_lu().map_err(|e| Error::SolveFailed {
        reason: format!("singular factorization: {e:?}"),
        residual: f64::NAN,
        iterations: 0,
        history: vec![],
    })?;
    let rhs = Col::<f64>::from_fn(b.len(), |i| b[i]);
    let x = lu.solve(&rhs);
    let out: Vec<f64> = (0..b.len()).map(|i| x[i]).collect();
    if out.iter().any(|v| !v.is_finite()) {
        return Err(Error::SolveFailed {
            reason: "singular factorization (non-finite solution)".into(),
            residual: f64::NAN,
            iterations: 0,
            history: vec![],
        });
    }
    Ok(out)
}
