use super::solution::FpkSolution;
use crate::coefficients::{CoefficientField, Setting};
use crate::error::{Error, Result};
use crate::quadrature::TensorRule;
use crate::tensor::{Matrix, ZERO_MATRIX};

/// `A_bar = int A u_h` by the solution's assembly quadrature, symmetrized.
pub fn effective_matrix(coeffs: &CoefficientField, solution: &FpkSolution) -> Result<Matrix> {
    if solution.setting != Setting::Periodic {
        return Err(Error::NotPeriodic);
    }
    let dim = solution.dim();
    if coeffs.dim() != dim {
        return Err(Error::DimensionMismatch(format!(
            "coefficients are {}-dimensional, solution is {dim}-dimensional",
            coeffs.dim()
        )));
    }
    let mesh = solution.space.mesh();
    let rule = TensorRule::new(dim, solution.quad_order);
    let vol = mesh.h().powi(dim as i32);
    let mut m = ZERO_MATRIX;
    for cell in 0..mesh.cell_count() {
        for (p, w) in rule.points.iter().zip(&rule.weights) {
            let x = mesh.to_physical(cell, p);
            let a = coeffs.diffusion(&x)?;
            let u = solution.density_in_cell(cell, p)?;
            for i in 0..dim {
                for j in 0..dim {
                    m[i][j] += w * vol * a[i][j] * u;
                }
            }
        }
    }
    for i in 0..dim {
        for j in 0..i {
            let s = 0.5 * (m[i][j] + m[j][i]);
            m[i][j] = s;
            m[j][i] = s;
        }
    }
    Ok(m)
}
