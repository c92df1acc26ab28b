use super::solution::{quadrature_sweep, Diagnostics, FpkSolution};
use crate::coefficients::{CoefficientField, Setting};
use crate::error::{Error, Result};
use crate::grid_fem::{assemble, build_space, ConstraintKind, Mesh, RhsKind};
use crate::sparse_linalg::{solve_linear, SolveConfig};

/// Periodic invariant measure: solve for `rho_h` in the zero-mean periodic
/// space, then `C_h = 1 / (gamma, 1 - div rho_h)` with the assembly rule.
pub fn solve_periodic_fpk(
    coeffs: &CoefficientField,
    cells: usize,
    quad_order: usize,
    config: &SolveConfig,
) -> Result<FpkSolution> {
    let mesh = Mesh::new(coeffs.dim(), cells)?;
    let space = build_space(mesh, ConstraintKind::PeriodicZeroMean);
    let system = assemble(&space, coeffs, RhsKind::PeriodicUnit, quad_order)?;
    let (x, stats) = solve_linear(&system, config)?;
    let rho = x[..system.n_free].to_vec();
    let multipliers = x[system.n_free..].to_vec();

    let (mass, _, _) = quadrature_sweep(&space, coeffs, &rho, quad_order, |d| 1.0 - d)?;
    if !(mass > 0.0) {
        return Err(Error::NonPositiveNormalization(mass));
    }
    let c = 1.0 / mass;
    let (integral, lo, hi) = quadrature_sweep(&space, coeffs, &rho, quad_order, |d| c * (1.0 - d))?;
    Ok(FpkSolution {
        setting: Setting::Periodic,
        space,
        coeffs: coeffs.clone(),
        rho,
        normalization: c,
        quad_order,
        diagnostics: Diagnostics {
            cordes: system.cordes,
            solve: stats,
            min_density: lo,
            max_density: hi,
            integral,
            multipliers,
        },
    })
}
