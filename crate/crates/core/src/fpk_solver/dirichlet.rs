use std::sync::Arc;

use super::potential::potential_from_source;
use super::solution::{quadrature_sweep, Diagnostics, FpkSolution};
use crate::coefficients::{CoefficientField, Setting, Source};
use crate::error::{Error, Result};
use crate::grid_fem::{assemble, build_space, ConstraintKind, Mesh, RhsKind};
use crate::sparse_linalg::{solve_linear, SolveConfig};

/// Dirichlet problem `L* u = f`, `u = 0` on the boundary, with `f = -div F`.
///
/// A scalar source is first converted to a potential on a grid of `2 N`
/// cells; see [`solve_dirichlet_with_fine_grid`] to choose that grid.
pub fn solve_dirichlet(
    coeffs: &CoefficientField,
    cells: usize,
    quad_order: usize,
    config: &SolveConfig,
) -> Result<FpkSolution> {
    solve_dirichlet_with_fine_grid(coeffs, cells, quad_order, config, 2 * cells)
}

pub fn solve_dirichlet_with_fine_grid(
    coeffs: &CoefficientField,
    cells: usize,
    quad_order: usize,
    config: &SolveConfig,
    n_fine: usize,
) -> Result<FpkSolution> {
    let coeffs = match coeffs.source() {
        Some(Source::Potential(_)) => coeffs.clone(),
        Some(Source::Scalar(f)) => {
            let pot = potential_from_source(coeffs.dim(), f.clone(), n_fine)?;
            let field: Arc<dyn Fn(&crate::tensor::Vector) -> crate::tensor::Vector + Send + Sync> =
                Arc::new(move |x| pot.field(x));
            coeffs.clone().with_source(Source::Potential(field))
        }
        None => return Err(Error::MissingSource),
    };
    let mesh = Mesh::new(coeffs.dim(), cells)?;
    let space = build_space(mesh, ConstraintKind::TangentialTrace);
    let system = assemble(&space, &coeffs, RhsKind::DirichletPotential, quad_order)?;
    let (rho, stats) = solve_linear(&system, config)?;
    let (integral, lo, hi) = quadrature_sweep(&space, &coeffs, &rho, quad_order, |d| -d)?;
    Ok(FpkSolution {
        setting: Setting::Dirichlet,
        space,
        coeffs,
        rho,
        normalization: 1.0,
        quad_order,
        diagnostics: Diagnostics {
            cordes: system.cordes,
            solve: stats,
            min_density: lo,
            max_density: hi,
            integral,
            multipliers: Vec::new(),
        },
    })
}
