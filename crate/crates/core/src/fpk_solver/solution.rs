use crate::coefficients::{eval_gamma, CoefficientField, CordesReport, Setting};
use crate::error::Result;
use crate::grid_fem::{eval_local, shape_eval, FeSpace};
use crate::quadrature::TensorRule;
use crate::sparse_linalg::SolveStats;
use crate::tensor::Vector;

#[derive(Debug, Clone)]
pub struct Diagnostics {
    pub cordes: CordesReport,
    pub solve: SolveStats,
    /// Extremes of `u_h` over the assembly quadrature points. The minimum
    /// may be negative on coarse meshes.
    pub min_density: f64,
    pub max_density: f64,
    /// `int u_h` by the assembly quadrature.
    pub integral: f64,
    /// Zero-mean multipliers (periodic only).
    pub multipliers: Vec<f64>,
}

/// Discrete `rho_h` together with the reconstructed density
/// `u_h = C_h gamma (1 - div rho_h)` (periodic) or `gamma (-div rho_h)`
/// (Dirichlet).
#[derive(Debug, Clone)]
pub struct FpkSolution {
    pub setting: Setting,
    pub space: FeSpace,
    pub coeffs: CoefficientField,
    pub rho: Vec<f64>,
    /// `C_h`; 1 for Dirichlet solutions.
    pub normalization: f64,
    pub quad_order: usize,
    pub diagnostics: Diagnostics,
}

impl FpkSolution {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn cells(&self) -> usize {
        self.space.mesh().cells_per_dim()
    }

    /// `div rho_h` at local coordinates of one cell.
    pub fn divergence_in_cell(&self, cell: usize, local: &Vector) -> f64 {
        let mesh = self.space.mesh();
        let s = shape_eval(mesh.dim(), mesh.h(), local);
        let (_, g) = eval_local(&self.space, &self.rho, cell, &s);
        (0..mesh.dim()).map(|d| g[d][d]).sum()
    }

    /// `rho_h(x)`.
    pub fn rho_at(&self, x: &Vector) -> Vector {
        let mesh = self.space.mesh();
        let (cell, local) = mesh.locate(x);
        let s = shape_eval(mesh.dim(), mesh.h(), &local);
        eval_local(&self.space, &self.rho, cell, &s).0
    }

    pub(crate) fn density_in_cell(&self, cell: usize, local: &Vector) -> Result<f64> {
        let x = self.space.mesh().to_physical(cell, local);
        let gamma = eval_gamma(&self.coeffs, &x)?;
        let div = self.divergence_in_cell(cell, local);
        Ok(match self.setting {
            Setting::Periodic => self.normalization * gamma * (1.0 - div),
            Setting::Dirichlet => -gamma * div,
        })
    }

    /// `u_h(x)`. Points on interior cell faces use the cell on the upper side.
    pub fn density(&self, x: &Vector) -> Result<f64> {
        let (cell, local) = self.space.mesh().locate(x);
        self.density_in_cell(cell, &local)
    }

    /// `u_h` at mesh nodes, lexicographic with `x1` varying slowest.
    pub fn node_samples(&self) -> Result<Vec<(Vector, f64)>> {
        let dim = self.dim();
        let n = self.cells();
        let m = n + 1;
        let total = m.pow(dim as u32);
        let h = 1.0 / n as f64;
        let mut out = Vec::with_capacity(total);
        for idx in 0..total {
            let mut x = [0.0; 3];
            let mut r = idx;
            for d in (0..dim).rev() {
                x[d] = (r % m) as f64 * h;
                r /= m;
            }
            out.push((x, self.density(&x)?));
        }
        Ok(out)
    }
}

/// `(sum w gamma g, min, max)` of `gamma * g(div)` over the quadrature points,
/// with `g` applied to the elementwise divergence.
pub(crate) fn quadrature_sweep(
    space: &FeSpace,
    coeffs: &CoefficientField,
    rho: &[f64],
    order: usize,
    g: impl Fn(f64) -> f64,
) -> Result<(f64, f64, f64)> {
    let mesh = space.mesh();
    let dim = mesh.dim();
    let rule = TensorRule::new(dim, order);
    let vol = mesh.h().powi(dim as i32);
    let shapes: Vec<_> = rule.points.iter().map(|p| shape_eval(dim, mesh.h(), p)).collect();
    let mut sum = 0.0;
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for cell in 0..mesh.cell_count() {
        for ((p, w), s) in rule.points.iter().zip(&rule.weights).zip(&shapes) {
            let x = mesh.to_physical(cell, p);
            let (_, grad) = eval_local(space, rho, cell, s);
            let div: f64 = (0..dim).map(|d| grad[d][d]).sum();
            let v = eval_gamma(coeffs, &x)? * g(div);
            sum += w * vol * v;
            lo = lo.min(v);
            hi = hi.max(v);
        }
    }
    Ok((sum, lo, hi))
}
