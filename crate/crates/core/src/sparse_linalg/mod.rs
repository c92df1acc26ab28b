//! Sparse storage and linear solvers for the nonsymmetric Galerkin systems.

mod csr;
mod direct;
mod gmres;

pub use csr::CsrMatrix;

use crate::error::{Error, Result};
use crate::grid_fem::SparseSystem;

/// Systems below this size may fall back to sparse LU.
pub const DIRECT_FALLBACK_LIMIT: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    IterativeKrylov,
    DirectFactorization,
}

impl SolveMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolveMethod::IterativeKrylov => "gmres",
            SolveMethod::DirectFactorization => "direct",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveConfig {
    pub method: SolveMethod,
    /// Relative residual tolerance `||Ax - b|| <= tol ||b||`.
    pub tolerance: f64,
    /// `None` means `10 * dimension`.
    pub max_iterations: Option<usize>,
    /// Krylov subspace size between restarts.
    pub restart: usize,
    /// Retry with sparse LU when the Krylov method fails on a small system.
    pub direct_fallback: bool,
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self {
            method: SolveMethod::IterativeKrylov,
            tolerance: 1e-10,
            max_iterations: None,
            restart: 200,
            direct_fallback: true,
        }
    }
}

impl SolveConfig {
    pub fn direct() -> Self {
        Self {
            method: SolveMethod::DirectFactorization,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0 && self.tolerance < 1.0) {
            return Err(Error::InvalidSolveConfig(format!(
                "tolerance {} not in (0, 1)",
                self.tolerance
            )));
        }
        if self.max_iterations == Some(0) {
            return Err(Error::InvalidSolveConfig("max iterations must be >= 1".into()));
        }
        if self.restart == 0 {
            return Err(Error::InvalidSolveConfig("restart length must be >= 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveStats {
    pub method: SolveMethod,
    pub iterations: usize,
    pub relative_residual: f64,
    pub residual_history: Vec<f64>,
    /// The Krylov method failed and sparse LU produced the answer.
    pub fell_back: bool,
}

fn relative_residual(a: &CsrMatrix, x: &[f64], b: &[f64]) -> f64 {
    let ax = a.mul_vec(x);
    let r: Vec<f64> = b.iter().zip(&ax).map(|(b, a)| b - a).collect();
    let bn = csr::norm(b);
    if bn == 0.0 {
        csr::norm(&r)
    } else {
        csr::norm(&r) / bn
    }
}

/// Solves an assembled Galerkin system (including multiplier rows).
pub fn solve_linear(system: &SparseSystem, config: &SolveConfig) -> Result<(Vec<f64>, SolveStats)> {
    solve_csr(&system.matrix, &system.rhs, config)
}

pub fn solve_csr(a: &CsrMatrix, b: &[f64], config: &SolveConfig) -> Result<(Vec<f64>, SolveStats)> {
    config.validate()?;
    if a.nrows() != a.ncols() || a.nrows() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "matrix {}x{}, rhs {}",
            a.nrows(),
            a.ncols(),
            b.len()
        )));
    }
    let n = b.len();
    let direct = |fell_back: bool, history: Vec<f64>, iterations: usize| -> Result<(Vec<f64>, SolveStats)> {
        let x = direct::lu_solve(a, b)?;
        let rel = relative_residual(a, &x, b);
        Ok((
            x,
            SolveStats {
                method: SolveMethod::DirectFactorization,
                iterations,
                relative_residual: rel,
                residual_history: history,
                fell_back,
            },
        ))
    };
    match config.method {
        SolveMethod::DirectFactorization => direct(false, vec![], 0),
        SolveMethod::IterativeKrylov => {
            let max_iter = config.max_iterations.unwrap_or(10 * n.max(1));
            let out = gmres::gmres(a, b, config.tolerance, max_iter, config.restart);
            if out.converged {
                return Ok((
                    out.x,
                    SolveStats {
                        method: SolveMethod::IterativeKrylov,
                        iterations: out.iterations,
                        relative_residual: out.relative_residual,
                        residual_history: out.history,
                        fell_back: false,
                    },
                ));
            }
            if config.direct_fallback && n < DIRECT_FALLBACK_LIMIT {
                return direct(true, out.history, out.iterations);
            }
            Err(Error::SolveFailed {
                reason: if out.breakdown {
                    "Krylov breakdown".into()
                } else {
                    "no convergence within the iteration limit".into()
                },
                residual: out.relative_residual,
                iterations: out.iterations,
                history: out.history,
            })
        }
    }
}

/// Conjugate gradients for symmetric positive definite systems.
pub fn solve_spd(a: &CsrMatrix, b: &[f64], tolerance: f64) -> Result<(Vec<f64>, SolveStats)> {
    let n = b.len();
    let out = gmres::conjugate_gradient(a, b, tolerance, 10 * n.max(1));
    if !out.converged {
        return Err(Error::SolveFailed {
            reason: "conjugate gradients did not converge".into(),
            residual: out.relative_residual,
            iterations: out.iterations,
            history: out.history,
        });
    }
    Ok((
        out.x,
        SolveStats {
            method: SolveMethod::IterativeKrylov,
            iterations: out.iterations,
            relative_residual: out.relative_residual,
            residual_history: out.history,
            fell_back: false,
        },
    ))
}
