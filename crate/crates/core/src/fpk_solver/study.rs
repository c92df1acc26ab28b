use super::dirichlet::solve_dirichlet;
use super::periodic::solve_periodic_fpk;
use crate::coefficients::{CoefficientField, ScalarFn, Setting};
use crate::error::{Error, Result};
use crate::oracle::l2_error;
use crate::quadrature::QuadSpec;
use crate::sparse_linalg::SolveConfig;

#[derive(Clone)]
pub struct StudyProblem {
    pub coeffs: CoefficientField,
    pub setting: Setting,
    pub quad_order: usize,
    pub solve: SolveConfig,
    pub exact: Option<ScalarFn>,
    /// Gauss order per cell for the error integral; the error rule uses the
    /// solver mesh so discontinuities stay on cell faces.
    pub error_order: usize,
}

impl std::fmt::Debug for StudyProblem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("StudyProblem")
            .field("coeffs", &self.coeffs)
            .field("setting", &self.setting)
            .field("quad_order", &self.quad_order)
            .field("solve", &self.solve)
            .field("has_exact", &self.exact.is_some())
            .field("error_order", &self.error_order)
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StudyRow {
    pub cells: usize,
    pub h: f64,
    pub l2_error: f64,
    /// `log2(e_prev / e)`; `None` on the first row.
    pub rate: Option<f64>,
}

pub fn convergence_study(problem: &StudyProblem, cells: &[usize]) -> Result<Vec<StudyRow>> {
    let exact = problem.exact.as_ref().ok_or(Error::MissingOracle)?;
    let dim = problem.coeffs.dim();
    let mut rows: Vec<StudyRow> = Vec::with_capacity(cells.len());
    for &n in cells {
        let sol = match problem.setting {
            Setting::Periodic => solve_periodic_fpk(&problem.coeffs, n, problem.quad_order, &problem.solve)?,
            Setting::Dirichlet => solve_dirichlet(&problem.coeffs, n, problem.quad_order, &problem.solve)?,
        };
        let failure = std::cell::RefCell::new(None);
        let err = l2_error(
            dim,
            |x| match sol.density(x) {
                Ok(v) => v,
                Err(e) => {
                    failure.borrow_mut().get_or_insert(e);
                    f64::NAN
                }
            },
            |x| exact(x),
            QuadSpec::new(n, problem.error_order),
        );
        if let Some(e) = failure.into_inner() {
            return Err(e);
        }
        let rate = rows.last().map(|prev| (prev.l2_error / err).log2());
        rows.push(StudyRow {
            cells: n,
            h: 1.0 / n as f64,
            l2_error: err,
            rate,
        });
    }
    Ok(rows)
}
