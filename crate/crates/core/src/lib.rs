//! Finite element solvers for stationary Fokker–Planck–Kolmogorov equations
//! with bounded measurable coefficients on the unit square and cube.
//!
//! The periodic problem `-D^2:(A u) + div(b u) = 0`, `int u = 1`, and the
//! homogeneous Dirichlet problem with source `f = -div F` are reduced to a
//! coercive first-order Galerkin problem for an auxiliary vector field `rho`
//! after renormalizing with `gamma = tr(A) / (|A|^2 + |b|^2)`. The density is
//! then recovered pointwise from `div rho_h`.
//!
//! Modules:
//! - [`coefficients`]: coefficient fields and Cordes checks,
//! - [`grid_fem`]: meshes, vector element spaces, assembly,
//! - [`sparse_linalg`]: sparse storage and solvers,
//! - [`fpk_solver`]: the two-step solvers, effective matrices, convergence studies,
//! - [`oracle`]: exact solutions and independent reference computations.

#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod coefficients;
pub mod error;
pub mod fpk_solver;
pub mod grid_fem;
pub mod oracle;
pub mod quadrature;
pub mod sparse_linalg;
pub mod tensor;

pub use coefficients::{
    check_cordes, check_cordes_lower_order, eval_gamma, CheckerPattern, CoefficientField,
    CordesReport, CordesSetting, Family, Setting, Source,
};
pub use error::{Error, Result};
pub use fpk_solver::{
    convergence_study, effective_matrix, potential_from_source, solve_dirichlet, solve_periodic_fpk,
    FpkSolution, StudyProblem, StudyRow,
};
pub use grid_fem::{assemble, build_space, ConstraintKind, FeSpace, Mesh, RhsKind, SparseSystem};
pub use quadrature::QuadSpec;
pub use sparse_linalg::{solve_linear, CsrMatrix, SolveConfig, SolveMethod, SolveStats};
pub use tensor::{Matrix, Vector};
