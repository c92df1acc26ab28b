//! Two-step solvers: the Galerkin problem for `rho_h`, then the density
//! `u_h` from `div rho_h`. Also effective matrices and convergence studies.

mod dirichlet;
mod effective;
mod periodic;
mod potential;
mod solution;
mod study;

pub use dirichlet::{solve_dirichlet, solve_dirichlet_with_fine_grid};
pub use effective::effective_matrix;
pub use periodic::solve_periodic_fpk;
pub use potential::{potential_from_source, DiscretePotential};
pub use solution::{Diagnostics, FpkSolution};
pub use study::{convergence_study, StudyProblem, StudyRow};
