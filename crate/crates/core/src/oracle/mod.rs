//! Independent reference computations: closed-form invariant measures and
//! manufactured solutions, weak-form residuals, finite-difference
//! Miranda–Talenti checks and L2 error norms.

mod densities;
mod miranda_talenti;
mod residual;

pub use densities::{
    dirichlet_sine_manufactured, exact_periodic_gradient_drift, exact_periodic_scalar_diffusion,
    scalar_diffusion_oracle, trig_drift_oracle, OracleSolution, Provenance,
};
pub use miranda_talenti::{miranda_talenti_check, BoundaryKind, MirandaTalenti};
pub use residual::{dirichlet_battery, periodic_battery, weak_residual, Factor, TestFunction};

use crate::quadrature::QuadSpec;
use crate::tensor::Vector;

/// Composite Gauss approximation of `||u_h - u*||_{L2(Y)}`.
pub fn l2_error(
    dim: usize,
    approx: impl Fn(&Vector) -> f64,
    exact: impl Fn(&Vector) -> f64,
    quad: QuadSpec,
) -> f64 {
    quad.integrate(dim, |x| (approx(x) - exact(x)).powi(2)).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn exact(x: &Vector) -> f64 {
        (PI * x[0]).sin() * x[1].exp()
    }

    #[test]
    fn l2_error_examples() {
        let q = QuadSpec::new(8, 4);
        assert!(l2_error(2, exact, exact, q) <= 1e-14);
        assert!((l2_error(2, |x| exact(x) + 1.0, exact, q) - 1.0).abs() < 1e-14);
        let e = l2_error(2, |x| exact(x) + (2.0 * PI * x[0]).sin(), exact, q);
        assert!((e - 0.5f64.sqrt()).abs() < 1e-10);
    }
}
