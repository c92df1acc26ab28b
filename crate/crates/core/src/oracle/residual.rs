use std::f64::consts::PI;

use crate::coefficients::CoefficientField;
use crate::error::Result;
use crate::quadrature::QuadSpec;
use crate::tensor::{Matrix, Vector, ZERO_MATRIX, ZERO_VECTOR};

/// One-dimensional factor of a tensor trigonometric test function; the
/// argument is the angular frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Factor {
    One,
    Sin(f64),
    Cos(f64),
}

impl Factor {
    fn eval(&self, t: f64) -> (f64, f64, f64) {
        match *self {
            Factor::One => (1.0, 0.0, 0.0),
            Factor::Sin(k) => ((k * t).sin(), k * (k * t).cos(), -k * k * (k * t).sin()),
            Factor::Cos(k) => ((k * t).cos(), -k * (k * t).sin(), -k * k * (k * t).cos()),
        }
    }
}

/// `phi(x) = prod_i factor_i(x_i)` with analytic derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TestFunction {
    pub dim: usize,
    pub factors: [Factor; 3],
}

impl TestFunction {
    /// Value, gradient and Hessian at `x`.
    pub fn eval(&self, x: &Vector) -> (f64, Vector, Matrix) {
        let d: Vec<(f64, f64, f64)> = (0..self.dim).map(|i| self.factors[i].eval(x[i])).collect();
        let mut value = 1.0;
        for di in &d {
            value *= di.0;
        }
        let mut grad = ZERO_VECTOR;
        let mut hess = ZERO_MATRIX;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut p = 1.0;
                for (k, dk) in d.iter().enumerate() {
                    p *= if i == j && k == i {
                        dk.2
                    } else if k == i || k == j {
                        dk.1
                    } else {
                        dk.0
                    };
                }
                hess[i][j] = p;
            }
            let mut p = 1.0;
            for (k, dk) in d.iter().enumerate() {
                p *= if k == i { dk.1 } else { dk.0 };
            }
            grad[i] = p;
        }
        (value, grad, hess)
    }
}

/// Ten smooth periodic test functions: tensor trigonometric polynomials of
/// degree at most 2.
pub fn periodic_battery(dim: usize) -> Vec<TestFunction> {
    use Factor::*;
    let k1 = 2.0 * PI;
    let k2 = 4.0 * PI;
    let pairs = [
        (Sin(k1), One),
        (One, Cos(k1)),
        (Sin(k1), Sin(k1)),
        (Cos(k1), Sin(k1)),
        (Sin(k2), Cos(k1)),
        (Cos(k2), Cos(k2)),
        (Sin(k1), Cos(k2)),
        (Cos(k1), Cos(k1)),
        (Sin(k2), Sin(k2)),
        (One, Sin(k2)),
    ];
    let third = [One, Cos(k1), Sin(k1), Cos(k2), Sin(k2)];
    pairs
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| TestFunction {
            dim,
            factors: [a, b, if dim == 3 { third[i % third.len()] } else { One }],
        })
        .collect()
}

/// Ten test functions vanishing on the boundary: products of `sin(k pi x_i)`.
pub fn dirichlet_battery(dim: usize) -> Vec<TestFunction> {
    let modes = [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 1), (2, 3), (3, 2), (3, 3), (1, 4)];
    modes
        .iter()
        .enumerate()
        .map(|(i, &(k, l))| TestFunction {
            dim,
            factors: [
                Factor::Sin(k as f64 * PI),
                Factor::Sin(l as f64 * PI),
                if dim == 3 {
                    Factor::Sin((1 + i % 2) as f64 * PI)
                } else {
                    Factor::One
                },
            ],
        })
        .collect()
}

/// `(u, L phi) - (f, phi)` with `L phi = -A:D^2 phi - b . grad phi`; the
/// source term is omitted when `source` is `None`.
pub fn weak_residual(
    coeffs: &CoefficientField,
    density: impl Fn(&Vector) -> f64,
    source: Option<&dyn Fn(&Vector) -> f64>,
    phi: &TestFunction,
    quad: QuadSpec,
) -> Result<f64> {
    let dim = coeffs.dim();
    let mut acc = 0.0;
    let mut err = None;
    quad.for_each_point(dim, |x, w| {
        if err.is_some() {
            return;
        }
        let (a, b) = match (coeffs.diffusion(x), coeffs.drift(x)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => {
                err = Some(e);
                return;
            }
        };
        let (v, g, hm) = phi.eval(x);
        let mut lphi = 0.0;
        for i in 0..dim {
            for j in 0..dim {
                lphi -= a[i][j] * hm[i][j];
            }
            lphi -= b[i] * g[i];
        }
        let f = source.map(|s| s(x)).unwrap_or(0.0);
        acc += w * (density(x) * lphi - f * v);
    });
    match err {
        Some(e) => Err(e),
        None => Ok(acc),
    }
}
