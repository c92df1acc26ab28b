use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use crate::coefficients::{CoefficientField, ScalarFn, VectorFn};
use crate::error::{Error, Result};
use crate::quadrature::QuadSpec;
use crate::tensor::{Matrix, Vector, ZERO_VECTOR};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    ClosedForm,
    FineGridReference,
}

/// An exact (or reference) density, with the potential and source for
/// Dirichlet manufactured problems.
#[derive(Clone)]
pub struct OracleSolution {
    pub dim: usize,
    pub density: ScalarFn,
    pub potential: Option<VectorFn>,
    pub source: Option<ScalarFn>,
    pub provenance: Provenance,
    /// Rule used for the normalization integral, if any.
    pub quad: Option<QuadSpec>,
    pub normalization: f64,
}

impl fmt::Debug for OracleSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OracleSolution")
            .field("dim", &self.dim)
            .field("provenance", &self.provenance)
            .field("quad", &self.quad)
            .field("normalization", &self.normalization)
            .finish()
    }
}

impl OracleSolution {
    pub fn eval(&self, x: &Vector) -> f64 {
        (self.density)(x)
    }
}

/// Order-8 Gauss on 8 cells per direction.
const NORMALIZATION_RULE: QuadSpec = QuadSpec { cells: 8, order: 8 };

/// `u* = e^V / int e^V`, the invariant measure of `A = I`, `b = grad V`.
pub fn exact_periodic_gradient_drift(dim: usize, potential: ScalarFn) -> OracleSolution {
    let v = potential.clone();
    let z = NORMALIZATION_RULE.integrate(dim, |x| v(x).exp());
    OracleSolution {
        dim,
        density: Arc::new(move |x| potential(x).exp() / z),
        potential: None,
        source: None,
        provenance: Provenance::ClosedForm,
        quad: Some(NORMALIZATION_RULE),
        normalization: z,
    }
}

/// Oracle for the built-in trigonometric drift family.
pub fn trig_drift_oracle(dim: usize, alpha: f64) -> OracleSolution {
    let (v, _) = crate::coefficients::trig_potential(dim, alpha);
    exact_periodic_gradient_drift(dim, v)
}

/// `u* = (1/a) / int (1/a)`, the invariant measure of `A = a I`, `b = 0`.
///
/// `quad` must resolve the discontinuities of `a` (cells aligned with them).
pub fn exact_periodic_scalar_diffusion(dim: usize, a: ScalarFn, quad: QuadSpec) -> Result<OracleSolution> {
    let mut bad = None;
    quad.for_each_point(dim, |x, _| {
        let v = a(x);
        if bad.is_none() && !(v > 0.0) {
            bad = Some((*x, v));
        }
    });
    if let Some((point, value)) = bad {
        return Err(Error::NonPositiveDiffusion { point, value });
    }
    let z = quad.integrate(dim, |x| 1.0 / a(x));
    Ok(OracleSolution {
        dim,
        density: Arc::new(move |x| 1.0 / (a(x) * z)),
        potential: None,
        source: None,
        provenance: Provenance::ClosedForm,
        quad: Some(quad),
        normalization: z,
    })
}

/// Scalar-diffusion oracle for a field whose diffusion is `a(x) I` and
/// whose drift vanishes.
pub fn scalar_diffusion_oracle(coeffs: &CoefficientField) -> Result<OracleSolution> {
    if coeffs.has_drift() {
        return Err(Error::MissingOracle);
    }
    let dim = coeffs.dim();
    let align = coeffs.alignment().unwrap_or(1);
    let cells = (8usize).div_ceil(align) * align;
    let quad = QuadSpec::new(cells, 8);
    let mut scalar = true;
    quad.for_each_point(dim, |x, _| {
        if let Ok(a) = coeffs.diffusion(x) {
            for i in 0..dim {
                for j in 0..dim {
                    let expect = if i == j { a[0][0] } else { 0.0 };
                    if (a[i][j] - expect).abs() > 1e-14 * a[0][0].abs() {
                        scalar = false;
                    }
                }
            }
        } else {
            scalar = false;
        }
    });
    if !scalar {
        return Err(Error::MissingOracle);
    }
    let field = coeffs.clone();
    let a: ScalarFn = Arc::new(move |x| field.diffusion(x).map(|m| m[0][0]).unwrap_or(f64::NAN));
    exact_periodic_scalar_diffusion(dim, a, quad)
}

/// Manufactured Dirichlet problem with `u* = prod_i sin(pi x_i)` for constant
/// `A`, `b`: `F = A grad u* - b u*` and `f = -A:D^2 u* + b . grad u*`.
pub fn dirichlet_sine_manufactured(dim: usize, a: Matrix, b: Vector) -> OracleSolution {
    let u = move |x: &Vector| -> f64 { (0..dim).map(|i| (PI * x[i]).sin()).product() };
    let grad = move |x: &Vector| -> Vector {
        let mut g = ZERO_VECTOR;
        for (i, gi) in g.iter_mut().enumerate().take(dim) {
            *gi = PI * (PI * x[i]).cos()
                * (0..dim).filter(|&j| j != i).map(|j| (PI * x[j]).sin()).product::<f64>();
        }
        g
    };
    let hessian = move |x: &Vector| -> Matrix {
        let mut hm = [[0.0; 3]; 3];
        for i in 0..dim {
            for j in 0..dim {
                hm[i][j] = if i == j {
                    -PI * PI * u(x)
                } else {
                    PI * PI
                        * (PI * x[i]).cos()
                        * (PI * x[j]).cos()
                        * (0..dim)
                            .filter(|&k| k != i && k != j)
                            .map(|k| (PI * x[k]).sin())
                            .product::<f64>()
                };
            }
        }
        hm
    };
    let potential = move |x: &Vector| -> Vector {
        let g = grad(x);
        let uv = u(x);
        let mut f = ZERO_VECTOR;
        for i in 0..dim {
            f[i] = (0..dim).map(|k| a[i][k] * g[k]).sum::<f64>() - b[i] * uv;
        }
        f
    };
    let source = move |x: &Vector| -> f64 {
        let hm = hessian(x);
        let g = grad(x);
        let mut s = 0.0;
        for i in 0..dim {
            for j in 0..dim {
                s -= a[i][j] * hm[i][j];
            }
            s += b[i] * g[i];
        }
        s
    };
    OracleSolution {
        dim,
        density: Arc::new(u),
        potential: Some(Arc::new(potential)),
        source: Some(Arc::new(source)),
        provenance: Provenance::ClosedForm,
        quad: None,
        normalization: 1.0,
    }
}
