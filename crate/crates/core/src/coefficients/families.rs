//! Built-in coefficient families.

use std::f64::consts::PI;
use std::sync::Arc;

use super::field::{CoefficientField, Family, ScalarFn};
use super::table::CoefficientTable;
use crate::error::{Error, Result};
use crate::tensor::{
    truncate_matrix, truncate_vector,
    frobenius_sq, identity, norm_sq, relative_asymmetry, scaled_identity, trace, Matrix, Vector,
    ZERO_VECTOR,
};

/// Angular frequency of the trigonometric drift potential.
pub const TRIG_DRIFT_FREQUENCY: f64 = 2.0 * PI;

/// Arrangement of the two values of a checkerboard field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckerPattern {
    /// `a_lo` on `x_axis < 1/2`, `a_hi` elsewhere (axis is 0-based).
    Halves { axis: usize },
    /// `2^n` sub-cubes of side 1/2 with alternating values.
    Checker,
}

fn cordes_ratio(a: &Matrix, b: &Vector) -> f64 {
    trace(a).powi(2) / (frobenius_sq(a) + norm_sq(b))
}

impl CoefficientField {
    /// `A = I`, `b = 0`.
    pub fn constant_identity(dim: usize) -> Result<Self> {
        Self::constant_matrix(dim, identity(dim), ZERO_VECTOR)
            .map(|f| f.with_family(Family::ConstantIdentity))
    }

    /// Spatially constant `A` and `b`.
    pub fn constant_matrix(dim: usize, a: Matrix, b: Vector) -> Result<Self> {
        let a = truncate_matrix(&a, dim.min(3));
        let b = truncate_vector(&b, dim.min(3));
        let asym = relative_asymmetry(&a);
        if asym > 1e-12 {
            return Err(Error::NotSymmetric {
                point: ZERO_VECTOR,
                asymmetry: asym,
            });
        }
        let delta = cordes_ratio(&a, &b) - (dim as f64 - 1.0);
        let has_drift = norm_sq(&b) > 0.0;
        let mut field = Self::new(dim, Arc::new(move |_| a))?
            .with_family(Family::ConstantMatrix)
            .with_analytic(Some(delta), Some(has_drift));
        if has_drift {
            field = field.with_drift(Arc::new(move |_| b));
        }
        Ok(field)
    }

    /// `A = a(x) I` with a user-supplied positive scalar `a`, `b = 0`.
    pub fn scalar_diffusion(dim: usize, a: ScalarFn) -> Result<Self> {
        Ok(
            Self::new(dim, Arc::new(move |x| scaled_identity(dim, a(x))))?
                .with_analytic(Some(1.0), Some(false)),
        )
    }

    /// Piecewise constant `A = a(x) I` with values `a_lo`, `a_hi`; `b = 0`.
    pub fn checkerboard(dim: usize, a_lo: f64, a_hi: f64, pattern: CheckerPattern) -> Result<Self> {
        for v in [a_lo, a_hi] {
            if !(v > 0.0) {
                return Err(Error::NonPositiveDiffusion {
                    point: ZERO_VECTOR,
                    value: v,
                });
            }
        }
        if let CheckerPattern::Halves { axis } = pattern {
            if axis >= dim {
                return Err(Error::DimensionMismatch(format!(
                    "split axis {axis} out of range for dimension {dim}"
                )));
            }
        }
        let a = move |x: &Vector| -> f64 {
            let high = match pattern {
                CheckerPattern::Halves { axis } => x[axis] >= 0.5,
                CheckerPattern::Checker => {
                    (0..dim).filter(|&i| x[i] >= 0.5).count() % 2 == 1
                }
            };
            if high {
                a_hi
            } else {
                a_lo
            }
        };
        Ok(Self::scalar_diffusion(dim, Arc::new(a))?
            .with_family(Family::Checkerboard)
            .with_alignment(2))
    }

    /// `A = a(x_1) I` with `a` piecewise constant on `values.len()` equal
    /// layers along the first axis; `b = 0`.
    pub fn layered(dim: usize, values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::DimensionMismatch("layered profile is empty".into()));
        }
        if let Some(&v) = values.iter().find(|v| !(**v > 0.0)) {
            return Err(Error::NonPositiveDiffusion {
                point: ZERO_VECTOR,
                value: v,
            });
        }
        let layers = values.len();
        let a = move |x: &Vector| -> f64 {
            let k = ((x[0] * layers as f64).floor() as usize).min(layers - 1);
            values[k]
        };
        let field = Self::scalar_diffusion(dim, Arc::new(a))?.with_family(Family::Layered);
        Ok(if layers > 1 {
            field.with_alignment(layers)
        } else {
            field
        })
    }

    /// `A = I`, `b = grad V` with `V(x) = alpha * prod_i sin(2 pi x_i)`.
    pub fn trig_drift(dim: usize, alpha: f64) -> Result<Self> {
        let (_, grad) = trig_potential(dim, alpha);
        let b2_max = (TRIG_DRIFT_FREQUENCY * alpha).powi(2);
        let n = dim as f64;
        let delta = n * n / (n + b2_max) - (n - 1.0);
        let mut field = Self::new(dim, Arc::new(move |_| identity(dim)))?
            .with_family(Family::TrigDrift)
            .with_analytic(Some(delta), Some(alpha != 0.0));
        if alpha != 0.0 {
            field = field.with_drift(grad);
        }
        Ok(field)
    }

    /// Piecewise constant coefficients read from a cell-centered table.
    pub fn from_table(table: CoefficientTable) -> Result<Self> {
        let dim = table.dim();
        let m = table.cells();
        let table = Arc::new(table);
        let ta = table.clone();
        let tb = table.clone();
        let mut field = Self::new(dim, Arc::new(move |x| ta.diffusion_at(x)))?
            .with_family(Family::Table)
            .with_alignment(m);
        if table.has_drift() {
            field = field.with_drift(Arc::new(move |x| tb.drift_at(x)));
        } else {
            field = field.with_analytic(None, Some(false));
        }
        Ok(field)
    }
}

/// The trigonometric potential `V` and its gradient.
pub fn trig_potential(dim: usize, alpha: f64) -> (ScalarFn, super::field::VectorFn) {
    let k = TRIG_DRIFT_FREQUENCY;
    let value = move |x: &Vector| -> f64 {
        (0..dim).map(|i| (k * x[i]).sin()).product::<f64>() * alpha
    };
    let grad = move |x: &Vector| -> Vector {
        let mut g = ZERO_VECTOR;
        for (i, gi) in g.iter_mut().enumerate().take(dim) {
            let mut p = alpha * k * (k * x[i]).cos();
            for j in (0..dim).filter(|&j| j != i) {
                p *= (k * x[j]).sin();
            }
            *gi = p;
        }
        g
    };
    (Arc::new(value), Arc::new(grad))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trig_gradient_matches_finite_differences() {
        let (v, g) = trig_potential(3, 0.2);
        let x = [0.13, 0.71, 0.42];
        let eps = 1e-6;
        let grad = g(&x);
        for i in 0..3 {
            let mut xp = x;
            let mut xm = x;
            xp[i] += eps;
            xm[i] -= eps;
            let fd = (v(&xp) - v(&xm)) / (2.0 * eps);
            assert!((fd - grad[i]).abs() < 1e-8);
        }
    }

    #[test]
    fn checkerboard_halves_values() {
        let f = CoefficientField::checkerboard(2, 1.0, 2.0, CheckerPattern::Halves { axis: 0 })
            .unwrap();
        assert_eq!(f.diffusion(&[0.2, 0.9, 0.0]).unwrap()[0][0], 1.0);
        assert_eq!(f.diffusion(&[0.7, 0.1, 0.0]).unwrap()[1][1], 2.0);
        assert_eq!(f.alignment(), Some(2));
    }

    #[test]
    fn checker_pattern_alternates() {
        let f = CoefficientField::checkerboard(2, 1.0, 2.0, CheckerPattern::Checker).unwrap();
        assert_eq!(f.diffusion(&[0.2, 0.2, 0.0]).unwrap()[0][0], 1.0);
        assert_eq!(f.diffusion(&[0.7, 0.2, 0.0]).unwrap()[0][0], 2.0);
        assert_eq!(f.diffusion(&[0.7, 0.7, 0.0]).unwrap()[0][0], 1.0);
    }

    #[test]
    fn rejects_nonpositive_values() {
        assert!(CoefficientField::layered(2, vec![1.0, 0.0]).is_err());
        assert!(CoefficientField::checkerboard(2, -1.0, 2.0, CheckerPattern::Checker).is_err());
    }

    #[test]
    fn rejects_asymmetric_constant_matrix() {
        let a = [[1.0, 0.2, 0.0], [0.0, 1.0, 0.0], [0.0; 3]];
        assert!(CoefficientField::constant_matrix(2, a, ZERO_VECTOR).is_err());
    }
}
