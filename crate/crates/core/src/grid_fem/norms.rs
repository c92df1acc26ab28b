use super::shape::{shape_eval, ShapeEval};
use super::space::FeSpace;
use crate::coefficients::{eval_gamma, CoefficientField};
use crate::error::Result;
use crate::quadrature::TensorRule;
use crate::tensor::{dot, double_dot, Matrix, Vector, ZERO_MATRIX, ZERO_VECTOR};

/// `rot w` from the Jacobian `G[c][k] = d_k w_c`: the scalar
/// `d_2 w_1 - d_1 w_2` (stored in slot 0) in 2D, the curl in 3D.
pub fn rot_of(dim: usize, g: &Matrix) -> Vector {
    if dim == 2 {
        [g[0][1] - g[1][0], 0.0, 0.0]
    } else {
        [g[2][1] - g[1][2], g[0][2] - g[2][0], g[1][0] - g[0][1]]
    }
}

/// Value and Jacobian of a discrete field on one cell.
pub(crate) fn eval_local(space: &FeSpace, w: &[f64], cell: usize, s: &ShapeEval) -> (Vector, Matrix) {
    let dim = space.dim();
    let dofs = space.cell_dofs(cell);
    let mut val = ZERO_VECTOR;
    let mut grad = ZERO_MATRIX;
    for corner in 0..s.count {
        for c in 0..dim {
            if let Some(d) = dofs[corner * dim + c] {
                let coef = w[d];
                val[c] += coef * s.values[corner];
                for k in 0..dim {
                    grad[c][k] += coef * s.grads[corner][k];
                }
            }
        }
    }
    (val, grad)
}

/// Squared L2 norms of a discrete vector field and of its derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldNorms {
    pub l2_sq: f64,
    pub grad_sq: f64,
    pub div_sq: f64,
    pub rot_sq: f64,
}

pub fn field_norms(space: &FeSpace, w: &[f64], order: usize) -> FieldNorms {
    let mesh = space.mesh();
    let dim = mesh.dim();
    let rule = TensorRule::new(dim, order);
    let vol = mesh.h().powi(dim as i32);
    let shapes: Vec<ShapeEval> = rule.points.iter().map(|p| shape_eval(dim, mesh.h(), p)).collect();
    let mut out = FieldNorms {
        l2_sq: 0.0,
        grad_sq: 0.0,
        div_sq: 0.0,
        rot_sq: 0.0,
    };
    for cell in 0..mesh.cell_count() {
        for (s, wq) in shapes.iter().zip(&rule.weights) {
            let (v, g) = eval_local(space, w, cell, s);
            let wt = wq * vol;
            let div: f64 = (0..dim).map(|i| g[i][i]).sum();
            let rot = rot_of(dim, &g);
            out.l2_sq += wt * dot(&v, &v);
            out.grad_sq += wt * double_dot(&g, &g);
            out.div_sq += wt * div * div;
            out.rot_sq += wt * dot(&rot, &rot);
        }
    }
    out
}

/// `||(-div w) - gamma L~ w||` with `L~ w = -A:Dw - b.w`.
pub fn nearness_defect(space: &FeSpace, coeffs: &CoefficientField, w: &[f64], order: usize) -> Result<f64> {
    let mesh = space.mesh();
    let dim = mesh.dim();
    let rule = TensorRule::new(dim, order);
    let vol = mesh.h().powi(dim as i32);
    let shapes: Vec<ShapeEval> = rule.points.iter().map(|p| shape_eval(dim, mesh.h(), p)).collect();
    let mut acc = 0.0;
    for cell in 0..mesh.cell_count() {
        for ((s, p), wq) in shapes.iter().zip(&rule.points).zip(&rule.weights) {
            let x = mesh.to_physical(cell, p);
            let a = coeffs.diffusion(&x)?;
            let b = coeffs.drift(&x)?;
            let gamma = eval_gamma(coeffs, &x)?;
            let (v, g) = eval_local(space, w, cell, s);
            let div: f64 = (0..dim).map(|i| g[i][i]).sum();
            let lw = -double_dot(&a, &g) - dot(&b, &v);
            let d = -div - gamma * lw;
            acc += wq * vol * d * d;
        }
    }
    Ok(acc.sqrt())
}
