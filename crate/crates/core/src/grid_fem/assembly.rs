use rayon::prelude::*;

use super::norms::rot_of;
use super::shape::{shape_eval, ShapeEval};
use super::space::{ConstraintKind, FeSpace};
use crate::coefficients::{check_cordes, CordesReport, CoefficientField, Setting};
use crate::error::{Error, Result};
use crate::quadrature::TensorRule;
use crate::sparse_linalg::CsrMatrix;
use crate::tensor::{dot, frobenius_sq, norm_sq, trace, Matrix, Vector, ZERO_MATRIX};

/// Right-hand side of the rho-problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhsKind {
    /// `(-1, gamma L~ w)` for the periodic problem.
    PeriodicUnit,
    /// `(F, w)` for the Dirichlet problem.
    DirichletPotential,
}

/// Assembled Galerkin system.
///
/// For periodic spaces the matrix is the saddle form
/// `[[K, B^T], [B, 0]]` with one zero-mean row per vector component.
#[derive(Debug, Clone)]
pub struct SparseSystem {
    pub matrix: CsrMatrix,
    pub rhs: Vec<f64>,
    pub n_free: usize,
    pub n_multipliers: usize,
    pub quad_order: usize,
    pub kind: ConstraintKind,
    pub cordes: CordesReport,
}

impl SparseSystem {
    pub fn size(&self) -> usize {
        self.n_free + self.n_multipliers
    }

    /// `a(w, v)` for free-DOF vectors, read from the `K` block.
    pub fn form(&self, w: &[f64], v: &[f64]) -> f64 {
        let mut s = 0.0;
        for (i, vi) in v.iter().enumerate().take(self.n_free) {
            for (j, a) in self.matrix.row(i) {
                if j < self.n_free {
                    s += vi * a * w[j];
                }
            }
        }
        s
    }
}

/// One basis function `phi = N_corner e_comp` at a quadrature point.
#[derive(Clone, Copy)]
struct BasisAt {
    value: f64,
    comp: usize,
    grad: Matrix,
    div: f64,
    rot: Vector,
}

fn basis_at(dim: usize, s: &ShapeEval, corner: usize, comp: usize) -> BasisAt {
    let mut grad = ZERO_MATRIX;
    grad[comp] = s.grads[corner];
    BasisAt {
        value: s.values[corner],
        comp,
        grad,
        div: s.grads[corner][comp],
        rot: rot_of(dim, &grad),
    }
}

struct CellContribution {
    entries: Vec<(usize, usize, f64)>,
    rhs: Vec<(usize, f64)>,
    mean: Vec<(usize, usize, f64)>,
}

/// Assembles `a(rho, w) = (-div rho, gamma L~ w) + (rot rho, rot w)` and the
/// requested right-hand side with tensor Gauss quadrature of `quad_order`
/// points per direction.
///
/// The Cordes condition matching the space (periodic or Dirichlet) is checked
/// on the quadrature points first and a failure aborts assembly.
pub fn assemble(
    space: &FeSpace,
    coeffs: &CoefficientField,
    rhs_kind: RhsKind,
    quad_order: usize,
) -> Result<SparseSystem> {
    let mesh = space.mesh();
    let dim = mesh.dim();
    if coeffs.dim() != dim {
        return Err(Error::DimensionMismatch(format!(
            "coefficients are {}-dimensional, mesh is {dim}-dimensional",
            coeffs.dim()
        )));
    }
    let setting = match (space.kind(), rhs_kind) {
        (ConstraintKind::PeriodicZeroMean, RhsKind::PeriodicUnit) => Setting::Periodic,
        (ConstraintKind::TangentialTrace, RhsKind::DirichletPotential) => Setting::Dirichlet,
        (k, r) => {
            return Err(Error::Incompatible(format!(
                "right-hand side {r:?} does not match space {k:?}"
            )))
        }
    };
    if quad_order == 0 {
        return Err(Error::Incompatible("quadrature order must be >= 1".into()));
    }
    coeffs.check_alignment(mesh.cells_per_dim())?;
    if setting == Setting::Dirichlet {
        coeffs.potential(&[0.5; 3])?;
    }
    let report = check_cordes(coeffs, setting, &mesh.quadrature_points(quad_order))?;
    if !report.passed {
        return Err(Error::CordesFailed(Box::new(report)));
    }

    let rule = TensorRule::new(dim, quad_order);
    let h = mesh.h();
    let vol = h.powi(dim as i32);
    let shapes: Vec<ShapeEval> = rule.points.iter().map(|p| shape_eval(dim, h, p)).collect();
    let nloc = mesh.corners() * dim;
    let periodic = setting == Setting::Periodic;

    let cells: Vec<CellContribution> = (0..mesh.cell_count())
        .into_par_iter()
        .map(|cell| -> Result<CellContribution> {
            let dofs = space.cell_dofs(cell);
            let mut k_loc = vec![0.0; nloc * nloc];
            let mut r_loc = vec![0.0; nloc];
            let mut m_loc = vec![0.0; nloc];
            for ((s, p), wq) in shapes.iter().zip(&rule.points).zip(&rule.weights) {
                let x = mesh.to_physical(cell, p);
                let a = coeffs.diffusion(&x)?;
                let b = coeffs.drift(&x)?;
                let gamma = trace(&a) / (frobenius_sq(&a) + norm_sq(&b));
                let wt = wq * vol;
                let f = if periodic { None } else { Some(coeffs.potential(&x)?) };
                let basis: Vec<BasisAt> = (0..nloc).map(|l| basis_at(dim, s, l / dim, l % dim)).collect();
                // gamma L~ phi_i
                let gl: Vec<f64> = basis
                    .iter()
                    .map(|phi| {
                        let adw: f64 = (0..dim).map(|k| a[phi.comp][k] * phi.grad[phi.comp][k]).sum();
                        gamma * (-adw - b[phi.comp] * phi.value)
                    })
                    .collect();
                for i in 0..nloc {
                    if dofs[i].is_none() {
                        continue;
                    }
                    for j in 0..nloc {
                        if dofs[j].is_none() {
                            continue;
                        }
                        k_loc[i * nloc + j] +=
                            wt * (-basis[j].div * gl[i] + dot(&basis[j].rot, &basis[i].rot));
                    }
                    r_loc[i] += match f {
                        None => -wt * gl[i],
                        Some(fv) => wt * fv[basis[i].comp] * basis[i].value,
                    };
                    m_loc[i] += wt * basis[i].value;
                }
            }
            let mut entries = Vec::with_capacity(nloc * nloc);
            let mut rhs = Vec::with_capacity(nloc);
            let mut mean = Vec::new();
            for i in 0..nloc {
                let Some(gi) = dofs[i] else { continue };
                for j in 0..nloc {
                    if let Some(gj) = dofs[j] {
                        entries.push((gi, gj, k_loc[i * nloc + j]));
                    }
                }
                rhs.push((gi, r_loc[i]));
                if periodic {
                    mean.push((i % dim, gi, m_loc[i]));
                }
            }
            Ok(CellContribution { entries, rhs, mean })
        })
        .collect::<Result<_>>()?;

    let n_free = space.n_free();
    let n_mult = space.n_multipliers();
    let mut triplets = Vec::new();
    let mut rhs = vec![0.0; n_free + n_mult];
    for c in cells {
        triplets.extend(c.entries);
        for (i, v) in c.rhs {
            rhs[i] += v;
        }
        for (comp, i, v) in c.mean {
            triplets.push((n_free + comp, i, v));
            triplets.push((i, n_free + comp, v));
        }
    }
    Ok(SparseSystem {
        matrix: CsrMatrix::from_triplets(n_free + n_mult, n_free + n_mult, triplets),
        rhs,
        n_free,
        n_multipliers: n_mult,
        quad_order,
        kind: space.kind(),
        cordes: report,
    })
}

/// Gram matrices of the multilinear vector space over the free DOFs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GramKind {
    Mass,
    Gradient,
    Divergence,
    Rot,
}

pub fn assemble_gram(space: &FeSpace, kind: GramKind, quad_order: usize) -> CsrMatrix {
    let mesh = space.mesh();
    let dim = mesh.dim();
    let rule = TensorRule::new(dim, quad_order);
    let h = mesh.h();
    let vol = h.powi(dim as i32);
    let nloc = mesh.corners() * dim;
    let mut triplets = Vec::new();
    for cell in 0..mesh.cell_count() {
        let dofs = space.cell_dofs(cell);
        let mut loc = vec![0.0; nloc * nloc];
        for (p, wq) in rule.points.iter().zip(&rule.weights) {
            let s = shape_eval(dim, h, p);
            let basis: Vec<BasisAt> = (0..nloc).map(|l| basis_at(dim, &s, l / dim, l % dim)).collect();
            for i in 0..nloc {
                for j in 0..nloc {
                    let (bi, bj) = (&basis[i], &basis[j]);
                    let v = match kind {
                        GramKind::Mass => {
                            if bi.comp == bj.comp {
                                bi.value * bj.value
                            } else {
                                0.0
                            }
                        }
                        GramKind::Gradient => crate::tensor::double_dot(&bi.grad, &bj.grad),
                        GramKind::Divergence => bi.div * bj.div,
                        GramKind::Rot => dot(&bi.rot, &bj.rot),
                    };
                    loc[i * nloc + j] += wq * vol * v;
                }
            }
        }
        for i in 0..nloc {
            let Some(gi) = dofs[i] else { continue };
            for j in 0..nloc {
                if let Some(gj) = dofs[j] {
                    triplets.push((gi, gj, loc[i * nloc + j]));
                }
            }
        }
    }
    CsrMatrix::from_triplets(space.n_free(), space.n_free(), triplets)
}
