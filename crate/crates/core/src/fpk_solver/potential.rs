use crate::coefficients::ScalarFn;
use crate::error::Result;
use crate::grid_fem::{shape_eval, Mesh};
use crate::quadrature::TensorRule;
use crate::sparse_linalg::{solve_spd, CsrMatrix};
use crate::tensor::{Vector, ZERO_VECTOR};

const SOURCE_QUAD_ORDER: usize = 3;
const CG_TOLERANCE: f64 = 1e-12;

/// Multilinear solution of `Delta phi = f`, `phi = 0` on the boundary,
/// on a uniform grid. [`DiscretePotential::field`] gives `F = -grad phi`,
/// so that `-div F = f` weakly.
#[derive(Debug, Clone)]
pub struct DiscretePotential {
    mesh: Mesh,
    /// Nodal values on every node, zero on the boundary.
    phi: Vec<f64>,
}

impl DiscretePotential {
    pub fn mesh(&self) -> &Mesh {
        &self.mesh
    }

    pub fn nodal_values(&self) -> &[f64] {
        &self.phi
    }

    pub fn phi(&self, x: &Vector) -> f64 {
        let (cell, local) = self.mesh.locate(x);
        let s = shape_eval(self.mesh.dim(), self.mesh.h(), &local);
        (0..s.count).map(|c| s.values[c] * self.phi[self.mesh.corner_node(cell, c)]).sum()
    }

    pub fn gradient(&self, x: &Vector) -> Vector {
        let (cell, local) = self.mesh.locate(x);
        let s = shape_eval(self.mesh.dim(), self.mesh.h(), &local);
        let mut g = ZERO_VECTOR;
        for c in 0..s.count {
            let p = self.phi[self.mesh.corner_node(cell, c)];
            for d in 0..self.mesh.dim() {
                g[d] += p * s.grads[c][d];
            }
        }
        g
    }

    /// `F(x) = -grad phi(x)`.
    pub fn field(&self, x: &Vector) -> Vector {
        let mut g = self.gradient(x);
        for v in g.iter_mut() {
            *v = -*v;
        }
        g
    }
}

fn on_boundary(mesh: &Mesh, node: usize) -> bool {
    let k = mesh.node_multi(node);
    let n = mesh.cells_per_dim();
    (0..mesh.dim()).any(|d| k[d] == 0 || k[d] == n)
}

/// Solves `(grad phi, grad v) = -(f, v)` for all interior hat functions `v`
/// with conjugate gradients.
pub fn potential_from_source(dim: usize, f: ScalarFn, n_fine: usize) -> Result<DiscretePotential> {
    let mesh = Mesh::new(dim, n_fine)?;
    let mut index = vec![None; mesh.node_count()];
    let mut n_int = 0;
    for (node, slot) in index.iter_mut().enumerate() {
        if !on_boundary(&mesh, node) {
            *slot = Some(n_int);
            n_int += 1;
        }
    }
    let rule = TensorRule::new(dim, SOURCE_QUAD_ORDER);
    let h = mesh.h();
    let vol = h.powi(dim as i32);
    let shapes: Vec<_> = rule.points.iter().map(|p| shape_eval(dim, h, p)).collect();
    let corners = mesh.corners();
    let mut triplets = Vec::new();
    let mut rhs = vec![0.0; n_int];
    for cell in 0..mesh.cell_count() {
        let nodes: Vec<Option<usize>> = (0..corners).map(|c| index[mesh.corner_node(cell, c)]).collect();
        let mut k_loc = vec![0.0; corners * corners];
        for ((p, w), s) in rule.points.iter().zip(&rule.weights).zip(&shapes) {
            let x = mesh.to_physical(cell, p);
            let fx = f(&x);
            let wt = w * vol;
            for i in 0..corners {
                for j in 0..corners {
                    let g: f64 = (0..dim).map(|d| s.grads[i][d] * s.grads[j][d]).sum();
                    k_loc[i * corners + j] += wt * g;
                }
                if let Some(gi) = nodes[i] {
                    rhs[gi] -= wt * fx * s.values[i];
                }
            }
        }
        for i in 0..corners {
            let Some(gi) = nodes[i] else { continue };
            for j in 0..corners {
                if let Some(gj) = nodes[j] {
                    triplets.push((gi, gj, k_loc[i * corners + j]));
                }
            }
        }
    }
    let k = CsrMatrix::from_triplets(n_int, n_int, triplets);
    let values = if rhs.iter().all(|v| *v == 0.0) {
        vec![0.0; n_int]
    } else {
        solve_spd(&k, &rhs, CG_TOLERANCE)?.0
    };
    let phi = index
        .iter()
        .map(|slot| slot.map(|i| values[i]).unwrap_or(0.0))
        .collect();
    Ok(DiscretePotential { mesh, phi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;
    use std::sync::Arc;

    #[test]
    fn zero_source_gives_zero_field() {
        let p = potential_from_source(2, Arc::new(|_| 0.0), 8).unwrap();
        assert!(p.nodal_values().iter().all(|v| *v == 0.0));
        assert_eq!(p.field(&[0.3, 0.4, 0.0]), [0.0; 3]);
    }

    #[test]
    fn sine_source_recovers_minus_sine() {
        let f: ScalarFn = Arc::new(|x| 2.0 * PI * PI * (PI * x[0]).sin() * (PI * x[1]).sin());
        let mut errs = Vec::new();
        for n in [8, 16, 32] {
            let p = potential_from_source(2, f.clone(), n).unwrap();
            let mut e: f64 = 0.0;
            for (node, v) in p.nodal_values().iter().enumerate() {
                let x = p.mesh().node_coords(node);
                e = e.max((v + (PI * x[0]).sin() * (PI * x[1]).sin()).abs());
            }
            errs.push(e);
        }
        // second order at the nodes
        assert!(errs[0] / errs[1] > 3.5 && errs[1] / errs[2] > 3.5, "{errs:?}");
    }

    #[test]
    fn unit_source_weak_residual() {
        let n = 8;
        let p = potential_from_source(2, Arc::new(|_| 1.0), n).unwrap();
        let mesh = *p.mesh();
        let rule = TensorRule::new(2, 2);
        // (F, grad v) - (1, v) for every interior hat function v
        for node in 0..mesh.node_count() {
            if on_boundary(&mesh, node) {
                continue;
            }
            let mut r = 0.0;
            for cell in 0..mesh.cell_count() {
                let Some(c) = (0..4).find(|&c| mesh.corner_node(cell, c) == node) else { continue };
                for (pt, w) in rule.points.iter().zip(&rule.weights) {
                    let s = shape_eval(2, mesh.h(), pt);
                    let x = mesh.to_physical(cell, pt);
                    let fx = p.field(&x);
                    let wt = w * mesh.h() * mesh.h();
                    r += wt * (fx[0] * s.grads[c][0] + fx[1] * s.grads[c][1] - s.values[c]);
                }
            }
            assert!(r.abs() < 1e-8, "node {node}: {r}");
        }
    }
}
