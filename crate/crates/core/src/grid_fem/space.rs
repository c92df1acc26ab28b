use super::mesh::Mesh;

/// Constraint attached to a vector finite element space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintKind {
    /// Y-periodic fields; zero mean is imposed by multipliers at solve time.
    PeriodicZeroMean,
    /// Components tangential to a boundary face vanish on that face.
    TangentialTrace,
}

/// Continuous multilinear vector fields on a [`Mesh`].
#[derive(Debug, Clone)]
pub struct FeSpace {
    mesh: Mesh,
    kind: ConstraintKind,
    // indexed by node * dim + component
    dofs: Vec<Option<usize>>,
    components: Vec<usize>,
    n_free: usize,
}

pub fn build_space(mesh: Mesh, kind: ConstraintKind) -> FeSpace {
    let dim = mesh.dim();
    let n = mesh.cells_per_dim();
    let mut dofs = vec![None; mesh.node_count() * dim];
    let mut components = Vec::new();
    match kind {
        ConstraintKind::PeriodicZeroMean => {
            let per_comp = n.pow(dim as u32);
            for node in 0..mesh.node_count() {
                let k = mesh.node_multi(node);
                let mut p = 0;
                let mut stride = 1;
                for kd in k.iter().take(dim) {
                    p += (kd % n) * stride;
                    stride *= n;
                }
                for c in 0..dim {
                    dofs[node * dim + c] = Some(c * per_comp + p);
                }
            }
            for c in 0..dim {
                components.extend(std::iter::repeat_n(c, per_comp));
            }
        }
        ConstraintKind::TangentialTrace => {
            let mut next = 0;
            for node in 0..mesh.node_count() {
                let k = mesh.node_multi(node);
                for c in 0..dim {
                    // constrained if the node lies on a face whose normal is not e_c
                    let on_tangent_face = (0..dim).any(|i| i != c && (k[i] == 0 || k[i] == n));
                    if !on_tangent_face {
                        dofs[node * dim + c] = Some(next);
                        components.push(c);
                        next += 1;
                    }
                }
            }
        }
    }
    let n_free = components.len();
    FeSpace {
        mesh,
        kind,
        dofs,
        components,
        n_free,
    }
}

impl FeSpace {
    pub fn mesh(&self) -> &Mesh {
        &self.mesh
    }

    pub fn dim(&self) -> usize {
        self.mesh.dim()
    }

    pub fn kind(&self) -> ConstraintKind {
        self.kind
    }

    pub fn is_periodic(&self) -> bool {
        self.kind == ConstraintKind::PeriodicZeroMean
    }

    pub fn n_free(&self) -> usize {
        self.n_free
    }

    /// Number of zero-mean multipliers added at solve time.
    pub fn n_multipliers(&self) -> usize {
        if self.is_periodic() {
            self.dim()
        } else {
            0
        }
    }

    pub fn dof(&self, node: usize, component: usize) -> Option<usize> {
        self.dofs[node * self.dim() + component]
    }

    pub fn component_of(&self, dof: usize) -> usize {
        self.components[dof]
    }

    /// Global DOFs of a cell, local index `corner * dim + component`.
    pub fn cell_dofs(&self, cell: usize) -> [Option<usize>; 24] {
        let dim = self.dim();
        let mut out = [None; 24];
        for corner in 0..self.mesh.corners() {
            let node = self.mesh.corner_node(cell, corner);
            for c in 0..dim {
                out[corner * dim + c] = self.dof(node, c);
            }
        }
        out
    }

    /// Removes the per-component nodal average, which for periodic fields
    /// equals the integral mean.
    pub fn project_zero_mean(&self, w: &mut [f64]) {
        if !self.is_periodic() {
            return;
        }
        let dim = self.dim();
        let mut sum = vec![0.0; dim];
        let mut count = vec![0usize; dim];
        for (i, v) in w.iter().enumerate().take(self.n_free) {
            sum[self.components[i]] += v;
            count[self.components[i]] += 1;
        }
        for (i, v) in w.iter_mut().enumerate().take(self.n_free) {
            let c = self.components[i];
            *v -= sum[c] / count[c] as f64;
        }
    }
}
