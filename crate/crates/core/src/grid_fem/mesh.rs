use crate::error::{Error, Result};
use crate::quadrature::QuadSpec;
use crate::tensor::Vector;

/// Uniform tensor lattice of `cells^dim` axis-aligned cubes on `[0,1]^dim`.
///
/// Node and cell indices run with the first coordinate fastest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mesh {
    dim: usize,
    cells: usize,
}

impl Mesh {
    pub fn new(dim: usize, cells: usize) -> Result<Self> {
        if dim != 2 && dim != 3 {
            return Err(Error::UnsupportedDimension(dim));
        }
        if cells < 2 {
            return Err(Error::TooFewCells(cells));
        }
        Ok(Self { dim, cells })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cells_per_dim(&self) -> usize {
        self.cells
    }

    pub fn h(&self) -> f64 {
        1.0 / self.cells as f64
    }

    pub fn node_count(&self) -> usize {
        (self.cells + 1).pow(self.dim as u32)
    }

    pub fn cell_count(&self) -> usize {
        self.cells.pow(self.dim as u32)
    }

    pub fn corners(&self) -> usize {
        1 << self.dim
    }

    pub fn node_index(&self, k: &[usize; 3]) -> usize {
        let m = self.cells + 1;
        let mut idx = k[0] + m * k[1];
        if self.dim == 3 {
            idx += m * m * k[2];
        }
        idx
    }

    pub fn node_multi(&self, idx: usize) -> [usize; 3] {
        let m = self.cells + 1;
        let mut k = [idx % m, (idx / m) % m, 0];
        if self.dim == 3 {
            k[2] = idx / (m * m);
        }
        k
    }

    pub fn node_coords(&self, idx: usize) -> Vector {
        let k = self.node_multi(idx);
        let h = self.h();
        let mut x = [k[0] as f64 * h, k[1] as f64 * h, 0.0];
        if self.dim == 3 {
            x[2] = k[2] as f64 * h;
        }
        x
    }

    pub fn cell_multi(&self, cell: usize) -> [usize; 3] {
        let n = self.cells;
        let mut k = [cell % n, (cell / n) % n, 0];
        if self.dim == 3 {
            k[2] = cell / (n * n);
        }
        k
    }

    pub fn cell_index(&self, k: &[usize; 3]) -> usize {
        let n = self.cells;
        let mut idx = k[0] + n * k[1];
        if self.dim == 3 {
            idx += n * n * k[2];
        }
        idx
    }

    pub fn cell_origin(&self, cell: usize) -> Vector {
        let k = self.cell_multi(cell);
        let h = self.h();
        [k[0] as f64 * h, k[1] as f64 * h, k[2] as f64 * h]
    }

    /// Lattice coordinates of a cell corner; bit `d` of `corner` selects the
    /// upper side in direction `d`.
    pub fn corner_multi(&self, cell: usize, corner: usize) -> [usize; 3] {
        let mut k = self.cell_multi(cell);
        for (d, kd) in k.iter_mut().enumerate().take(self.dim) {
            *kd += (corner >> d) & 1;
        }
        k
    }

    pub fn corner_node(&self, cell: usize, corner: usize) -> usize {
        self.node_index(&self.corner_multi(cell, corner))
    }

    pub fn to_physical(&self, cell: usize, local: &Vector) -> Vector {
        let o = self.cell_origin(cell);
        let h = self.h();
        let mut x = [0.0; 3];
        for d in 0..self.dim {
            x[d] = o[d] + h * local[d];
        }
        x
    }

    /// Cell containing `x` and the local coordinates in `[0,1]^dim`. Points
    /// on interior faces are assigned to the cell on the upper side.
    pub fn locate(&self, x: &Vector) -> (usize, Vector) {
        let n = self.cells;
        let mut k = [0usize; 3];
        let mut local = [0.0; 3];
        for d in 0..self.dim {
            let s = x[d].clamp(0.0, 1.0) * n as f64;
            let kd = (s.floor() as usize).min(n - 1);
            k[d] = kd;
            local[d] = s - kd as f64;
        }
        (self.cell_index(&k), local)
    }

    /// Physical Gauss points of the given order over all cells.
    pub fn quadrature_points(&self, order: usize) -> Vec<Vector> {
        QuadSpec::new(self.cells, order).points(self.dim)
    }
}
