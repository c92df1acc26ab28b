//! Fixed-size vectors and matrices for points and coefficient values in
//! dimension 2 or 3. Entries beyond the active dimension are kept at zero.

use nalgebra::{Matrix2, Matrix3};

pub type Vector = [f64; 3];
pub type Matrix = [[f64; 3]; 3];

pub const ZERO_VECTOR: Vector = [0.0; 3];
pub const ZERO_MATRIX: Matrix = [[0.0; 3]; 3];

pub fn identity(dim: usize) -> Matrix {
    scaled_identity(dim, 1.0)
}

pub fn scaled_identity(dim: usize, a: f64) -> Matrix {
    let mut m = ZERO_MATRIX;
    for (i, row) in m.iter_mut().enumerate().take(dim) {
        row[i] = a;
    }
    m
}

pub fn trace(m: &Matrix) -> f64 {
    m[0][0] + m[1][1] + m[2][2]
}

/// Copy of `m` with every entry outside the leading `dim x dim` block zeroed.
pub fn truncate_matrix(m: &Matrix, dim: usize) -> Matrix {
    let mut out = ZERO_MATRIX;
    for i in 0..dim {
        out[i][..dim].copy_from_slice(&m[i][..dim]);
    }
    out
}

pub fn truncate_vector(v: &Vector, dim: usize) -> Vector {
    let mut out = ZERO_VECTOR;
    out[..dim].copy_from_slice(&v[..dim]);
    out
}

/// Squared Frobenius norm `M:M`.
pub fn frobenius_sq(m: &Matrix) -> f64 {
    m.iter().flatten().map(|v| v * v).sum()
}

pub fn dot(a: &Vector, b: &Vector) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn norm_sq(v: &Vector) -> f64 {
    dot(v, v)
}

/// `A:B = sum_ij A_ij B_ij`.
pub fn double_dot(a: &Matrix, b: &Matrix) -> f64 {
    let mut s = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            s += a[i][j] * b[i][j];
        }
    }
    s
}

pub fn scale_matrix(m: &Matrix, t: f64) -> Matrix {
    let mut out = *m;
    out.iter_mut().flatten().for_each(|v| *v *= t);
    out
}

pub fn scale_vector(v: &Vector, t: f64) -> Vector {
    [v[0] * t, v[1] * t, v[2] * t]
}

pub fn is_finite_matrix(m: &Matrix) -> bool {
    m.iter().flatten().all(|v| v.is_finite())
}

pub fn is_finite_vector(v: &Vector) -> bool {
    v.iter().all(|x| x.is_finite())
}

/// Largest `|m_ij - m_ji|` relative to the largest entry magnitude.
pub fn relative_asymmetry(m: &Matrix) -> f64 {
    let scale = m.iter().flatten().fold(0.0f64, |acc, v| acc.max(v.abs()));
    if scale == 0.0 {
        return 0.0;
    }
    let mut worst = 0.0f64;
    for i in 0..3 {
        for j in (i + 1)..3 {
            worst = worst.max((m[i][j] - m[j][i]).abs());
        }
    }
    worst / scale
}

/// Smallest and largest eigenvalue of the leading `dim x dim` block of a
/// symmetric matrix.
pub fn eigen_range(m: &Matrix, dim: usize) -> (f64, f64) {
    let eig: Vec<f64> = match dim {
        2 => Matrix2::new(m[0][0], m[0][1], m[1][0], m[1][1])
            .symmetric_eigenvalues()
            .iter()
            .copied()
            .collect(),
        _ => Matrix3::new(
            m[0][0], m[0][1], m[0][2], m[1][0], m[1][1], m[1][2], m[2][0], m[2][1], m[2][2],
        )
        .symmetric_eigenvalues()
        .iter()
        .copied()
        .collect(),
    };
    let lo = eig.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = eig.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    (lo, hi)
}
