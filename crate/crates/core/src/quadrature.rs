//! Gauss–Legendre rules on the unit interval and their tensor products.

use std::f64::consts::PI;

use crate::tensor::Vector;

/// One-dimensional Gauss–Legendre rule with `order` points mapped to `[0, 1]`.
///
/// Nodes are found by Newton iteration on the Legendre polynomial of degree
/// `order`, started from the Chebyshev-like guess `cos(pi (i + 3/4) / (order + 1/2))`.
pub fn gauss_legendre(order: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(order >= 1, "quadrature order must be at least 1");
    let n = order;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, z);
            dp = d;
            let dz = p / d;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, z);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - z * z) * dp * dp);
        // map [-1, 1] -> [0, 1]
        nodes[i] = 0.5 * (1.0 - z);
        nodes[n - 1 - i] = 0.5 * (1.0 + z);
        weights[i] = 0.5 * w;
        weights[n - 1 - i] = 0.5 * w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, z: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = z;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (z * p1 - p0) / (z * z - 1.0);
    (p1, d)
}

/// Tensor-product Gauss rule on the reference cube `[0, 1]^dim`.
#[derive(Debug, Clone)]
pub struct TensorRule {
    pub dim: usize,
    pub points: Vec<Vector>,
    pub weights: Vec<f64>,
}

impl TensorRule {
    pub fn new(dim: usize, order: usize) -> Self {
        let (x, w) = gauss_legendre(order);
        let mut points = Vec::new();
        let mut weights = Vec::new();
        let k = if dim == 3 { order } else { 1 };
        for c in 0..k {
            for b in 0..order {
                for a in 0..order {
                    let mut p = [x[a], x[b], 0.0];
                    let mut wt = w[a] * w[b];
                    if dim == 3 {
                        p[2] = x[c];
                        wt *= w[c];
                    }
                    points.push(p);
                    weights.push(wt);
                }
            }
        }
        Self {
            dim,
            points,
            weights,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Composite rule: `cells^dim` equal subcubes of `[0,1]^dim`, each carrying a
/// Gauss rule of the given order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadSpec {
    pub cells: usize,
    pub order: usize,
}

impl QuadSpec {
    pub fn new(cells: usize, order: usize) -> Self {
        Self { cells, order }
    }

    /// Visits every physical quadrature point with its weight.
    pub fn for_each_point(&self, dim: usize, mut f: impl FnMut(&Vector, f64)) {
        let rule = TensorRule::new(dim, self.order);
        let h = 1.0 / self.cells as f64;
        let vol = h.powi(dim as i32);
        let kz = if dim == 3 { self.cells } else { 1 };
        for k in 0..kz {
            for j in 0..self.cells {
                for i in 0..self.cells {
                    for (p, w) in rule.points.iter().zip(&rule.weights) {
                        let mut x = [(i as f64 + p[0]) * h, (j as f64 + p[1]) * h, 0.0];
                        if dim == 3 {
                            x[2] = (k as f64 + p[2]) * h;
                        }
                        f(&x, w * vol);
                    }
                }
            }
        }
    }

    pub fn integrate(&self, dim: usize, f: impl Fn(&Vector) -> f64) -> f64 {
        let mut s = 0.0;
        self.for_each_point(dim, |x, w| s += w * f(x));
        s
    }

    pub fn points(&self, dim: usize) -> Vec<Vector> {
        let mut out = Vec::new();
        self.for_each_point(dim, |x, _| out.push(*x));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_one() {
        for order in 1..=10 {
            let (_, w) = gauss_legendre(order);
            let s: f64 = w.iter().sum();
            assert!((s - 1.0).abs() < 1e-14, "order {order}: {s}");
        }
    }

    #[test]
    fn exact_for_degree_two_order_minus_one() {
        for order in 1..=8 {
            let (x, w) = gauss_legendre(order);
            for deg in 0..(2 * order) {
                let q: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(deg as i32)).sum();
                let exact = 1.0 / (deg as f64 + 1.0);
                assert!((q - exact).abs() < 1e-13, "order {order} degree {deg}");
            }
        }
    }

    #[test]
    fn two_point_nodes() {
        let (x, _) = gauss_legendre(2);
        let s = 0.5 / 3f64.sqrt();
        assert!((x[0] - (0.5 - s)).abs() < 1e-15);
        assert!((x[1] - (0.5 + s)).abs() < 1e-15);
    }

    #[test]
    fn composite_integrates_trig() {
        let q = QuadSpec::new(8, 4);
        let v = q.integrate(2, |x| (2.0 * PI * x[0]).sin().powi(2));
        assert!((v - 0.5).abs() < 1e-12);
        let v3 = q.integrate(3, |x| x[0] * x[1] * x[2]);
        assert!((v3 - 0.125).abs() < 1e-14);
    }
}
