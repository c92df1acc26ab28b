use crate::tensor::Vector;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryKind {
    Periodic,
    Dirichlet,
}

/// Discrete `||D^2 v||` and `||Delta v||`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MirandaTalenti {
    pub hessian_norm: f64,
    pub laplacian_norm: f64,
}

impl MirandaTalenti {
    pub fn ratio(&self) -> f64 {
        self.hessian_norm / self.laplacian_norm
    }
}

/// Second differences of `v` at the cell centers of an `n_fd^dim` grid with
/// midpoint quadrature.
///
/// Every second derivative is the product of two centered half-step
/// differences, so pure and mixed derivatives share one stencil family and
/// the periodic identity `||D^2 v|| = ||Delta v||` holds exactly on the grid.
/// For the periodic kind, evaluation points are wrapped into `[0, 1)`.
pub fn miranda_talenti_check(
    dim: usize,
    v: impl Fn(&Vector) -> f64,
    kind: BoundaryKind,
    n_fd: usize,
) -> MirandaTalenti {
    let h = 1.0 / n_fd as f64;
    let eval = |x: &Vector| -> f64 {
        match kind {
            BoundaryKind::Periodic => {
                let mut y = *x;
                for yi in y.iter_mut().take(dim) {
                    *yi = yi.rem_euclid(1.0);
                }
                v(&y)
            }
            BoundaryKind::Dirichlet => v(x),
        }
    };
    let second = |x: &Vector, i: usize, j: usize| -> f64 {
        if i == j {
            let mut xp = *x;
            let mut xm = *x;
            xp[i] += h;
            xm[i] -= h;
            (eval(&xp) - 2.0 * eval(x) + eval(&xm)) / (h * h)
        } else {
            let mut s = 0.0;
            for (si, sj, sign) in [(1.0, 1.0, 1.0), (1.0, -1.0, -1.0), (-1.0, 1.0, -1.0), (-1.0, -1.0, 1.0)] {
                let mut y = *x;
                y[i] += 0.5 * si * h;
                y[j] += 0.5 * sj * h;
                s += sign * eval(&y);
            }
            s / (h * h)
        }
    };
    let vol = h.powi(dim as i32);
    let kz = if dim == 3 { n_fd } else { 1 };
    let mut hess_sq = 0.0;
    let mut lap_sq = 0.0;
    for k in 0..kz {
        for j in 0..n_fd {
            for i in 0..n_fd {
                let mut x = [(i as f64 + 0.5) * h, (j as f64 + 0.5) * h, 0.0];
                if dim == 3 {
                    x[2] = (k as f64 + 0.5) * h;
                }
                let mut lap = 0.0;
                for a in 0..dim {
                    for b in 0..dim {
                        let d = second(&x, a, b);
                        hess_sq += vol * d * d;
                        if a == b {
                            lap += d;
                        }
                    }
                }
                lap_sq += vol * lap * lap;
            }
        }
    }
    MirandaTalenti {
        hessian_norm: hess_sq.sqrt(),
        laplacian_norm: lap_sq.sqrt(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn periodic_trig_ratio_is_one() {
        let r = miranda_talenti_check(
            2,
            |x| (2.0 * PI * x[0]).sin() * (2.0 * PI * x[1]).sin(),
            BoundaryKind::Periodic,
            256,
        );
        assert!((r.ratio() - 1.0).abs() < 1e-6);
    }

    #[test]
    fn dirichlet_sine_norms() {
        let r = miranda_talenti_check(
            2,
            |x| (PI * x[0]).sin() * (PI * x[1]).sin(),
            BoundaryKind::Dirichlet,
            256,
        );
        assert!((r.ratio() - 1.0).abs() < 1e-6);
        // ||D^2 v||^2 = pi^4 up to the O(h^2) stencil factor
        assert!((r.hessian_norm.powi(2) / PI.powi(4) - 1.0).abs() < 1e-3);
    }

    #[test]
    fn polynomial_bump_inequality() {
        let r = miranda_talenti_check(
            2,
            |x| x[0] * (1.0 - x[0]) * x[1] * (1.0 - x[1]),
            BoundaryKind::Dirichlet,
            256,
        );
        assert!(r.hessian_norm <= r.laplacian_norm + 1e-8);
    }

    #[test]
    fn periodic_3d() {
        let r = miranda_talenti_check(
            3,
            |x| (2.0 * PI * x[0]).sin() * (2.0 * PI * x[1]).cos() * (4.0 * PI * x[2]).sin(),
            BoundaryKind::Periodic,
            32,
        );
        assert!((r.ratio() - 1.0).abs() < 1e-6);
    }
}
