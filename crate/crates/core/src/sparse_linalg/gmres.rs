//! Restarted GMRES with right Jacobi preconditioning, and Jacobi-preconditioned
//! conjugate gradients for symmetric positive definite systems.

use super::csr::{dot, norm, CsrMatrix};

pub(crate) struct KrylovOutcome {
    pub x: Vec<f64>,
    pub iterations: usize,
    pub relative_residual: f64,
    pub history: Vec<f64>,
    pub converged: bool,
    pub breakdown: bool,
}

fn jacobi(a: &CsrMatrix) -> Vec<f64> {
    a.diagonal()
        .into_iter()
        .map(|d| if d.abs() > 1e-300 { 1.0 / d } else { 1.0 })
        .collect()
}

pub(crate) fn gmres(
    a: &CsrMatrix,
    b: &[f64],
    tol: f64,
    max_iter: usize,
    restart: usize,
) -> KrylovOutcome {
    let n = b.len();
    let minv = jacobi(a);
    let bnorm = norm(b);
    let mut x = vec![0.0; n];
    let mut history = Vec::new();
    if bnorm == 0.0 {
        return KrylovOutcome {
            x,
            iterations: 0,
            relative_residual: 0.0,
            history,
            converged: true,
            breakdown: false,
        };
    }
    let m = restart.max(1).min(n.max(1));
    let mut r = b.to_vec();
    let mut beta = bnorm;
    let mut iterations = 0;
    let mut breakdown = false;
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(m + 1);
    let mut hess = vec![vec![0.0; m]; m + 1];
    let mut cs = vec![0.0; m];
    let mut sn = vec![0.0; m];
    let mut w = vec![0.0; n];
    let mut z = vec![0.0; n];
    loop {
        basis.clear();
        basis.push(r.iter().map(|v| v / beta).collect());
        let mut g = vec![0.0; m + 1];
        g[0] = beta;
        let mut k = 0;
        while k < m && iterations < max_iter {
            for i in 0..n {
                z[i] = minv[i] * basis[k][i];
            }
            a.mul_vec_into(&z, &mut w);
            // modified Gram-Schmidt, one reorthogonalization pass
            for col in hess.iter_mut() {
                col[k] = 0.0;
            }
            for _ in 0..2 {
                for (j, v) in basis.iter().enumerate() {
                    let hj = dot(&w, v);
                    hess[j][k] += hj;
                    w.iter_mut().zip(v).for_each(|(wi, vi)| *wi -= hj * vi);
                }
            }
            let hn = norm(&w);
            hess[k + 1][k] = hn;
            for j in 0..k {
                let t = cs[j] * hess[j][k] + sn[j] * hess[j + 1][k];
                hess[j + 1][k] = -sn[j] * hess[j][k] + cs[j] * hess[j + 1][k];
                hess[j][k] = t;
            }
            let denom = hess[k][k].hypot(hess[k + 1][k]);
            if denom == 0.0 {
                breakdown = true;
                break;
            }
            cs[k] = hess[k][k] / denom;
            sn[k] = hess[k + 1][k] / denom;
            hess[k][k] = denom;
            hess[k + 1][k] = 0.0;
            g[k + 1] = -sn[k] * g[k];
            g[k] *= cs[k];
            iterations += 1;
            k += 1;
            history.push(g[k].abs() / bnorm);
            if g[k].abs() <= tol * bnorm || hn <= 1e-300 {
                break;
            }
            basis.push(w.iter().map(|v| v / hn).collect());
        }
        // back substitution
        let mut y = vec![0.0; k];
        for i in (0..k).rev() {
            let mut s = g[i];
            for j in (i + 1)..k {
                s -= hess[i][j] * y[j];
            }
            y[i] = s / hess[i][i];
        }
        let mut update = vec![0.0; n];
        for (j, yj) in y.iter().enumerate() {
            update.iter_mut().zip(&basis[j]).for_each(|(u, v)| *u += yj * v);
        }
        for i in 0..n {
            x[i] += minv[i] * update[i];
        }
        let ax = a.mul_vec(&x);
        for i in 0..n {
            r[i] = b[i] - ax[i];
        }
        beta = norm(&r);
        let rel = beta / bnorm;
        if rel <= tol || iterations >= max_iter || breakdown || k == 0 {
            return KrylovOutcome {
                x,
                iterations,
                relative_residual: rel,
                history,
                converged: rel <= tol,
                breakdown,
            };
        }
    }
}

pub(crate) fn conjugate_gradient(a: &CsrMatrix, b: &[f64], tol: f64, max_iter: usize) -> KrylovOutcome {
    let n = b.len();
    let minv = jacobi(a);
    let bnorm = norm(b);
    let mut x = vec![0.0; n];
    let mut history = Vec::new();
    if bnorm == 0.0 {
        return KrylovOutcome {
            x,
            iterations: 0,
            relative_residual: 0.0,
            history,
            converged: true,
            breakdown: false,
        };
    }
    let mut r = b.to_vec();
    let mut z: Vec<f64> = r.iter().zip(&minv).map(|(a, b)| a * b).collect();
    let mut p = z.clone();
    let mut rz = dot(&r, &z);
    let mut ap = vec![0.0; n];
    let mut iterations = 0;
    let mut rel = 1.0;
    while iterations < max_iter {
        a.mul_vec_into(&p, &mut ap);
        let pap = dot(&p, &ap);
        if pap <= 0.0 {
            return KrylovOutcome {
                x,
                iterations,
                relative_residual: rel,
                history,
                converged: false,
                breakdown: true,
            };
        }
        let alpha = rz / pap;
        for i in 0..n {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        iterations += 1;
        rel = norm(&r) / bnorm;
        history.push(rel);
        if rel <= tol {
            break;
        }
        for i in 0..n {
            z[i] = minv[i] * r[i];
        }
        let rz_new = dot(&r, &z);
        let beta = rz_new / rz;
        rz = rz_new;
        for i in 0..n {
            p[i] = z[i] + beta * p[i];
        }
    }
    let ax = a.mul_vec(&x);
    let true_rel = norm(&b.iter().zip(&ax).map(|(b, a)| b - a).collect::<Vec<_>>()) / bnorm;
    KrylovOutcome {
        x,
        iterations,
        relative_residual: true_rel,
        history,
        converged: true_rel <= tol * 10.0 && rel <= tol,
        breakdown: false,
    }
}
