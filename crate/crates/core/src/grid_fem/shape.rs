use crate::tensor::Vector;

/// Values and physical gradients of the `2^dim` multilinear basis functions
/// of one cell at a local point.
#[derive(Debug, Clone, Copy)]
pub struct ShapeEval {
    pub count: usize,
    pub values: [f64; 8],
    pub grads: [Vector; 8],
}

/// Evaluates the multilinear basis on a cell of side `h` at `local` in the
/// reference cube `[0,1]^dim`.
pub fn shape_eval(dim: usize, h: f64, local: &Vector) -> ShapeEval {
    let count = 1 << dim;
    let mut values = [0.0; 8];
    let mut grads = [[0.0; 3]; 8];
    for corner in 0..count {
        let mut f = [0.0; 3];
        let mut df = [0.0; 3];
        for d in 0..dim {
            if (corner >> d) & 1 == 1 {
                f[d] = local[d];
                df[d] = 1.0;
            } else {
                f[d] = 1.0 - local[d];
                df[d] = -1.0;
            }
        }
        let mut v = 1.0;
        for fd in f.iter().take(dim) {
            v *= fd;
        }
        values[corner] = v;
        for d in 0..dim {
            let mut g = df[d] / h;
            for e in (0..dim).filter(|&e| e != d) {
                g *= f[e];
            }
            grads[corner][d] = g;
        }
    }
    ShapeEval {
        count,
        values,
        grads,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn center_values_are_equal() {
        let s = shape_eval(2, 1.0, &[0.5, 0.5, 0.0]);
        for v in &s.values[..4] {
            assert_eq!(*v, 0.25);
        }
    }

    #[test]
    fn corner_is_nodal() {
        let s = shape_eval(2, 1.0, &[0.0, 0.0, 0.0]);
        assert_eq!(&s.values[..4], &[1.0, 0.0, 0.0, 0.0]);
        let s = shape_eval(3, 1.0, &[1.0, 0.0, 1.0]);
        // corner bits: x -> 1, y -> 0, z -> 4
        assert_eq!(s.values[5], 1.0);
    }

    #[test]
    fn partition_of_unity_and_gradient_sum() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for dim in [2, 3] {
            for _ in 0..10 {
                let p = [rng.gen(), rng.gen(), rng.gen()];
                let s = shape_eval(dim, 0.125, &p);
                let sum: f64 = s.values[..s.count].iter().sum();
                assert!((sum - 1.0).abs() < 1e-14);
                let mut g = [0.0; 3];
                for c in 0..s.count {
                    for d in 0..3 {
                        g[d] += s.grads[c][d];
                    }
                }
                assert!(g.iter().map(|v| v * v).sum::<f64>().sqrt() <= 1e-14 * 8.0);
            }
        }
    }

    #[test]
    fn gradient_matches_finite_difference() {
        let h = 0.25;
        let p = [0.3, 0.7, 0.2];
        let s = shape_eval(3, h, &p);
        let eps = 1e-6;
        for d in 0..3 {
            let mut pp = p;
            let mut pm = p;
            pp[d] += eps;
            pm[d] -= eps;
            let sp = shape_eval(3, h, &pp);
            let sm = shape_eval(3, h, &pm);
            for c in 0..8 {
                let fd = (sp.values[c] - sm.values[c]) / (2.0 * eps * h);
                assert!((fd - s.grads[c][d]).abs() < 1e-7);
            }
        }
    }
}
