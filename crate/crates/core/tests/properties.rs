#![allow(clippy::needless_range_loop)]

use std::sync::Arc;

use cordes_fpk::grid_fem::{assemble_gram, field_norms, nearness_defect, GramKind};
use cordes_fpk::{
    assemble, build_space, check_cordes, check_cordes_lower_order, solve_periodic_fpk,
    CoefficientField, ConstraintKind, Matrix, Mesh, QuadSpec, RhsKind, Setting, SolveConfig,
    Vector,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random SPD matrix `Q diag(l) Q^T` in the leading `dim` block.
fn spd(dim: usize, eig: &[f64], angles: &[f64]) -> Matrix {
    let mut q = [[0.0; 3]; 3];
    for (i, row) in q.iter_mut().enumerate().take(dim) {
        row[i] = 1.0;
    }
    // product of plane rotations
    let planes = [(0, 1), (0, 2), (1, 2)];
    for (k, &(i, j)) in planes.iter().enumerate() {
        if j >= dim {
            continue;
        }
        let (s, c) = angles[k].sin_cos();
        for row in q.iter_mut().take(dim) {
            let (a, b) = (row[i], row[j]);
            row[i] = c * a - s * b;
            row[j] = s * a + c * b;
        }
    }
    let mut m = [[0.0; 3]; 3];
    for i in 0..dim {
        for j in 0..dim {
            m[i][j] = (0..dim).map(|k| q[i][k] * eig[k] * q[j][k]).sum();
        }
    }
    for i in 0..dim {
        for j in 0..i {
            let s = 0.5 * (m[i][j] + m[j][i]);
            m[i][j] = s;
            m[j][i] = s;
        }
    }
    m
}

fn field(dim: usize, a: Matrix, b: Vector) -> CoefficientField {
    CoefficientField::new(dim, Arc::new(move |_| a))
        .unwrap()
        .with_drift(Arc::new(move |_| b))
}

fn samples(dim: usize) -> Vec<Vector> {
    QuadSpec::new(2, 2).points(dim)
}

fn random_member(n: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cordes_report_is_scale_invariant(
        dim in 2usize..=3,
        eig in prop::collection::vec(0.5f64..2.0, 3),
        angles in prop::collection::vec(0.0f64..3.0, 3),
        b in prop::collection::vec(-0.5f64..0.5, 3),
        t in 0.01f64..100.0,
    ) {
        let a = spd(dim, &eig, &angles);
        let bv = [b[0], b[1], b[2]];
        let f = field(dim, a, bv);
        let r1 = check_cordes(&f, Setting::Periodic, &samples(dim)).unwrap();
        let r2 = check_cordes(&f.scaled(t), Setting::Periodic, &samples(dim)).unwrap();
        prop_assert!((r1.delta_star - r2.delta_star).abs() <= 1e-12);
        prop_assert_eq!(r1.passed, r2.passed);
    }

    #[test]
    fn driftless_nearness_equals_delta(
        dim in 2usize..=3,
        eig in prop::collection::vec(0.5f64..2.0, 3),
        angles in prop::collection::vec(0.0f64..3.0, 3),
    ) {
        let a = spd(dim, &eig, &angles);
        let f = CoefficientField::new(dim, Arc::new(move |_| a)).unwrap();
        for setting in [Setting::Periodic, Setting::Dirichlet] {
            let r = check_cordes(&f, setting, &samples(dim)).unwrap();
            prop_assert_eq!(r.eta, 0);
            prop_assert_eq!(r.delta_threshold, 0.0);
            prop_assert!((r.nearness_const.unwrap() - r.delta_star).abs() <= 1e-15);
        }
    }

    #[test]
    fn passed_reports_satisfy_pointwise_bound_and_cone_angle(
        dim in 2usize..=3,
        eig in prop::collection::vec(0.2f64..3.0, 3),
        angles in prop::collection::vec(0.0f64..3.0, 3),
        b in prop::collection::vec(-1.0f64..1.0, 3),
    ) {
        let a = spd(dim, &eig, &angles);
        let f = field(dim, a, [b[0], b[1], b[2]]);
        for setting in [Setting::Periodic, Setting::Dirichlet] {
            let r = check_cordes(&f, setting, &samples(dim)).unwrap();
            if r.passed {
                prop_assert!(r.consequence_excess <= 1e-10);
                let n = dim as f64;
                let bound = (1.0 - (1.0 - r.delta_star) / n).sqrt();
                prop_assert!(r.max_cone_angle.cos() >= bound - 1e-12);
            }
        }
    }

    #[test]
    fn lower_order_pointwise_bound(
        dim in 2usize..=3,
        eig in prop::collection::vec(0.2f64..3.0, 3),
        angles in prop::collection::vec(0.0f64..3.0, 3),
        b in prop::collection::vec(-1.0f64..1.0, 3),
        c in 0.1f64..5.0,
        lambda in 0.1f64..5.0,
    ) {
        let a = spd(dim, &eig, &angles);
        let f = field(dim, a, [b[0], b[1], b[2]]).with_reaction(Arc::new(move |_| c));
        let r = check_cordes_lower_order(&f, lambda, &samples(dim)).unwrap();
        if r.passed {
            prop_assert!(r.consequence_excess <= 1e-10);
        }
    }

    #[test]
    fn periodic_pythagoras(dim in 2usize..=3, seed in any::<u64>()) {
        let space = build_space(Mesh::new(dim, 4).unwrap(), ConstraintKind::PeriodicZeroMean);
        let w = random_member(space.n_free(), seed);
        let f = field_norms(&space, &w, 2);
        prop_assert!((f.div_sq + f.rot_sq - f.grad_sq).abs() <= 1e-10 * f.grad_sq);
    }

    #[test]
    fn tangential_two_sided_bound(dim in 2usize..=3, seed in any::<u64>()) {
        let space = build_space(Mesh::new(dim, 4).unwrap(), ConstraintKind::TangentialTrace);
        let w = random_member(space.n_free(), seed);
        let f = field_norms(&space, &w, 2);
        prop_assert!(f.div_sq <= f.grad_sq * (1.0 + 1e-10));
        prop_assert!(f.grad_sq <= (f.div_sq + f.rot_sq) * (1.0 + 1e-10));
    }

    #[test]
    fn gram_matrices_reproduce_norms(seed in any::<u64>()) {
        let space = build_space(Mesh::new(2, 4).unwrap(), ConstraintKind::TangentialTrace);
        let w = random_member(space.n_free(), seed);
        let f = field_norms(&space, &w, 2);
        let g = assemble_gram(&space, GramKind::Gradient, 2);
        let d = assemble_gram(&space, GramKind::Divergence, 2);
        let r = assemble_gram(&space, GramKind::Rot, 2);
        prop_assert!((g.bilinear(&w, &w) - f.grad_sq).abs() <= 1e-10 * f.grad_sq);
        prop_assert!((d.bilinear(&w, &w) - f.div_sq).abs() <= 1e-10 * f.grad_sq);
        prop_assert!((r.bilinear(&w, &w) - f.rot_sq).abs() <= 1e-10 * f.grad_sq);
    }

    #[test]
    fn nearness_and_coercivity_for_constant_coefficients(
        eig in prop::collection::vec(0.5f64..2.0, 3),
        angle in 0.0f64..3.0,
        b in prop::collection::vec(-0.6f64..0.6, 2),
        seed in any::<u64>(),
        periodic in any::<bool>(),
    ) {
        let a = spd(2, &eig, &[angle, 0.0, 0.0]);
        let f = field(2, a, [b[0], b[1], 0.0]);
        let (kind, setting) = if periodic {
            (ConstraintKind::PeriodicZeroMean, Setting::Periodic)
        } else {
            (ConstraintKind::TangentialTrace, Setting::Dirichlet)
        };
        let report = check_cordes(&f, setting, &samples(2)).unwrap();
        prop_assume!(report.passed);
        let f = if periodic {
            f
        } else {
            f.with_source(cordes_fpk::Source::Potential(Arc::new(|_| [0.0; 3])))
        };
        let space = build_space(Mesh::new(2, 4).unwrap(), kind);
        let rhs = if periodic { RhsKind::PeriodicUnit } else { RhsKind::DirichletPotential };
        let sys = assemble(&space, &f, rhs, 2).unwrap();
        let q = (1.0 - sys.cordes.nearness_const.unwrap()).sqrt();
        let mut w = random_member(space.n_free(), seed);
        space.project_zero_mean(&mut w);
        let dw2 = field_norms(&space, &w, 2).grad_sq;
        let defect = nearness_defect(&space, &f, &w, 2).unwrap();
        prop_assert!(defect <= q * dw2.sqrt() + 1e-8);
        prop_assert!(sys.form(&w, &w) >= (1.0 - q) * dw2 - 1e-8);
    }
}

#[test]
fn scalar_diffusion_gives_zero_periodic_rhs() {
    let f = CoefficientField::checkerboard(2, 1.0, 3.0, cordes_fpk::CheckerPattern::Checker).unwrap();
    let space = build_space(Mesh::new(2, 8).unwrap(), ConstraintKind::PeriodicZeroMean);
    let sys = assemble(&space, &f, RhsKind::PeriodicUnit, 2).unwrap();
    assert!(sys.rhs.iter().all(|v| v.abs() < 1e-14));
}

#[test]
fn constant_fields_lie_in_the_kernel() {
    let f = CoefficientField::trig_drift(2, 0.15).unwrap();
    let space = build_space(Mesh::new(2, 6).unwrap(), ConstraintKind::PeriodicZeroMean);
    let sys = assemble(&space, &f, RhsKind::PeriodicUnit, 2).unwrap();
    for comp in 0..2 {
        let c: Vec<f64> = (0..space.n_free())
            .map(|i| if space.component_of(i) == comp { 1.0 } else { 0.0 })
            .collect();
        // K c over the free rows: constant fields have zero divergence and rot
        for i in 0..sys.n_free {
            let kc: f64 = sys.matrix.row(i).filter(|(j, _)| *j < sys.n_free).map(|(j, a)| a * c[j]).sum();
            assert!(kc.abs() < 1e-12, "row {i}: {kc}");
        }
    }
}

#[test]
fn scaling_leaves_density_unchanged() {
    let f = CoefficientField::trig_drift(2, 0.15).unwrap();
    let base = solve_periodic_fpk(&f, 8, 2, &SolveConfig::default()).unwrap();
    for t in [0.25, 7.0] {
        let s = solve_periodic_fpk(&f.scaled(t), 8, 2, &SolveConfig::default()).unwrap();
        for x in [[0.1, 0.2, 0.0], [0.55, 0.9, 0.0], [0.73, 0.31, 0.0]] {
            let (u0, u1) = (base.density(&x).unwrap(), s.density(&x).unwrap());
            assert!((u0 - u1).abs() < 1e-8, "t = {t}: {u0} vs {u1}");
        }
    }
}
