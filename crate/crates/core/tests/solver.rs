use std::f64::consts::PI;
use std::sync::Arc;

use cordes_fpk::oracle::{exact_periodic_gradient_drift, l2_error, trig_drift_oracle};
use cordes_fpk::{
    check_cordes, convergence_study, effective_matrix, solve_dirichlet, solve_periodic_fpk,
    CheckerPattern, CoefficientField, Error, QuadSpec, Setting, SolveConfig, SolveMethod, Source,
    StudyProblem,
};

fn cfg() -> SolveConfig {
    SolveConfig::default()
}

#[test]
fn identity_gives_uniform_density() {
    let f = CoefficientField::constant_identity(2).unwrap();
    for n in [4, 10] {
        let s = solve_periodic_fpk(&f, n, 2, &cfg()).unwrap();
        assert!(s.rho.iter().all(|v| v.abs() < 1e-12));
        assert!((s.normalization - 1.0).abs() < 1e-12);
        for (_, u) in s.node_samples().unwrap() {
            assert!((u - 1.0).abs() < 1e-12);
        }
        assert_eq!(s.node_samples().unwrap().len(), (n + 1) * (n + 1));
    }
}

#[test]
fn checkerboard_density_takes_two_values() {
    let f = CoefficientField::checkerboard(2, 1.0, 2.0, CheckerPattern::Halves { axis: 0 }).unwrap();
    let s = solve_periodic_fpk(&f, 8, 2, &cfg()).unwrap();
    assert!((s.normalization - 4.0 / 3.0).abs() < 1e-12);
    assert!((s.density(&[0.2, 0.4, 0.0]).unwrap() - 4.0 / 3.0).abs() < 1e-12);
    assert!((s.density(&[0.8, 0.4, 0.0]).unwrap() - 2.0 / 3.0).abs() < 1e-12);
}

#[test]
fn misaligned_mesh_is_rejected() {
    let f = CoefficientField::checkerboard(2, 1.0, 2.0, CheckerPattern::Checker).unwrap();
    assert!(matches!(solve_periodic_fpk(&f, 7, 2, &cfg()), Err(Error::MisalignedMesh { .. })));
}

#[test]
fn cordes_failure_carries_report() {
    let id = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0; 3]];
    let f = CoefficientField::constant_matrix(2, id, [1.5, 1.0, 0.0]).unwrap();
    match solve_periodic_fpk(&f, 4, 2, &cfg()) {
        Err(Error::CordesFailed(r)) => {
            assert!(!r.passed);
            assert!(r.delta_star <= r.delta_threshold);
        }
        other => panic!("expected Cordes failure, got {other:?}"),
    }
}

#[test]
fn gmres_and_direct_agree() {
    let f = CoefficientField::trig_drift(2, 0.15).unwrap();
    let a = solve_periodic_fpk(&f, 12, 2, &cfg()).unwrap();
    let b = solve_periodic_fpk(&f, 12, 2, &SolveConfig::direct()).unwrap();
    assert_eq!(b.diagnostics.solve.method, SolveMethod::DirectFactorization);
    for (x, y) in a.rho.iter().zip(&b.rho) {
        assert!((x - y).abs() < 1e-8);
    }
}

#[test]
fn trig_drift_density_is_positive_and_normalized() {
    let f = CoefficientField::trig_drift(2, 0.15).unwrap();
    let s = solve_periodic_fpk(&f, 16, 2, &cfg()).unwrap();
    assert!(s.diagnostics.min_density > 0.0);
    assert!((s.diagnostics.integral - 1.0).abs() < 1e-10);
    let oracle = trig_drift_oracle(2, 0.15);
    let e = l2_error(2, |x| s.density(x).unwrap(), |x| oracle.eval(x), QuadSpec::new(16, 4));
    assert!(e < 0.02, "{e}");
}

#[test]
fn separable_cosine_potential() {
    // A = I, b = grad V with V = 0.1 cos(2 pi x1): u depends on x1 only
    let v = Arc::new(|x: &cordes_fpk::Vector| 0.1 * (2.0 * PI * x[0]).cos());
    let oracle = exact_periodic_gradient_drift(2, v);
    let f = CoefficientField::new(2, Arc::new(|_| [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0; 3]]))
        .unwrap()
        .with_drift(Arc::new(|x| [-0.2 * PI * (2.0 * PI * x[0]).sin(), 0.0, 0.0]));
    let problem = StudyProblem {
        coeffs: f,
        setting: Setting::Periodic,
        quad_order: 2,
        solve: cfg(),
        exact: Some(oracle.density.clone()),
        error_order: 4,
    };
    let rows = convergence_study(&problem, &[8, 16, 32]).unwrap();
    for r in &rows[1..] {
        assert!(r.rate.unwrap() > 0.9, "{rows:?}");
    }
    assert!(rows[0].rate.is_none());
}

#[test]
fn zero_potential_gives_zero_density() {
    let f = CoefficientField::constant_identity(2)
        .unwrap()
        .with_source(Source::Potential(Arc::new(|_| [0.0; 3])));
    let s = solve_dirichlet(&f, 8, 2, &cfg()).unwrap();
    assert!(s.rho.iter().all(|v| *v == 0.0));
    assert!(s.node_samples().unwrap().iter().all(|(_, u)| *u == 0.0));
}

#[test]
fn dirichlet_from_scalar_source_converges() {
    let u = |x: &cordes_fpk::Vector| (PI * x[0]).sin() * (PI * x[1]).sin();
    let f = CoefficientField::constant_identity(2)
        .unwrap()
        .with_source(Source::Scalar(Arc::new(move |x| 2.0 * PI * PI * u(x))));
    let problem = StudyProblem {
        coeffs: f,
        setting: Setting::Dirichlet,
        quad_order: 2,
        solve: cfg(),
        exact: Some(Arc::new(u)),
        error_order: 4,
    };
    let rows = convergence_study(&problem, &[8, 16, 32]).unwrap();
    for r in &rows[1..] {
        assert!(r.rate.unwrap() > 0.9, "{rows:?}");
    }
}

#[test]
fn dirichlet_without_source_fails() {
    let f = CoefficientField::constant_identity(2).unwrap();
    assert!(matches!(solve_dirichlet(&f, 4, 2, &cfg()), Err(Error::MissingSource)));
}

#[test]
fn dirichlet_cordes_gate_uses_dirichlet_threshold() {
    let a = [[1.0, 0.1, 0.0], [0.1, 1.0, 0.0], [0.0; 3]];
    let f = CoefficientField::constant_matrix(2, a, [0.2, 0.0, 0.0]).unwrap();
    let r = check_cordes(&f, Setting::Dirichlet, &QuadSpec::new(2, 2).points(2)).unwrap();
    assert!((r.delta_threshold - 1.0 / (1.0 + PI * PI)).abs() < 1e-15);
    assert!(r.passed);
}

#[test]
fn effective_matrices() {
    let id = CoefficientField::constant_identity(2).unwrap();
    let s = solve_periodic_fpk(&id, 4, 2, &cfg()).unwrap();
    let m = effective_matrix(&id, &s).unwrap();
    assert!((m[0][0] - 1.0).abs() < 1e-12 && (m[1][1] - 1.0).abs() < 1e-12 && m[0][1].abs() < 1e-12);

    let two = id.scaled(2.0);
    let s = solve_periodic_fpk(&two, 4, 2, &cfg()).unwrap();
    let m = effective_matrix(&two, &s).unwrap();
    assert!((m[0][0] - 2.0).abs() < 1e-12 && (m[1][1] - 2.0).abs() < 1e-12);

    let trig = CoefficientField::trig_drift(2, 0.15).unwrap();
    let s = solve_periodic_fpk(&trig, 8, 2, &cfg()).unwrap();
    let m = effective_matrix(&trig, &s).unwrap();
    assert_eq!(m[0][1], m[1][0]);
}

#[test]
fn effective_matrix_needs_periodic_solution() {
    let f = CoefficientField::constant_identity(2)
        .unwrap()
        .with_source(Source::Potential(Arc::new(|_| [0.0; 3])));
    let s = solve_dirichlet(&f, 4, 2, &cfg()).unwrap();
    assert!(matches!(effective_matrix(&f, &s), Err(Error::NotPeriodic)));
}

#[test]
fn study_without_oracle_fails() {
    let problem = StudyProblem {
        coeffs: CoefficientField::constant_identity(2).unwrap(),
        setting: Setting::Periodic,
        quad_order: 2,
        solve: cfg(),
        exact: None,
        error_order: 4,
    };
    assert!(matches!(convergence_study(&problem, &[4]), Err(Error::MissingOracle)));
}

#[test]
fn concurrent_solves_are_independent() {
    let f = CoefficientField::trig_drift(2, 0.15).unwrap();
    let handles: Vec<_> = (0..4)
        .map(|_| {
            let f = f.clone();
            std::thread::spawn(move || solve_periodic_fpk(&f, 8, 2, &SolveConfig::direct()).unwrap().rho)
        })
        .collect();
    let results: Vec<Vec<f64>> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    for r in &results[1..] {
        assert_eq!(r, &results[0]);
    }
}

#[test]
fn oracle_normalization_is_stable_under_refinement() {
    let (v, _) = cordes_fpk::coefficients::trig_potential(2, 0.15);
    let z8 = QuadSpec::new(8, 8).integrate(2, |x| v(x).exp());
    let z16 = QuadSpec::new(8, 16).integrate(2, |x| v(x).exp());
    assert!(((z8 - z16) / z16).abs() <= 1e-10);
    let o = trig_drift_oracle(2, 0.15);
    let mass = QuadSpec::new(8, 8).integrate(2, |x| o.eval(x));
    assert!((mass - 1.0).abs() <= 1e-12);
}
