use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use cordes_fpk::coefficients::ScalarFn;
use cordes_fpk::fpk_solver::solve_dirichlet_with_fine_grid;
use cordes_fpk::oracle::{dirichlet_sine_manufactured, scalar_diffusion_oracle, trig_drift_oracle};
use cordes_fpk::{
    assemble, build_space, check_cordes, check_cordes_lower_order, convergence_study, effective_matrix,
    solve_periodic_fpk, CheckerPattern, CoefficientField, ConstraintKind, CordesReport, Matrix, Mesh,
    RhsKind, Setting, SolveConfig, SolveMethod, Source, StudyProblem, StudyRow, Vector,
};
use thiserror::Error;

use crate::config::{Command, FamilySpec, Pattern, RunConfig, SettingKind, SolverKind, SourceSpec};

#[derive(Debug, Error)]
pub enum RunError {
    #[error("no command given")]
    MissingCommand,

    #[error("Cordes condition not satisfied: delta_star = {} <= threshold {} (report written to {})", .report.delta_star, .report.delta_threshold, .path.display())]
    CordesFailed { report: Box<CordesReport>, path: PathBuf },

    #[error("no exact solution available for {0}")]
    MissingOracle(String),

    #[error("cannot write {}: {source}", .path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error(transparent)]
    Solver(#[from] cordes_fpk::Error),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Also write the assembled system as `matrix.coo`.
    pub dump_matrix: bool,
}

/// Files written and human-readable summary lines.
#[derive(Debug, Clone, Default)]
pub struct RunSummary {
    pub files: Vec<PathBuf>,
    pub lines: Vec<String>,
}

impl RunSummary {
    fn write(&mut self, path: PathBuf, contents: &str) -> Result<(), RunError> {
        fs::write(&path, contents).map_err(|source| RunError::Io {
            path: path.clone(),
            source,
        })?;
        self.files.push(path);
        Ok(())
    }
}

fn matrix_of(dim: usize, a: &[f64; 6]) -> Matrix {
    let mut m = [[0.0; 3]; 3];
    let [a11, a12, a13, a22, a23, a33] = *a;
    m[0][0] = a11;
    m[0][1] = a12;
    m[1][0] = a12;
    m[1][1] = a22;
    if dim == 3 {
        m[0][2] = a13;
        m[2][0] = a13;
        m[1][2] = a23;
        m[2][1] = a23;
        m[2][2] = a33;
    }
    m
}

fn constant_data(config: &RunConfig) -> Option<(Matrix, Vector)> {
    match &config.family {
        FamilySpec::ConstantIdentity => Some((matrix_of(config.dim, &[1.0, 0.0, 0.0, 1.0, 0.0, 1.0]), [0.0; 3])),
        FamilySpec::ConstantMatrix { a, b } => Some((matrix_of(config.dim, a), *b)),
        _ => None,
    }
}

/// Coefficient field with the configured source attached.
pub fn build_coefficients(config: &RunConfig) -> Result<CoefficientField, RunError> {
    let dim = config.dim;
    let mut field = match &config.family {
        FamilySpec::ConstantIdentity => CoefficientField::constant_identity(dim)?,
        FamilySpec::ConstantMatrix { a, b } => CoefficientField::constant_matrix(dim, matrix_of(dim, a), *b)?,
        FamilySpec::Checkerboard {
            a_lo,
            a_hi,
            pattern,
            split_axis,
        } => {
            let pattern = match pattern {
                Pattern::Halves => CheckerPattern::Halves { axis: split_axis - 1 },
                Pattern::Checker => CheckerPattern::Checker,
            };
            CoefficientField::checkerboard(dim, *a_lo, *a_hi, pattern)?
        }
        FamilySpec::Layered { values } => CoefficientField::layered(dim, values.clone())?,
        FamilySpec::TrigDrift { alpha } => CoefficientField::trig_drift(dim, *alpha)?,
        FamilySpec::Table { path } => {
            let table = cordes_fpk::coefficients::CoefficientTable::from_path(path)?;
            if table.dim() != dim {
                return Err(cordes_fpk::Error::DimensionMismatch(format!(
                    "table is {}-dimensional, config says dim = {dim}",
                    table.dim()
                ))
                .into());
            }
            CoefficientField::from_table(table)?
        }
    };
    if let Some(c) = config.reaction {
        field = field.with_reaction(Arc::new(move |_| c));
    }
    let source = match &config.source {
        None => None,
        Some(SourceSpec::Zero { potential: true }) => Some(Source::Potential(Arc::new(|_| [0.0; 3]))),
        Some(SourceSpec::Zero { potential: false }) => Some(Source::Scalar(Arc::new(|_| 0.0))),
        Some(SourceSpec::Constant(v)) => {
            let v = *v;
            Some(Source::Scalar(Arc::new(move |_| v)))
        }
        Some(SourceSpec::Manufactured { potential }) => {
            let (a, b) = constant_data(config).ok_or_else(|| {
                RunError::MissingOracle(format!("family {}", config.family.name()))
            })?;
            let m = dirichlet_sine_manufactured(dim, a, b);
            if *potential {
                m.potential.map(Source::Potential)
            } else {
                m.source.map(Source::Scalar)
            }
        }
    };
    if let Some(s) = source {
        field = field.with_source(s);
    }
    Ok(field)
}

fn exact_density(config: &RunConfig, coeffs: &CoefficientField) -> Result<ScalarFn, RunError> {
    let missing = || RunError::MissingOracle(format!("family {} with setting {:?}", config.family.name(), config.setting));
    match config.setting {
        SettingKind::Periodic => match config.family {
            FamilySpec::TrigDrift { alpha } => Ok(trig_drift_oracle(config.dim, alpha).density),
            _ => scalar_diffusion_oracle(coeffs).map(|o| o.density).map_err(|_| missing()),
        },
        SettingKind::Dirichlet => match (&config.source, constant_data(config)) {
            (Some(SourceSpec::Manufactured { .. }), Some((a, b))) => Ok(dirichlet_sine_manufactured(config.dim, a, b).density),
            (Some(SourceSpec::Zero { .. }), _) => Ok(Arc::new(|_| 0.0)),
            _ => Err(missing()),
        },
    }
}

fn solve_config(config: &RunConfig) -> SolveConfig {
    SolveConfig {
        method: match config.solver.kind {
            SolverKind::Gmres => SolveMethod::IterativeKrylov,
            SolverKind::Direct => SolveMethod::DirectFactorization,
        },
        tolerance: config.solver.tol,
        max_iterations: config.solver.max_iter,
        restart: config.solver.restart,
        direct_fallback: true,
    }
}

fn setting_of(config: &RunConfig) -> Setting {
    match config.setting {
        SettingKind::Periodic => Setting::Periodic,
        SettingKind::Dirichlet => Setting::Dirichlet,
    }
}

fn opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_else(|| "none".into())
}

/// `key=value` lines.
pub fn format_report(r: &CordesReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "setting={}", r.setting.as_str());
    let _ = writeln!(s, "delta_star={}", r.delta_star);
    let _ = writeln!(s, "delta_threshold={}", r.delta_threshold);
    let _ = writeln!(s, "eta={}", r.eta);
    let _ = writeln!(s, "nearness_const={}", opt(r.nearness_const));
    let _ = writeln!(s, "max_cone_angle={}", r.max_cone_angle);
    let _ = writeln!(s, "passed={}", r.passed);
    let _ = writeln!(s, "delta_star_analytic={}", opt(r.analytic_delta_star));
    let _ = writeln!(s, "lambda_shift={}", opt(r.lambda_shift));
    let _ = writeln!(s, "ell_lower={}", r.ell_lower);
    let _ = writeln!(s, "ell_upper={}", r.ell_upper);
    let _ = writeln!(s, "sample_count={}", r.sample_count);
    s
}

fn format_study(rows: &[StudyRow]) -> String {
    let mut s = String::from("N,h,l2_error,rate\n");
    for r in rows {
        let rate = r.rate.map(|v| format!("{v:.16e}")).unwrap_or_default();
        let _ = writeln!(s, "{},{:.16e},{:.16e},{}", r.cells, r.h, r.l2_error, rate);
    }
    s
}

fn cells(config: &RunConfig) -> usize {
    config.cells.or_else(|| config.cells_list.as_ref().map(|l| l[0])).unwrap_or(2)
}

/// Runs `config` (with `command` overriding the config's own key) and
/// writes outputs into `out_dir`.
pub fn run(config: &RunConfig, command: Option<Command>, out_dir: &Path, options: &RunOptions) -> Result<RunSummary, RunError> {
    let command = command.or(config.command).ok_or(RunError::MissingCommand)?;
    fs::create_dir_all(out_dir).map_err(|source| RunError::Io {
        path: out_dir.to_path_buf(),
        source,
    })?;
    let coeffs = build_coefficients(config)?;
    let mut summary = RunSummary::default();
    let report_path = out_dir.join(&config.outputs.report);
    let n = cells(config);
    let setting = setting_of(config);
    let solve_cfg = solve_config(config);

    let fail_with_report = |summary: &mut RunSummary, report: Box<CordesReport>| -> RunError {
        match summary.write(report_path.clone(), &format_report(&report)) {
            Ok(()) => RunError::CordesFailed {
                report,
                path: report_path.clone(),
            },
            Err(e) => e,
        }
    };

    match command {
        Command::Check => {
            coeffs.check_alignment(n)?;
            let samples = Mesh::new(config.dim, n)?.quadrature_points(config.quad_order);
            let report = match config.lambda_shift {
                Some(l) => check_cordes_lower_order(&coeffs, l, &samples)?,
                None => check_cordes(&coeffs, setting, &samples)?,
            };
            if !report.passed {
                return Err(fail_with_report(&mut summary, Box::new(report)));
            }
            summary.lines.push(format!(
                "{} Cordes condition holds: delta_star = {}, threshold = {}",
                report.setting.as_str(),
                report.delta_star,
                report.delta_threshold
            ));
            summary.write(report_path.clone(), &format_report(&report))?;
        }
        Command::Solve | Command::Homogenize => {
            let result = match setting {
                Setting::Periodic => solve_periodic_fpk(&coeffs, n, config.quad_order, &solve_cfg),
                Setting::Dirichlet => solve_dirichlet_with_fine_grid(
                    &coeffs,
                    n,
                    config.quad_order,
                    &solve_cfg,
                    config.n_fine.unwrap_or(2 * n),
                ),
            };
            let sol = match result {
                Ok(s) => s,
                Err(cordes_fpk::Error::CordesFailed(report)) => return Err(fail_with_report(&mut summary, report)),
                Err(e) => return Err(e.into()),
            };
            summary.write(report_path.clone(), &format_report(&sol.diagnostics.cordes))?;
            let d = &sol.diagnostics;
            summary.lines.push(format!(
                "solved N={n}: {} iterations ({}{}), relative residual {:.3e}",
                d.solve.iterations,
                d.solve.method.as_str(),
                if d.solve.fell_back { ", after Krylov fallback" } else { "" },
                d.solve.relative_residual
            ));
            summary.lines.push(format!(
                "C_h = {}, integral of u_h = {}, u_h in [{}, {}]",
                sol.normalization, d.integral, d.min_density, d.max_density
            ));
            if d.min_density < 0.0 {
                summary.lines.push("warning: u_h takes negative values at some quadrature points".into());
            }
            if command == Command::Solve {
                let mut csv = String::new();
                let names = ["x1", "x2", "x3"];
                let _ = writeln!(csv, "{},u", names[..config.dim].join(","));
                for (x, u) in sol.node_samples()? {
                    for xi in x.iter().take(config.dim) {
                        let _ = write!(csv, "{xi:.16e},");
                    }
                    let _ = writeln!(csv, "{u:.16e}");
                }
                summary.write(out_dir.join(&config.outputs.solution), &csv)?;
                if options.dump_matrix {
                    let (kind, rhs) = match setting {
                        Setting::Periodic => (ConstraintKind::PeriodicZeroMean, RhsKind::PeriodicUnit),
                        Setting::Dirichlet => (ConstraintKind::TangentialTrace, RhsKind::DirichletPotential),
                    };
                    let space = build_space(Mesh::new(config.dim, n)?, kind);
                    let system = assemble(&space, &sol.coeffs, rhs, config.quad_order)?;
                    let mut buf = Vec::new();
                    system.matrix.write_coordinate(&mut buf).map_err(|source| RunError::Io {
                        path: out_dir.join("matrix.coo"),
                        source,
                    })?;
                    summary.write(out_dir.join("matrix.coo"), &String::from_utf8_lossy(&buf))?;
                }
            } else {
                let m = effective_matrix(&coeffs, &sol)?;
                let mut text = String::new();
                for row in m.iter().take(config.dim) {
                    let cols: Vec<String> = row[..config.dim].iter().map(|v| format!("{v:.16e}")).collect();
                    let _ = writeln!(text, "{}", cols.join(" "));
                }
                summary.lines.push(format!("effective matrix:\n{}", text.trim_end()));
                summary.write(out_dir.join(&config.outputs.effective), &text)?;
            }
        }
        Command::Study => {
            let exact = exact_density(config, &coeffs)?;
            let list = config.cells_list.clone().unwrap_or_else(|| vec![n]);
            let problem = StudyProblem {
                coeffs,
                setting,
                quad_order: config.quad_order,
                solve: solve_cfg,
                exact: Some(exact),
                error_order: config.quad_order.max(4),
            };
            let rows = match convergence_study(&problem, &list) {
                Ok(r) => r,
                Err(cordes_fpk::Error::CordesFailed(report)) => return Err(fail_with_report(&mut summary, report)),
                Err(e) => return Err(e.into()),
            };
            for r in &rows {
                summary.lines.push(match r.rate {
                    Some(rate) => format!("N={:>4}  L2 error {:.4e}  rate {:.3}", r.cells, r.l2_error, rate),
                    None => format!("N={:>4}  L2 error {:.4e}", r.cells, r.l2_error),
                });
            }
            summary.write(out_dir.join(&config.outputs.study), &format_study(&rows))?;
        }
    }
    Ok(summary)
}
