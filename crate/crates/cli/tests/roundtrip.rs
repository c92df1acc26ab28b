use std::path::PathBuf;

use cordes_fpk_cli::config::{
    Command, FamilySpec, Outputs, Pattern, SettingKind, SolverKind, SolverSettings, SourceSpec,
};
use cordes_fpk_cli::{emit, parse_config, RunConfig};
use proptest::prelude::*;

fn finite() -> impl Strategy<Value = f64> {
    prop_oneof![-1e6f64..1e6, 1e-12f64..1e-3, Just(0.0), Just(1.0)]
}

fn positive() -> impl Strategy<Value = f64> {
    prop_oneof![1e-6f64..1e6, Just(1.0), Just(2.0)]
}

fn family(dim: usize) -> impl Strategy<Value = FamilySpec> {
    prop_oneof![
        Just(FamilySpec::ConstantIdentity),
        (prop::array::uniform6(finite()), prop::array::uniform3(finite())).prop_map(move |(mut a, mut b)| {
            if dim == 2 {
                a[2] = 0.0;
                a[4] = 0.0;
                a[5] = 0.0;
                b[2] = 0.0;
            }
            FamilySpec::ConstantMatrix { a, b }
        }),
        (positive(), positive(), any::<bool>(), 1..=dim).prop_map(|(a_lo, a_hi, halves, split_axis)| {
            FamilySpec::Checkerboard {
                a_lo,
                a_hi,
                pattern: if halves { Pattern::Halves } else { Pattern::Checker },
                split_axis,
            }
        }),
        Just(FamilySpec::Layered { values: vec![1.0, 2.0] }),
        finite().prop_map(|alpha| FamilySpec::TrigDrift { alpha }),
        "[a-z]{1,8}\\.csv".prop_map(|p| FamilySpec::Table { path: PathBuf::from(p) }),
    ]
}

fn config() -> impl Strategy<Value = RunConfig> {
    (2usize..=3)
        .prop_flat_map(|dim| {
            (
                Just(dim),
                family(dim),
                prop::option::of(prop_oneof![Just(Command::Check), Just(Command::Solve), Just(Command::Homogenize)]),
                (1usize..=40).prop_map(|k| 2 * k),
                prop::option::of(prop::collection::vec((1usize..=40).prop_map(|k| 2 * k), 1..5)),
                1usize..=6,
                (any::<bool>(), positive(), prop::option::of(1usize..10_000), 1usize..500),
                prop::option::of((prop::option::of(2usize..200), any::<bool>(), positive())),
                prop::option::of(positive()),
            )
        })
        .prop_map(|(dim, family, command, n, list, quad, solver, dirichlet, reaction)| {
            let (direct, tol, max_iter, restart) = solver;
            let (setting, source, n_fine) = match dirichlet {
                None => (SettingKind::Periodic, None, None),
                Some((n_fine, potential, value)) => {
                    let manufactured_ok = matches!(family, FamilySpec::ConstantIdentity | FamilySpec::ConstantMatrix { .. });
                    let source = if manufactured_ok {
                        SourceSpec::Manufactured { potential }
                    } else if potential {
                        SourceSpec::Zero { potential }
                    } else {
                        SourceSpec::Constant(value)
                    };
                    (SettingKind::Dirichlet, Some(source), n_fine)
                }
            };
            let command = if setting == SettingKind::Dirichlet && command == Some(Command::Homogenize) {
                Some(Command::Solve)
            } else {
                command
            };
            RunConfig {
                command,
                dim,
                setting,
                family,
                cells: Some(n),
                cells_list: list,
                quad_order: quad,
                solver: SolverSettings {
                    kind: if direct { SolverKind::Direct } else { SolverKind::Gmres },
                    tol,
                    max_iter,
                    restart,
                },
                source,
                n_fine,
                reaction,
                lambda_shift: reaction.map(|r| r * 0.5 + 0.1),
                outputs: Outputs::default(),
            }
        })
}

proptest! {
    #[test]
    fn parse_emit_round_trip(c in config()) {
        prop_assert!(c.validate().is_ok(), "{:?}", c.validate());
        let text = emit(&c);
        let back = parse_config(&text);
        prop_assert_eq!(back, Ok(c), "{}", text);
    }
}
