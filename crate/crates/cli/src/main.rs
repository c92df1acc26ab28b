use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, ValueEnum};
use cordes_fpk_cli::config::{FamilySpec, RunConfig};
use cordes_fpk_cli::{format_report, parse_config, run, Command, RunError, RunOptions};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Cmd {
    /// Verify the Cordes condition and write the report.
    Check,
    /// Solve and write the density at the mesh nodes.
    Solve,
    /// Convergence study against an exact solution.
    Study,
    /// Effective diffusion matrix of a periodic problem.
    Homogenize,
}

#[derive(Debug, Parser)]
#[command(name = "cordes-fpk", version, about = "Fokker-Planck-Kolmogorov solver for rough coefficients")]
struct Args {
    command: Cmd,
    #[arg(long)]
    config: PathBuf,
    /// Output directory.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Write the assembled matrix as `row col value` lines to matrix.coo.
    #[arg(long)]
    dump_matrix: bool,
}

fn load(path: &PathBuf) -> Result<RunConfig> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut config = parse_config(&text).with_context(|| format!("invalid config {}", path.display()))?;
    if let FamilySpec::Table { path: table } = &mut config.family {
        if table.is_relative() {
            if let Some(dir) = path.parent() {
                *table = dir.join(&*table);
            }
        }
    }
    Ok(config)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let command = match args.command {
        Cmd::Check => Command::Check,
        Cmd::Solve => Command::Solve,
        Cmd::Study => Command::Study,
        Cmd::Homogenize => Command::Homogenize,
    };
    let config = match load(&args.config) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    if let Some(c) = config.command {
        if c != command {
            eprintln!(
                "error: config says command = {} but `{}` was requested",
                c.as_str(),
                command.as_str()
            );
            return ExitCode::from(2);
        }
    }
    let options = RunOptions {
        dump_matrix: args.dump_matrix,
    };
    match run(&config, Some(command), &args.out, &options) {
        Ok(summary) => {
            for line in &summary.lines {
                println!("{line}");
            }
            for f in &summary.files {
                println!("wrote {}", f.display());
            }
            ExitCode::SUCCESS
        }
        Err(RunError::CordesFailed { report, path }) => {
            eprint!("{}", format_report(&report));
            eprintln!("error: Cordes condition not satisfied (report written to {})", path.display());
            ExitCode::FAILURE
        }
        Err(e) => {
            let e = anyhow::Error::new(e).context(format!("{} failed", command.as_str()));
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
