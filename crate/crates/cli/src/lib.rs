//! Config parsing and command execution for the `cordes-fpk` binary.

pub mod config;
pub mod run;

pub use config::{emit, parse_config, Command, ConfigError, RunConfig};
pub use run::{format_report, run, RunError, RunOptions, RunSummary};
