use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("line {line}: expected `key = value`, got `{text}`")]
    Syntax { line: usize, text: String },

    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },

    #[error("line {line}: duplicate key `{key}`")]
    DuplicateKey { line: usize, key: String },

    #[error("line {line}: malformed value for `{key}`: `{value}` ({reason})")]
    Malformed {
        line: usize,
        key: String,
        value: String,
        reason: String,
    },

    #[error("missing required key `{0}`")]
    MissingKey(&'static str),

    #[error("missing source: setting=dirichlet needs an `f` or `F` key")]
    MissingSource,

    #[error("N must be even for grid-aligned discontinuities (got N={0})")]
    OddCells(usize),

    #[error("N must be a multiple of the number of layers ({layers}) for grid-aligned discontinuities (got N={cells})")]
    MisalignedLayers { cells: usize, layers: usize },

    #[error("inconsistent configuration: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Check,
    Solve,
    Study,
    Homogenize,
}

impl Command {
    pub fn as_str(&self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Solve => "solve",
            Command::Study => "study",
            Command::Homogenize => "homogenize",
        }
    }
}

impl FromStr for Command {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "check" => Ok(Command::Check),
            "solve" => Ok(Command::Solve),
            "study" => Ok(Command::Study),
            "homogenize" => Ok(Command::Homogenize),
            _ => Err("expected check, solve, study or homogenize".into()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SettingKind {
    Periodic,
    Dirichlet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    Halves,
    Checker,
}

#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    ConstantIdentity,
    /// Upper triangle `a11 a12 a13 a22 a23 a33` and drift.
    ConstantMatrix { a: [f64; 6], b: [f64; 3] },
    Checkerboard {
        a_lo: f64,
        a_hi: f64,
        pattern: Pattern,
        /// 1-based axis for the halves pattern.
        split_axis: usize,
    },
    Layered { values: Vec<f64> },
    TrigDrift { alpha: f64 },
    Table { path: PathBuf },
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::ConstantIdentity => "constant_identity",
            FamilySpec::ConstantMatrix { .. } => "constant_matrix",
            FamilySpec::Checkerboard { .. } => "checkerboard",
            FamilySpec::Layered { .. } => "layered",
            FamilySpec::TrigDrift { .. } => "trig_drift",
            FamilySpec::Table { .. } => "table",
        }
    }

    /// Number of cells per direction the mesh must be a multiple of, if any.
    pub fn alignment(&self) -> Option<usize> {
        match self {
            FamilySpec::Checkerboard { .. } => Some(2),
            FamilySpec::Layered { values } if values.len() > 1 => Some(values.len()),
            _ => None,
        }
    }
}

/// Right-hand side of the Dirichlet problem.
#[derive(Debug, Clone, PartialEq)]
pub enum SourceSpec {
    /// `f` or `F` of the manufactured solution `prod sin(pi x_i)`.
    Manufactured { potential: bool },
    Zero { potential: bool },
    /// Constant scalar `f`.
    Constant(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverKind {
    Gmres,
    Direct,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverSettings {
    pub kind: SolverKind,
    pub tol: f64,
    pub max_iter: Option<usize>,
    pub restart: usize,
}

impl Default for SolverSettings {
    fn default() -> Self {
        SolverSettings {
            kind: SolverKind::Gmres,
            tol: 1e-10,
            max_iter: None,
            restart: 200,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outputs {
    pub report: String,
    pub solution: String,
    pub study: String,
    pub effective: String,
}

impl Default for Outputs {
    fn default() -> Self {
        Outputs {
            report: "cordes_report.txt".into(),
            solution: "solution.csv".into(),
            study: "study.csv".into(),
            effective: "effective_matrix.txt".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// Usually given on the command line instead.
    pub command: Option<Command>,
    pub dim: usize,
    pub setting: SettingKind,
    pub family: FamilySpec,
    pub cells: Option<usize>,
    pub cells_list: Option<Vec<usize>>,
    pub quad_order: usize,
    pub solver: SolverSettings,
    pub source: Option<SourceSpec>,
    pub n_fine: Option<usize>,
    pub reaction: Option<f64>,
    pub lambda_shift: Option<f64>,
    pub outputs: Outputs,
}

impl RunConfig {
    /// Checks the cross-key rules; `parse_config` calls this.
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.setting == SettingKind::Dirichlet && self.source.is_none() {
            return Err(ConfigError::MissingSource);
        }
        if self.setting == SettingKind::Periodic && self.source.is_some() {
            return Err(ConfigError::Inconsistent("`f`/`F` only apply to setting=dirichlet".into()));
        }
        if self.cells.is_none() && self.cells_list.is_none() {
            return Err(ConfigError::MissingKey("N"));
        }
        if self.command == Some(Command::Study) && self.cells_list.is_none() {
            return Err(ConfigError::MissingKey("N_list"));
        }
        if matches!(self.command, Some(Command::Check | Command::Solve | Command::Homogenize)) && self.cells.is_none() {
            return Err(ConfigError::MissingKey("N"));
        }
        if self.command == Some(Command::Homogenize) && self.setting != SettingKind::Periodic {
            return Err(ConfigError::Inconsistent("homogenize needs setting=periodic".into()));
        }
        if self.reaction.is_some() != self.lambda_shift.is_some() {
            return Err(ConfigError::Inconsistent("`reaction` and `lambda_shift` must be given together".into()));
        }
        if let Some(SourceSpec::Manufactured { .. }) = self.source {
            if !matches!(self.family, FamilySpec::ConstantIdentity | FamilySpec::ConstantMatrix { .. }) {
                return Err(ConfigError::Inconsistent(
                    "manufactured sources need family=constant_identity or constant_matrix".into(),
                ));
            }
        }
        if let FamilySpec::Checkerboard { split_axis, pattern: Pattern::Halves, .. } = self.family {
            if split_axis == 0 || split_axis > self.dim {
                return Err(ConfigError::Inconsistent(format!(
                    "split_axis = {split_axis} is outside 1..={}",
                    self.dim
                )));
            }
        }
        if let Some(m) = self.family.alignment() {
            let all = self.cells.iter().chain(self.cells_list.iter().flatten());
            for &n in all {
                if n % m != 0 {
                    return Err(if m == 2 {
                        ConfigError::OddCells(n)
                    } else {
                        ConfigError::MisalignedLayers { cells: n, layers: m }
                    });
                }
            }
        }
        Ok(())
    }
}

const KEYS: &[&str] = &[
    "command",
    "dim",
    "setting",
    "family",
    "N",
    "N_list",
    "quad_order",
    "solver",
    "tol",
    "max_iter",
    "restart",
    "a11",
    "a12",
    "a13",
    "a22",
    "a23",
    "a33",
    "b1",
    "b2",
    "b3",
    "a_lo",
    "a_hi",
    "pattern",
    "split_axis",
    "layers",
    "alpha",
    "table",
    "f",
    "F",
    "n_fine",
    "reaction",
    "lambda_shift",
    "report_file",
    "solution_file",
    "study_file",
    "effective_file",
];

struct Entry {
    line: usize,
    value: String,
    used: bool,
}

struct Entries(Vec<(String, Entry)>);

impl Entries {
    fn get(&mut self, key: &str) -> Option<(usize, String)> {
        self.0.iter_mut().find(|(k, _)| k == key).map(|(_, e)| {
            e.used = true;
            (e.line, e.value.clone())
        })
    }

    fn parse<T: FromStr>(&mut self, key: &str) -> Result<Option<T>, ConfigError>
    where
        T::Err: std::fmt::Display,
    {
        match self.get(key) {
            None => Ok(None),
            Some((line, value)) => value.parse::<T>().map(Some).map_err(|e| ConfigError::Malformed {
                line,
                key: key.into(),
                value,
                reason: e.to_string(),
            }),
        }
    }

    fn require<T: FromStr>(&mut self, key: &'static str) -> Result<T, ConfigError>
    where
        T::Err: std::fmt::Display,
    {
        self.parse(key)?.ok_or(ConfigError::MissingKey(key))
    }

    fn malformed(&self, key: &str, reason: &str) -> ConfigError {
        let (line, value) = self
            .0
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, e)| (e.line, e.value.clone()))
            .unwrap_or_default();
        ConfigError::Malformed {
            line,
            key: key.into(),
            value,
            reason: reason.into(),
        }
    }

    fn list<T: FromStr>(&mut self, key: &str) -> Result<Option<Vec<T>>, ConfigError>
    where
        T::Err: std::fmt::Display,
    {
        let Some((line, value)) = self.get(key) else { return Ok(None) };
        let items: Result<Vec<T>, _> = value
            .split(',')
            .map(|s| s.trim().parse::<T>())
            .collect();
        match items {
            Ok(v) if !v.is_empty() => Ok(Some(v)),
            Ok(_) => Err(self.malformed(key, "empty list")),
            Err(e) => Err(ConfigError::Malformed {
                line,
                key: key.into(),
                value,
                reason: e.to_string(),
            }),
        }
    }
}

fn parse_source(key: &str, line: usize, value: &str) -> Result<SourceSpec, ConfigError> {
    let potential = key == "F";
    match value {
        "manufactured" => Ok(SourceSpec::Manufactured { potential }),
        "zero" => Ok(SourceSpec::Zero { potential }),
        other if !potential => other.parse::<f64>().map(SourceSpec::Constant).map_err(|_| ConfigError::Malformed {
            line,
            key: key.into(),
            value: other.into(),
            reason: "expected manufactured, zero or a number".into(),
        }),
        other => Err(ConfigError::Malformed {
            line,
            key: key.into(),
            value: other.into(),
            reason: "expected manufactured or zero".into(),
        }),
    }
}

/// Parses `key = value` lines. `#` starts a comment; `[section]` lines are
/// ignored.
pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    let mut entries = Entries(Vec::new());
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() || (content.starts_with('[') && content.ends_with(']')) {
            continue;
        }
        let Some((k, v)) = content.split_once('=') else {
            return Err(ConfigError::Syntax {
                line,
                text: raw.trim().into(),
            });
        };
        let (k, v) = (k.trim(), v.trim());
        if !KEYS.contains(&k) {
            return Err(ConfigError::UnknownKey { line, key: k.into() });
        }
        if entries.0.iter().any(|(key, _)| key == k) {
            return Err(ConfigError::DuplicateKey { line, key: k.into() });
        }
        entries.0.push((
            k.into(),
            Entry {
                line,
                value: v.into(),
                used: false,
            },
        ));
    }

    let command = entries.parse::<Command>("command")?;
    let dim: usize = entries.require("dim")?;
    if dim != 2 && dim != 3 {
        return Err(entries.malformed("dim", "expected 2 or 3"));
    }
    let setting = match entries.get("setting") {
        None => SettingKind::Periodic,
        Some((_, v)) if v == "periodic" => SettingKind::Periodic,
        Some((_, v)) if v == "dirichlet" => SettingKind::Dirichlet,
        Some(_) => return Err(entries.malformed("setting", "expected periodic or dirichlet")),
    };
    let family_name: String = entries.require("family")?;
    let family = match family_name.as_str() {
        "constant_identity" => FamilySpec::ConstantIdentity,
        "constant_matrix" => {
            let mut a = [0.0; 6];
            let names = ["a11", "a12", "a13", "a22", "a23", "a33"];
            for (slot, name) in a.iter_mut().zip(names) {
                let in_dim = !(dim == 2 && name.contains('3'));
                let diagonal = name.as_bytes()[1] == name.as_bytes()[2];
                let v: Option<f64> = entries.parse(name)?;
                if !in_dim && v.is_some() {
                    return Err(entries.malformed(name, "entry outside the 2x2 block"));
                }
                *slot = match (v, diagonal && in_dim) {
                    (Some(x), _) => x,
                    (None, true) => return Err(ConfigError::MissingKey(leak(name))),
                    (None, false) => 0.0,
                };
            }
            let mut b = [0.0; 3];
            for (d, slot) in b.iter_mut().enumerate() {
                let name = ["b1", "b2", "b3"][d];
                let v: Option<f64> = entries.parse(name)?;
                if d >= dim && v.is_some() {
                    return Err(entries.malformed(name, "component outside the dimension"));
                }
                *slot = v.unwrap_or(0.0);
            }
            FamilySpec::ConstantMatrix { a, b }
        }
        "checkerboard" => {
            let a_lo = entries.require("a_lo")?;
            let a_hi = entries.require("a_hi")?;
            let pattern = match entries.get("pattern") {
                None => Pattern::Halves,
                Some((_, v)) if v == "halves" => Pattern::Halves,
                Some((_, v)) if v == "checker" => Pattern::Checker,
                Some(_) => return Err(entries.malformed("pattern", "expected halves or checker")),
            };
            let split_axis = entries.parse("split_axis")?.unwrap_or(1);
            FamilySpec::Checkerboard {
                a_lo,
                a_hi,
                pattern,
                split_axis,
            }
        }
        "layered" => FamilySpec::Layered {
            values: entries.list("layers")?.ok_or(ConfigError::MissingKey("layers"))?,
        },
        "trig_drift" => FamilySpec::TrigDrift {
            alpha: entries.require("alpha")?,
        },
        "table" => FamilySpec::Table {
            path: PathBuf::from(entries.require::<String>("table")?),
        },
        _ => {
            return Err(entries.malformed(
                "family",
                "expected constant_identity, constant_matrix, checkerboard, layered, trig_drift or table",
            ))
        }
    };

    let cells = entries.parse("N")?;
    let cells_list = entries.list("N_list")?;
    let quad_order = entries.parse("quad_order")?.unwrap_or(2);
    if quad_order == 0 {
        return Err(entries.malformed("quad_order", "must be at least 1"));
    }
    let mut solver = SolverSettings::default();
    match entries.get("solver") {
        None => {}
        Some((_, v)) if v == "gmres" => solver.kind = SolverKind::Gmres,
        Some((_, v)) if v == "direct" => solver.kind = SolverKind::Direct,
        Some(_) => return Err(entries.malformed("solver", "expected gmres or direct")),
    }
    if let Some(t) = entries.parse::<f64>("tol")? {
        if t.is_nan() || t <= 0.0 {
            return Err(entries.malformed("tol", "must be positive"));
        }
        solver.tol = t;
    }
    solver.max_iter = entries.parse("max_iter")?;
    if let Some(r) = entries.parse::<usize>("restart")? {
        if r == 0 {
            return Err(entries.malformed("restart", "must be positive"));
        }
        solver.restart = r;
    }

    let f = entries.get("f");
    let big_f = entries.get("F");
    let source = match (f, big_f) {
        (Some(_), Some(_)) => return Err(ConfigError::Inconsistent("give either `f` or `F`, not both".into())),
        (Some((line, v)), None) => Some(parse_source("f", line, &v)?),
        (None, Some((line, v))) => Some(parse_source("F", line, &v)?),
        (None, None) => None,
    };
    let n_fine = entries.parse("n_fine")?;
    let reaction = entries.parse("reaction")?;
    let lambda_shift = entries.parse("lambda_shift")?;
    let mut outputs = Outputs::default();
    for (key, slot) in [
        ("report_file", &mut outputs.report),
        ("solution_file", &mut outputs.solution),
        ("study_file", &mut outputs.study),
        ("effective_file", &mut outputs.effective),
    ] {
        if let Some((_, v)) = entries.get(key) {
            *slot = v;
        }
    }

    if let Some((k, e)) = entries.0.iter().find(|(_, e)| !e.used) {
        return Err(ConfigError::Inconsistent(format!(
            "line {}: key `{k}` does not apply to family={family_name}",
            e.line
        )));
    }

    let config = RunConfig {
        command,
        dim,
        setting,
        family,
        cells,
        cells_list,
        quad_order,
        solver,
        source,
        n_fine,
        reaction,
        lambda_shift,
        outputs,
    };
    config.validate()?;
    Ok(config)
}

fn leak(name: &str) -> &'static str {
    KEYS.iter().find(|k| **k == name).copied().unwrap_or("?")
}

fn join<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

/// Writes a config that [`parse_config`] reads back unchanged.
pub fn emit(config: &RunConfig) -> String {
    let mut s = String::new();
    let mut kv = |k: &str, v: String| {
        let _ = writeln!(s, "{k} = {v}");
    };
    if let Some(c) = config.command {
        kv("command", c.as_str().into());
    }
    kv("dim", config.dim.to_string());
    kv(
        "setting",
        match config.setting {
            SettingKind::Periodic => "periodic",
            SettingKind::Dirichlet => "dirichlet",
        }
        .into(),
    );
    kv("family", config.family.name().into());
    match &config.family {
        FamilySpec::ConstantIdentity => {}
        FamilySpec::ConstantMatrix { a, b } => {
            let names = ["a11", "a12", "a13", "a22", "a23", "a33"];
            for (name, v) in names.iter().zip(a) {
                if config.dim == 3 || !name.contains('3') {
                    kv(name, v.to_string());
                }
            }
            for (d, v) in b.iter().enumerate().take(config.dim) {
                kv(["b1", "b2", "b3"][d], v.to_string());
            }
        }
        FamilySpec::Checkerboard {
            a_lo,
            a_hi,
            pattern,
            split_axis,
        } => {
            kv("a_lo", a_lo.to_string());
            kv("a_hi", a_hi.to_string());
            kv(
                "pattern",
                match pattern {
                    Pattern::Halves => "halves",
                    Pattern::Checker => "checker",
                }
                .into(),
            );
            kv("split_axis", split_axis.to_string());
        }
        FamilySpec::Layered { values } => kv("layers", join(values)),
        FamilySpec::TrigDrift { alpha } => kv("alpha", alpha.to_string()),
        FamilySpec::Table { path } => kv("table", path.display().to_string()),
    }
    if let Some(n) = config.cells {
        kv("N", n.to_string());
    }
    if let Some(list) = &config.cells_list {
        kv("N_list", join(list));
    }
    kv("quad_order", config.quad_order.to_string());
    kv(
        "solver",
        match config.solver.kind {
            SolverKind::Gmres => "gmres",
            SolverKind::Direct => "direct",
        }
        .into(),
    );
    kv("tol", config.solver.tol.to_string());
    if let Some(m) = config.solver.max_iter {
        kv("max_iter", m.to_string());
    }
    kv("restart", config.solver.restart.to_string());
    match &config.source {
        None => {}
        Some(SourceSpec::Manufactured { potential }) => {
            kv(if *potential { "F" } else { "f" }, "manufactured".into())
        }
        Some(SourceSpec::Zero { potential }) => kv(if *potential { "F" } else { "f" }, "zero".into()),
        Some(SourceSpec::Constant(v)) => kv("f", v.to_string()),
    }
    if let Some(n) = config.n_fine {
        kv("n_fine", n.to_string());
    }
    if let Some(c) = config.reaction {
        kv("reaction", c.to_string());
    }
    if let Some(l) = config.lambda_shift {
        kv("lambda_shift", l.to_string());
    }
    kv("report_file", config.outputs.report.clone());
    kv("solution_file", config.outputs.solution.clone());
    kv("study_file", config.outputs.study.clone());
    kv("effective_file", config.outputs.effective.clone());
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_periodic_config() {
        let c = parse_config("dim = 2\nfamily = constant_identity\nN = 16\n").unwrap();
        assert_eq!(c.dim, 2);
        assert_eq!(c.cells, Some(16));
        assert_eq!(c.setting, SettingKind::Periodic);
        assert_eq!(c.quad_order, 2);
        assert_eq!(c.family, FamilySpec::ConstantIdentity);
    }

    #[test]
    fn comments_and_sections() {
        let text = "# header\n[problem]\ndim=3 # trailing\nfamily = trig_drift\nalpha = 0.1\n\nN = 12\n";
        let c = parse_config(text).unwrap();
        assert_eq!(c.family, FamilySpec::TrigDrift { alpha: 0.1 });
        assert_eq!(c.dim, 3);
    }

    #[test]
    fn dirichlet_without_source() {
        let e = parse_config("dim = 2\nsetting = dirichlet\nfamily = constant_identity\nN = 8\n").unwrap_err();
        assert_eq!(e, ConfigError::MissingSource);
        assert!(e.to_string().starts_with("missing source"));
    }

    #[test]
    fn odd_cells_for_checkerboard() {
        let e = parse_config("dim = 2\nfamily = checkerboard\na_lo = 1\na_hi = 2\nN = 15\n").unwrap_err();
        assert_eq!(e, ConfigError::OddCells(15));
        assert!(e.to_string().contains("N must be even for grid-aligned discontinuities"));
    }

    #[test]
    fn layers_need_multiple() {
        let e = parse_config("dim = 2\nfamily = layered\nlayers = 1, 2, 3\nN = 8\n").unwrap_err();
        assert_eq!(e, ConfigError::MisalignedLayers { cells: 8, layers: 3 });
        assert!(parse_config("dim = 2\nfamily = layered\nlayers = 1, 2, 3\nN = 9\n").is_ok());
    }

    #[test]
    fn unknown_key_reports_line() {
        let e = parse_config("dim = 2\nfamily = constant_identity\n\nsmoothness = 3\nN = 4\n").unwrap_err();
        assert_eq!(
            e,
            ConfigError::UnknownKey {
                line: 4,
                key: "smoothness".into()
            }
        );
    }

    #[test]
    fn distinct_diagnostics() {
        assert_eq!(parse_config("family = constant_identity\nN = 4\n").unwrap_err(), ConfigError::MissingKey("dim"));
        assert!(matches!(
            parse_config("dim = two\nfamily = constant_identity\nN = 4\n").unwrap_err(),
            ConfigError::Malformed { line: 1, .. }
        ));
        assert!(matches!(
            parse_config("dim = 2\nfamily = constant_identity\nN = 4\nalpha = 0.1\n").unwrap_err(),
            ConfigError::Inconsistent(_)
        ));
        assert!(matches!(
            parse_config("dim = 2\nfamily = constant_identity\nN = 4\nN = 5\n").unwrap_err(),
            ConfigError::DuplicateKey { line: 4, .. }
        ));
        assert!(matches!(
            parse_config("dim = 2\nfamily constant_identity\n").unwrap_err(),
            ConfigError::Syntax { line: 2, .. }
        ));
    }

    #[test]
    fn constant_matrix_keys() {
        let c = parse_config("dim = 2\nfamily = constant_matrix\na11 = 1\na12 = 0.1\na22 = 1\nb1 = 0.2\nN = 8\n").unwrap();
        assert_eq!(
            c.family,
            FamilySpec::ConstantMatrix {
                a: [1.0, 0.1, 0.0, 1.0, 0.0, 0.0],
                b: [0.2, 0.0, 0.0]
            }
        );
        assert!(parse_config("dim = 2\nfamily = constant_matrix\na11 = 1\na22 = 1\na33 = 1\nN = 8\n").is_err());
        assert_eq!(
            parse_config("dim = 2\nfamily = constant_matrix\na11 = 1\nN = 8\n").unwrap_err(),
            ConfigError::MissingKey("a22")
        );
    }

    #[test]
    fn study_needs_list() {
        let e = parse_config("command = study\ndim = 2\nfamily = constant_identity\nN = 8\n").unwrap_err();
        assert_eq!(e, ConfigError::MissingKey("N_list"));
    }
}
