//! Command-line driver: `verify` runs named suites, `index` prints the pairing table.
//!
//! Settings come from defaults, then an optional `key = value` file given by
//! `--config`, then flags. Exit code 0 means every check passed, 1 means at
//! least one failed, 2 means the invocation itself was invalid.

pub mod report;
pub mod suites;

use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::glue::PSI_ORIENTATION;
use crate::kpair::PR_ORIENTATION;
use crate::opnum::ParamSet;
pub use report::{Record, Report, Status};
use suites::{SuiteContext, SUITES};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        <Format as ValueEnum>::from_str(s, false)
    }
}

/// A fully resolved run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub params: ParamSet,
    pub nmax: i64,
    pub suites: Vec<String>,
    pub format: Format,
    pub seed: u64,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            params: ParamSet::default(),
            nmax: 3,
            suites: suites::suite_names().into_iter().map(String::from).collect(),
            format: Format::Json,
            seed: 0,
            out: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), String> {
        self.params.validate().map_err(|e| e.to_string())?;
        if self.nmax < 0 {
            return Err(format!("nmax must be nonnegative, got {}", self.nmax));
        }
        if self.nmax as usize >= self.params.d {
            return Err(format!("nmax {} must be below d = {}", self.nmax, self.params.d));
        }
        for s in &self.suites {
            if suites::lookup(s).is_none() {
                return Err(format!("unknown suite `{s}`; known: {}", suites::suite_names().join(", ")));
            }
        }
        Ok(())
    }

    fn context(&self) -> SuiteContext {
        SuiteContext { params: self.params, nmax: self.nmax, seed: self.seed }
    }

    fn echo(&self, command: &str) -> report::ConfigEcho {
        report::ConfigEcho {
            command: command.to_string(),
            q: self.params.q,
            p: self.params.p,
            s: self.params.s,
            d: self.params.d,
            w: self.params.w,
            tol: self.params.tol,
            nmax: self.nmax,
            suites: self.suites.clone(),
            seed: self.seed,
        }
    }

    /// Applies one `key = value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        fn num<T: FromStr>(key: &str, v: &str) -> Result<T, String> {
            v.parse().map_err(|_| format!("invalid value `{v}` for `{key}`"))
        }
        match key {
            "q" => self.params.q = num(key, value)?,
            "p" => self.params.p = num(key, value)?,
            "s" => self.params.s = num(key, value)?,
            "d" => self.params.d = num(key, value)?,
            "w" => self.params.w = num(key, value)?,
            "tol" => self.params.tol = num(key, value)?,
            "nmax" => self.nmax = num(key, value)?,
            "seed" => self.seed = num(key, value)?,
            "format" => self.format = value.parse()?,
            "out" => self.out = Some(PathBuf::from(value)),
            "suite" | "suites" => {
                self.suites = value.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
            }
            _ => return Err(format!("unknown key `{key}`")),
        }
        Ok(())
    }

    /// Reads `key = value` lines; `#` starts a comment.
    pub fn apply_file(&mut self, path: &Path) -> Result<(), String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| format!("{}:{}: expected `key = value`", path.display(), i + 1))?;
            self.set(k.trim(), v.trim()).map_err(|e| format!("{}:{}: {e}", path.display(), i + 1))?;
        }
        Ok(())
    }
}

#[derive(Debug, Parser)]
#[command(name = "qhopf", version, about = "Checks for quantum line bundles over glued quantum spheres")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run verification suites.
    Verify(Common),
    /// Pairings of the chi_N projections with both Fredholm modules for |N| <= nmax.
    Index(Common),
}

#[derive(Debug, Args)]
struct Common {
    #[arg(long)]
    q: Option<f64>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    s: Option<f64>,
    /// Truncation dimension.
    #[arg(long)]
    d: Option<usize>,
    /// Window radius for the circle representations.
    #[arg(long)]
    w: Option<usize>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    nmax: Option<i64>,
    /// Comma-separated suite names.
    #[arg(long, value_delimiter = ',')]
    suite: Option<Vec<String>>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    /// File of `key = value` defaults, overridden by flags.
    #[arg(long)]
    config: Option<PathBuf>,
}

impl Common {
    fn resolve(&self) -> Result<RunConfig, String> {
        let mut cfg = RunConfig::default();
        if let Some(path) = &self.config {
            cfg.apply_file(path)?;
        }
        let p = &mut cfg.params;
        p.q = self.q.unwrap_or(p.q);
        p.p = self.p.unwrap_or(p.p);
        p.s = self.s.unwrap_or(p.s);
        p.d = self.d.unwrap_or(p.d);
        p.w = self.w.unwrap_or(p.w);
        p.tol = self.tol.unwrap_or(p.tol);
        cfg.nmax = self.nmax.unwrap_or(cfg.nmax);
        cfg.seed = self.seed.unwrap_or(cfg.seed);
        cfg.format = self.format.unwrap_or(cfg.format);
        if let Some(out) = &self.out {
            cfg.out = Some(out.clone());
        }
        if let Some(s) = &self.suite {
            cfg.suites = s.iter().map(|x| x.trim().to_string()).collect();
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Runs the suites concurrently and assembles records in registry order.
pub fn run_suites(cfg: &RunConfig) -> Vec<Record> {
    let ctx = cfg.context();
    let selected: Vec<_> = SUITES.iter().filter(|(name, _)| cfg.suites.iter().any(|s| s == name)).collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = selected.iter().map(|(_, f)| scope.spawn(move || f(&ctx))).collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("suite panicked"))
            .collect()
    })
}

fn conventions() -> Vec<String> {
    vec![PSI_ORIENTATION.to_string(), PR_ORIENTATION.to_string()]
}

pub fn verify_report(cfg: &RunConfig) -> Report {
    Report::new(cfg.echo("verify"), conventions(), run_suites(cfg))
}

pub fn index_report(cfg: &RunConfig) -> Report {
    let mut echo = cfg.echo("index");
    echo.suites = vec!["index".into()];
    let records = suites::chi_index_records("index", cfg.nmax, &cfg.params);
    Report::new(echo, conventions(), records)
}

/// Parses `argv` (including the program name), runs, and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = e.print();
            return code;
        }
    };
    let (common, is_index) = match &cli.command {
        Command::Verify(c) => (c, false),
        Command::Index(c) => (c, true),
    };
    let cfg = match common.resolve() {
        Ok(cfg) => cfg,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
    };
    let report = if is_index { index_report(&cfg) } else { verify_report(&cfg) };
    let body = match cfg.format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    };
    match &cfg.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => print!("{body}"),
    }
    if report.all_pass() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_usage_error() {
        assert_eq!(run(["qhopf", "verify", "--suite", "nope"]), EXIT_USAGE);
    }

    #[test]
    fn out_of_range_parameter_is_usage_error() {
        assert_eq!(run(["qhopf", "verify", "--suite", "disc", "--q", "1.5"]), EXIT_USAGE);
        assert_eq!(run(["qhopf", "verify", "--suite", "disc", "--d", "2"]), EXIT_USAGE);
    }

    #[test]
    fn flags_override_config_file() {
        let dir = std::env::temp_dir().join(format!("qhopf-cfg-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("run.cfg");
        std::fs::write(&path, "# defaults\nq = 0.3\np = 0.7\nsuite = disc, hopf\n").unwrap();
        let cli = Cli::try_parse_from(["qhopf", "verify", "--config", path.to_str().unwrap(), "--q", "0.6"]).unwrap();
        let Command::Verify(c) = cli.command else { panic!() };
        let cfg = c.resolve().unwrap();
        assert_eq!(cfg.params.q, 0.6);
        assert_eq!(cfg.params.p, 0.7);
        assert_eq!(cfg.suites, vec!["disc", "hopf"]);
    }

    #[test]
    fn bad_config_key_is_rejected() {
        let mut cfg = RunConfig::default();
        assert!(cfg.set("colour", "red").is_err());
        assert!(cfg.set("d", "many").is_err());
    }
}
