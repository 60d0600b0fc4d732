//! Report records and their JSON / CSV serializations.

use serde::Serialize;

/// Bumped whenever a field is added, removed or renamed.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Informational; does not affect the exit code.
    Warn,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Warn => "warn",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub suite: String,
    pub check: String,
    pub status: Status,
    pub value: String,
    pub expected: String,
    pub residual: Option<f64>,
    /// The identity or construction the check is about, written out.
    pub anchor: String,
}

impl Record {
    pub fn new(suite: &str, check: impl Into<String>, anchor: impl Into<String>) -> Self {
        Self {
            suite: suite.to_string(),
            check: check.into(),
            status: Status::Pass,
            value: String::new(),
            expected: String::new(),
            residual: None,
            anchor: anchor.into(),
        }
    }

    /// Passes when `residual < tol`.
    pub fn residual(mut self, residual: f64, tol: f64) -> Self {
        self.value = fmt_f64(residual);
        self.expected = format!("< {}", fmt_f64(tol));
        self.residual = Some(residual);
        self.status = if residual < tol { Status::Pass } else { Status::Fail };
        self
    }

    /// Exact comparison of two displayed values.
    pub fn equal(mut self, value: impl Into<String>, expected: impl Into<String>) -> Self {
        self.value = value.into();
        self.expected = expected.into();
        self.status = if self.value == self.expected { Status::Pass } else { Status::Fail };
        self
    }

    pub fn holds(mut self, ok: bool) -> Self {
        self.value = ok.to_string();
        self.expected = "true".into();
        self.status = if ok { Status::Pass } else { Status::Fail };
        self
    }

    pub fn with_status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }

    pub fn with_value(mut self, value: impl Into<String>, expected: impl Into<String>) -> Self {
        self.value = value.into();
        self.expected = expected.into();
        self
    }

    pub fn with_residual(mut self, r: f64) -> Self {
        self.residual = Some(r);
        self
    }

    /// A failure caused by an error while computing the check.
    pub fn error(suite: &str, check: impl Into<String>, anchor: impl Into<String>, err: &crate::Error) -> Self {
        Self::new(suite, check, anchor)
            .with_value(format!("error: {err}"), "")
            .with_status(Status::Fail)
    }
}

/// Fixed-width scientific notation, so reports are byte-stable.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.6e}")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConfigEcho {
    pub command: String,
    pub q: f64,
    pub p: f64,
    pub s: f64,
    pub d: usize,
    pub w: usize,
    pub tol: f64,
    pub nmax: i64,
    pub suites: Vec<String>,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub warn: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub schema_version: u32,
    pub config: ConfigEcho,
    /// Sign conventions the pairing values depend on.
    pub conventions: Vec<String>,
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: ConfigEcho, conventions: Vec<String>, records: Vec<Record>) -> Self {
        let mut summary = Summary::default();
        for r in &records {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Warn => summary.warn += 1,
            }
        }
        Self {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            schema_version: SCHEMA_VERSION,
            config,
            conventions,
            records,
            summary,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report is serializable");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["suite", "check", "status", "value", "expected", "residual", "anchor"])
            .expect("in-memory write");
        for r in &self.records {
            let residual = r.residual.map(fmt_f64).unwrap_or_default();
            w.write_record([
                r.suite.as_str(),
                r.check.as_str(),
                r.status.as_str(),
                r.value.as_str(),
                r.expected.as_str(),
                residual.as_str(),
                r.anchor.as_str(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
    }
}
