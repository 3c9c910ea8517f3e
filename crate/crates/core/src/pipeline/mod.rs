//! The check registry, its runner and report emission.
//!
//! Every check has a stable id `step{n}.{case}.{sub}`. A run executes the
//! checks matching an id prefix, possibly in parallel, and collects one
//! [`CheckResult`] per check into a [`RunReport`] sorted by id.

pub mod checks;
pub mod config;

use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub use checks::{registry, CheckCase};
pub use config::{load_config, Config, ConfigFile};

use crate::modpoly::DegreeWitness;
use crate::{Error, Result};

pub const TOOLKIT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Jmatch,
    Lift,
    Orbit,
    Modpoly,
    Curve,
    Arithmetic,
    Literature,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Status {
    Pass,
    Fail,
    Indeterminate,
    Literature,
}

/// What a check function returns; the runner adds id, kind and timing.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub status: Status,
    pub expected: Value,
    pub computed: Value,
    pub note: Option<String>,
}

impl Outcome {
    /// Pass iff `computed == expected`.
    pub fn compare(expected: Value, computed: Value) -> Self {
        let ok = expected == computed;
        Outcome::judge(ok, expected, computed)
    }

    /// Pass iff `ok`; `expected` documents the criterion.
    pub fn judge(ok: bool, expected: Value, computed: Value) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        Outcome { status, expected, computed, note: None }
    }

    pub fn literature(citation: &str) -> Self {
        Outcome { status: Status::Literature, expected: Value::Null, computed: Value::Null, note: Some(citation.into()) }
    }

    pub fn indeterminate(reason: impl Into<String>) -> Self {
        Outcome { status: Status::Indeterminate, expected: Value::Null, computed: Value::Null, note: Some(reason.into()) }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub kind: Kind,
    pub status: Status,
    pub expected: Value,
    pub computed: Value,
    /// Expectation against computation, for failures.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diff: Option<String>,
    /// Citation text, for literature rows.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub citation: Option<String>,
    /// Why the check could not run, for indeterminate rows.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Only recorded when timings are requested, so reports stay reproducible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub indeterminate: usize,
    pub literature: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub toolkit_version: String,
    pub config_digest: String,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl RunReport {
    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Only checks whose id starts with this prefix.
    pub filter: Option<String>,
    /// Worker count; `None` uses the global pool.
    pub workers: Option<usize>,
    pub timings: bool,
}

/// Shared state for one run: the configuration and values several checks use.
pub struct Context<'a> {
    pub config: &'a Config,
    phi49: OnceLock<std::result::Result<DegreeWitness, String>>,
}

impl<'a> Context<'a> {
    pub fn new(config: &'a Config) -> Self {
        Context { config, phi49: OnceLock::new() }
    }
}

fn finish(case: &CheckCase, res: Result<Outcome>, wall_ms: Option<u64>) -> CheckResult {
    let o = res.unwrap_or_else(|e| Outcome {
        status: Status::Fail,
        expected: Value::Null,
        computed: Value::Null,
        note: Some(format!("error: {e}")),
    });
    let mut r = CheckResult {
        id: case.id.to_string(),
        kind: case.kind,
        status: o.status,
        expected: o.expected,
        computed: o.computed,
        diff: None,
        citation: None,
        reason: None,
        note: None,
        wall_ms,
    };
    match o.status {
        Status::Fail => {
            r.diff = Some(format!("expected {}, computed {}", r.expected, r.computed));
            r.note = o.note;
        }
        Status::Literature => r.citation = o.note,
        Status::Indeterminate => r.reason = o.note,
        Status::Pass => r.note = o.note,
    }
    r
}

fn run_one(case: &CheckCase, ctx: &Context) -> CheckResult {
    let start = Instant::now();
    let res = catch_unwind(AssertUnwindSafe(|| (case.run)(ctx))).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(Error::Integrity(format!("check panicked: {msg}")))
    });
    finish(case, res, None).with_wall(start.elapsed().as_millis() as u64)
}

impl CheckResult {
    fn with_wall(mut self, ms: u64) -> Self {
        self.wall_ms = Some(ms);
        self
    }
}

/// Runs every registered check matching the filter.
pub fn run_checks(config: &Config, opts: &RunOptions) -> Result<RunReport> {
    let cases: Vec<CheckCase> = registry().into_iter().filter(|c| opts.filter.as_deref().is_none_or(|f| c.id.starts_with(f))).collect();
    let ctx = Context::new(config);
    let exec = || -> Vec<CheckResult> { cases.par_iter().map(|c| run_one(c, &ctx)).collect() };
    let mut checks = match opts.workers {
        Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build().map_err(|e| Error::invalid(e.to_string()))?.install(exec),
        None => exec(),
    };
    if !opts.timings {
        for c in &mut checks {
            c.wall_ms = None;
        }
    }
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    let mut summary = Summary { total: checks.len(), ..Summary::default() };
    for c in &checks {
        match c.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Indeterminate => summary.indeterminate += 1,
            Status::Literature => summary.literature += 1,
        }
    }
    Ok(RunReport { toolkit_version: TOOLKIT_VERSION.to_string(), config_digest: config.digest.clone(), checks, summary })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(Error::invalid(format!("unknown format {s:?}"))),
        }
    }
}

fn status_label(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Indeterminate => "INDETERMINATE",
        Status::Literature => "LITERATURE",
    }
}

/// Serializes a report; JSON is pretty-printed with a trailing newline.
pub fn emit_report(report: &RunReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let width = report.checks.iter().map(|c| c.id.len()).max().unwrap_or(2).max(2);
            let mut s = String::new();
            writeln!(s, "isogate {}  config {}", report.toolkit_version, &report.config_digest[..12]).unwrap();
            writeln!(s, "{:width$}  {:13}  {:11}  DETAIL", "ID", "STATUS", "KIND").unwrap();
            for c in &report.checks {
                let detail = match c.status {
                    Status::Pass => c.computed.to_string(),
                    Status::Fail => c.diff.clone().unwrap_or_default(),
                    Status::Literature => c.citation.clone().unwrap_or_default(),
                    Status::Indeterminate => c.reason.clone().unwrap_or_default(),
                };
                let detail: String =
                    if detail.chars().count() > 120 { detail.chars().take(117).chain("...".chars()).collect() } else { detail };
                let kind = serde_json::to_value(c.kind).unwrap();
                writeln!(s, "{:width$}  {:13}  {:11}  {}", c.id, status_label(c.status), kind.as_str().unwrap(), detail).unwrap();
            }
            let m = &report.summary;
            writeln!(
                s,
                "total {}  pass {}  fail {}  indeterminate {}  literature {}",
                m.total, m.pass, m.fail, m.indeterminate, m.literature
            )
            .unwrap();
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn registry_ids_unique_and_cover_all_steps() {
        let reg = registry();
        let ids: BTreeSet<&str> = reg.iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), reg.len());
        let steps: BTreeSet<String> = reg.iter().map(|c| c.id.split('.').next().unwrap().to_string()).collect();
        let want: BTreeSet<String> = (1..=9).map(|n| format!("step{n}")).collect();
        assert_eq!(steps, want);
        for c in &reg {
            assert!(c.id.split('.').count() >= 3, "{}", c.id);
        }
    }

    #[test]
    fn empty_filter_match() {
        let r = run_checks(&Config::default(), &RunOptions { filter: Some("nope".into()), ..Default::default() }).unwrap();
        assert!(r.checks.is_empty());
        assert_eq!(r.summary, Summary::default());
        assert!(!r.has_failures());
    }

    #[test]
    fn failure_rows_carry_diff() {
        let case = CheckCase { id: "step0.x.y", kind: Kind::Arithmetic, run: |_| Ok(Outcome::compare(1.into(), 2.into())) };
        let r = finish(&case, (case.run)(&Context::new(&Config::default())), None);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.diff.as_deref(), Some("expected 1, computed 2"));
        let case = CheckCase { id: "step0.x.z", kind: Kind::Arithmetic, run: |_| panic!("boom") };
        let r = run_one(&case, &Context::new(&Config::default()));
        assert_eq!(r.status, Status::Fail);
        assert!(r.note.unwrap().contains("boom"));
    }

    #[test]
    fn literature_rows_never_pass() {
        let r = run_checks(&Config::default(), &RunOptions { filter: Some("step4".into()), ..Default::default() }).unwrap();
        let lit: Vec<_> = r.checks.iter().filter(|c| c.kind == Kind::Literature).collect();
        assert!(!lit.is_empty());
        assert!(lit.iter().all(|c| c.status == Status::Literature && c.citation.is_some()));
    }

    #[test]
    fn json_round_trip_and_text() {
        let r = run_checks(&Config::default(), &RunOptions { filter: Some("step7".into()), ..Default::default() }).unwrap();
        let s = emit_report(&r, Format::Json);
        let back: RunReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        let t = emit_report(&r, Format::Text);
        assert!(t.contains("step7.") && t.lines().last().unwrap().starts_with("total"));
    }
}
