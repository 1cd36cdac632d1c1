use std::fmt::Write as _;
use std::time::Duration;

use jordan_core::hopf::Check;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub status: Status,
    /// Nonzero residuals behind a failure; 0 for pass or skip.
    pub residuals: usize,
    /// Recomputed value shown next to a flagged printed entry.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CheckRecord {
    pub fn new(id: impl Into<String>, holds: bool) -> Self {
        CheckRecord {
            id: id.into(),
            status: if holds { Status::Pass } else { Status::Fail },
            residuals: usize::from(!holds),
            note: None,
            elapsed_ms: None,
        }
    }

    pub fn with_residuals(id: impl Into<String>, residuals: usize) -> Self {
        CheckRecord { residuals, ..CheckRecord::new(id, residuals == 0) }
    }

    pub fn skipped(id: impl Into<String>, reason: impl Into<String>) -> Self {
        CheckRecord { status: Status::Skipped, residuals: 0, note: Some(reason.into()), ..CheckRecord::new(id, true) }
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

impl From<Check> for CheckRecord {
    fn from(c: Check) -> Self {
        CheckRecord::new(c.name, c.holds)
    }
}

/// Bindings the suite ran under; `sym` for a symbolic parameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub h: String,
    pub g: String,
    pub z: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
}

impl Default for Params {
    fn default() -> Self {
        Params { h: "sym".into(), g: "sym".into(), z: "sym".into(), family: None, order: None }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckRecord>,
    pub params: Params,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, params: Params) -> Self {
        SuiteReport { suite: suite.into(), checks: Vec::new(), params }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn push_group(&mut self, prefix: &str, checks: Vec<CheckRecord>, elapsed: Option<Duration>) {
        let n = checks.len().max(1) as u128;
        for mut c in checks {
            if !prefix.is_empty() {
                c.id = format!("{prefix}: {}", c.id);
            }
            c.elapsed_ms = elapsed.map(|d| (d.as_millis() / n) as u64);
            self.checks.push(c);
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Md,
}

pub fn emit_report(report: &SuiteReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Md => markdown(report),
    }
}

fn markdown(report: &SuiteReport) -> String {
    let p = &report.params;
    let mut out = format!("# {}\n\nh = {}, g = {}, z = {}", report.suite, p.h, p.g, p.z);
    if let Some(f) = &p.family {
        let _ = write!(out, ", family = {f}");
    }
    if let Some(n) = p.order {
        let _ = write!(out, ", order = {n}");
    }
    out.push_str("\n\n| check | status | residuals | note |\n|---|---|---|---|\n");
    for c in &report.checks {
        let cell = |s: &str| s.replace('|', "\\|");
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} |",
            cell(&c.id),
            c.status.as_str(),
            c.residuals,
            cell(c.note.as_deref().unwrap_or(""))
        );
    }
    let failed = report.failures().count();
    let _ = writeln!(out, "\n{} checks, {} failed", report.checks.len(), failed);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> SuiteReport {
        let mut r = SuiteReport::new("hopf", Params::default());
        r.push_group("gl", vec![CheckRecord::new("counit a", true), CheckRecord::new("x | y", false)], None);
        r
    }

    #[test]
    fn json_key_order() {
        let s = emit_report(&sample(), Format::Json);
        let (suite, checks, params) = (s.find("\"suite\"").unwrap(), s.find("\"checks\"").unwrap(), s.find("\"params\"").unwrap());
        assert!(suite < checks && checks < params);
        assert!(s.contains("\"status\": \"fail\""));
        assert!(!s.contains("elapsed_ms"));
    }

    #[test]
    fn markdown_rows() {
        let s = emit_report(&sample(), Format::Md);
        assert_eq!(s.lines().filter(|l| l.starts_with("| gl: ")).count(), 2);
        assert!(s.contains("x \\| y"));
        assert!(s.ends_with("2 checks, 1 failed\n"));
    }

    #[test]
    fn empty_suite() {
        let r = SuiteReport::new("empty", Params::default());
        assert!(r.passed());
        let v: serde_json::Value = serde_json::from_str(&emit_report(&r, Format::Json)).unwrap();
        assert_eq!(v["checks"], serde_json::json!([]));
        assert!(emit_report(&r, Format::Md).contains("0 checks, 0 failed"));
    }

    #[test]
    fn skipped_does_not_fail() {
        let mut r = SuiteReport::new("s", Params::default());
        r.push_group("", vec![CheckRecord::skipped("k", "z = 0")], None);
        assert!(r.passed());
        assert_eq!(r.checks[0].status, Status::Skipped);
    }

    proptest::proptest! {
        #[test]
        fn every_check_gets_one_row(ids in proptest::collection::vec("[a-z|]{1,6}", 0..8), mask in 0u8..) {
            let mut r = SuiteReport::new("p", Params::default());
            let checks = ids.iter().enumerate().map(|(i, id)| CheckRecord::new(id.clone(), mask >> (i % 8) & 1 == 0)).collect();
            r.push_group("g", checks, None);
            let md = emit_report(&r, Format::Md);
            proptest::prop_assert_eq!(md.lines().filter(|l| l.starts_with("| g: ")).count(), ids.len());
            let v: serde_json::Value = serde_json::from_str(&emit_report(&r, Format::Json)).unwrap();
            proptest::prop_assert_eq!(v["checks"].as_array().unwrap().len(), ids.len());
            proptest::prop_assert_eq!(r.passed(), r.failures().count() == 0);
        }
    }
}
