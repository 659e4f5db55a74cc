use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::config::{OutputFormat, SuiteConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Recorded for information; never affects the exit code.
    Diagnostic,
    /// The check could not be evaluated at this point (e.g. a branch guard).
    Skipped,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Diagnostic => "DIAG",
            Status::Skipped => "SKIP",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ResidualValue {
    /// Exact residual; `value` is its printed form.
    Exact {
        zero: bool,
        value: String,
    },
    Float {
        value: f64,
    },
    None,
}

impl ResidualValue {
    pub fn exact(value: impl ToString, zero: bool) -> Self {
        ResidualValue::Exact {
            zero,
            value: value.to_string(),
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            ResidualValue::Exact { .. } => "exact",
            ResidualValue::Float { .. } => "float",
            ResidualValue::None => "none",
        }
    }

    fn printed(&self) -> String {
        match self {
            ResidualValue::Exact { value, .. } => value.clone(),
            ResidualValue::Float { value } => format!("{value:.6e}"),
            ResidualValue::None => String::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub params: String,
    pub residual: ResidualValue,
    /// Gate the residual was compared against, if any.
    pub tolerance: Option<f64>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckRecord {
    pub fn exact(
        id: impl Into<String>,
        params: impl Into<String>,
        zero: bool,
        value: impl ToString,
    ) -> Self {
        CheckRecord {
            id: id.into(),
            params: params.into(),
            residual: ResidualValue::exact(value, zero),
            tolerance: None,
            status: if zero { Status::Pass } else { Status::Fail },
            note: None,
        }
    }

    /// Pass iff `holds`; used for boolean identities checked exactly.
    pub fn holds(id: impl Into<String>, params: impl Into<String>, holds: bool) -> Self {
        Self::exact(id, params, holds, if holds { "0" } else { "nonzero" })
    }

    /// Pass iff `value < tol` (and `value` is finite).
    pub fn below(id: impl Into<String>, params: impl Into<String>, value: f64, tol: f64) -> Self {
        CheckRecord {
            id: id.into(),
            params: params.into(),
            residual: ResidualValue::Float { value },
            tolerance: Some(tol),
            status: if value < tol {
                Status::Pass
            } else {
                Status::Fail
            },
            note: None,
        }
    }

    /// Pass iff `value <= tol`.
    pub fn at_most(id: impl Into<String>, params: impl Into<String>, value: f64, tol: f64) -> Self {
        let mut rec = Self::below(id, params, value, tol);
        rec.status = if value <= tol {
            Status::Pass
        } else {
            Status::Fail
        };
        rec
    }

    pub fn diagnostic(id: impl Into<String>, params: impl Into<String>, value: f64) -> Self {
        CheckRecord {
            id: id.into(),
            params: params.into(),
            residual: ResidualValue::Float { value },
            tolerance: None,
            status: Status::Diagnostic,
            note: None,
        }
    }

    pub fn skipped(
        id: impl Into<String>,
        params: impl Into<String>,
        why: impl Into<String>,
    ) -> Self {
        CheckRecord {
            id: id.into(),
            params: params.into(),
            residual: ResidualValue::None,
            tolerance: None,
            status: Status::Skipped,
            note: Some(why.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl SuiteReport {
    /// Checks are sorted by id so the output never depends on evaluation
    /// order.
    pub fn new(suite: impl Into<String>, mut checks: Vec<CheckRecord>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        SuiteReport {
            suite: suite.into(),
            checks,
            wall_time_ms: None,
        }
    }

    /// Every non-diagnostic check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }
}

/// Output of one `verify` invocation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub config: SuiteConfig,
    pub suites: Vec<SuiteReport>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Text => self.to_text(),
        }
    }

    fn to_csv(&self) -> String {
        let mut out =
            String::from("suite,id,params,status,residual_kind,residual,tolerance,note\n");
        for s in &self.suites {
            for c in &s.checks {
                let fields = [
                    s.suite.clone(),
                    c.id.clone(),
                    c.params.clone(),
                    c.status.label().to_lowercase(),
                    c.residual.kind().to_string(),
                    c.residual.printed(),
                    c.tolerance.map(|t| format!("{t:e}")).unwrap_or_default(),
                    c.note.clone().unwrap_or_default(),
                ];
                let row: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
                out.push_str(&row.join(","));
                out.push('\n');
            }
        }
        out
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            let _ = writeln!(
                out,
                "== {} : {} pass, {} fail, {} diagnostic, {} skipped",
                s.suite,
                s.count(Status::Pass),
                s.count(Status::Fail),
                s.count(Status::Diagnostic),
                s.count(Status::Skipped)
            );
            for c in &s.checks {
                let tol = c
                    .tolerance
                    .map(|t| format!(" (tol {t:e})"))
                    .unwrap_or_default();
                let note = c
                    .note
                    .as_ref()
                    .map(|n| format!("  # {n}"))
                    .unwrap_or_default();
                let _ = writeln!(
                    out,
                    "{} {} [{}] {} {}{}{}",
                    c.status.label(),
                    c.id,
                    c.params,
                    c.residual.kind(),
                    c.residual.printed(),
                    tol,
                    note
                );
            }
        }
        let _ = writeln!(
            out,
            "overall: {}",
            if self.passed() { "PASS" } else { "FAIL" }
        );
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> RunReport {
        RunReport {
            config: SuiteConfig::default(),
            suites: vec![SuiteReport::new(
                "demo",
                vec![
                    CheckRecord::below("b/second", "r=1, n=2", 3.5e-12, 1e-10),
                    CheckRecord::exact("a/first", "n=3", true, "0"),
                    CheckRecord::diagnostic("c/diag", "t=0.2", 0.49),
                    CheckRecord::skipped("d/skip", "t=0.5i", "branch"),
                ],
            )],
        }
    }

    #[test]
    fn checks_are_sorted() {
        let r = sample();
        let ids: Vec<&str> = r.suites[0].checks.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids, ["a/first", "b/second", "c/diag", "d/skip"]);
        assert!(r.passed());
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let text = r.render(OutputFormat::Json);
        let back: RunReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn csv_quotes_fields_with_commas() {
        let csv = sample().render(OutputFormat::Csv);
        assert!(csv.starts_with("suite,id,params,status"));
        assert!(csv.contains("\"r=1, n=2\""));
        assert_eq!(csv.lines().count(), 5);
    }

    #[test]
    fn diagnostics_do_not_fail() {
        let mut r = sample();
        r.suites[0]
            .checks
            .push(CheckRecord::diagnostic("z", "", 1e9));
        assert!(r.passed());
        r.suites[0]
            .checks
            .push(CheckRecord::below("y", "", 1.0, 0.5));
        assert!(!r.passed());
    }
}
