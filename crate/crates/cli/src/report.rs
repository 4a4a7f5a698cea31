use std::fmt::Write as _;

use hgauge::checks::{CheckOutcome, Residual, Severity, Status};
use hgauge::genform::DerivativeContext;
use hgauge::wire::WireAlgebraForm;
use hgauge::Q;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedForm {
    pub name: String,
    pub form: WireAlgebraForm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionResult {
    pub kind: String,
    pub value: Q,
    #[serde(default)]
    pub residuals: Vec<Residual>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub reported: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub scenario: String,
    pub model: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub context: Option<DerivativeContext>,
    pub seed: u64,
    #[serde(default)]
    pub checks: Vec<CheckOutcome>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub forms: Vec<NamedForm>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub actions: Vec<ActionResult>,
    pub summary: Summary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl Report {
    pub fn tally(&mut self) {
        let count = |s: Status| self.checks.iter().filter(|c| c.status == s).count();
        self.summary = Summary {
            pass: count(Status::Pass),
            fail: count(Status::Fail),
            reported: count(Status::Reported),
            skipped: count(Status::Skipped),
        };
    }

    /// 1 when a must-pass check failed, 0 otherwise.
    pub fn exit_code(&self) -> i32 {
        let failed = self
            .checks
            .iter()
            .any(|c| c.severity == Severity::MustPass && c.status == Status::Fail);
        i32::from(failed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize") + "\n"
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let ctx = match &self.context {
            Some(c) if c.n_type == 1 => format!(" | k = {}", c.k),
            Some(c) if c.n_type == 2 => format!(" | k1 = {}, k2 = {}", c.k1, c.k2),
            _ => String::new(),
        };
        let _ = writeln!(
            out,
            "{} {}: model {} | dim {}{ctx} | seed {}",
            self.command, self.scenario, self.model, self.dim, self.seed
        );
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Reported => "REPORTED",
                Status::Skipped => "SKIPPED",
            };
            let severity = match c.severity {
                Severity::MustPass => "must-pass",
                Severity::Reported => "reported",
                Severity::Informational => "informational",
            };
            let _ = writeln!(out, "  {status:<9}{} ({severity})", c.name);
            for r in &c.residuals {
                match &r.leading {
                    Some(l) => {
                        let _ = writeln!(out, "      {}: nonzero {}/{}, leading {l}", r.label, r.nonzero, r.instances);
                    }
                    None => {
                        let _ = writeln!(out, "      {}: zero on {}", r.label, r.instances);
                    }
                }
            }
            for v in &c.values {
                let _ = writeln!(out, "      {} = {}", v.label, v.value);
            }
            if let Some(n) = &c.note {
                let _ = writeln!(out, "      note: {n}");
            }
        }
        for f in &self.forms {
            let terms: usize = f.form.components.values().flatten().map(|c| c.poly.len()).sum();
            let labels: Vec<&str> = f.form.components.keys().map(String::as_str).collect();
            let _ = writeln!(
                out,
                "  form {} (degree {}): {terms} terms in [{}]",
                f.name,
                f.form.degree,
                labels.join(", ")
            );
        }
        for a in &self.actions {
            let _ = writeln!(out, "  action {} = {}", a.kind, a.value);
            for r in &a.residuals {
                let state = if r.nonzero == 0 { "zero".to_string() } else { format!("nonzero ({})", r.leading.as_deref().unwrap_or("?")) };
                let _ = writeln!(out, "      {}: {state}", r.label);
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "summary: {} pass, {} fail, {} reported, {} skipped",
            s.pass, s.fail, s.reported, s.skipped
        );
        out
    }
}
