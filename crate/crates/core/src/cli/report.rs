use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::report::{VerificationReport, Violation};

use super::document::Names;

/// Output of one command, rendered as text or as a JSON document.
#[derive(Clone, Debug)]
pub struct Report {
    command: String,
    text: Vec<String>,
    json: Map<String, Value>,
    ok: bool,
}

fn grading_label(v: &Violation, names: &Names) -> String {
    let parts: Vec<&str> = v.grading.iter().map(|g| names.element(*g)).collect();
    match parts.len() {
        0 => String::new(),
        1 => format!("α={}", parts[0]),
        2 => format!("(α,β)=({})", parts.join(", ")),
        _ => format!("(α,β,γ)=({})", parts.join(", ")),
    }
}

fn basis_label(v: &Violation, names: &Names) -> Option<String> {
    if v.basis.is_empty() {
        return None;
    }
    Some(match v.domain {
        Some(d) => v.basis.iter().map(|&i| names.basis(d, i)).collect::<Vec<_>>().join("⊗"),
        None => format!("({})", v.basis.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(", ")),
    })
}

/// `check, α=1, basis u: lhs … vs rhs …`
pub fn witness(v: &Violation, names: &Names) -> String {
    let mut out = v.check.clone();
    let grading = grading_label(v, names);
    if !grading.is_empty() {
        out.push_str(", ");
        out.push_str(&grading);
    }
    if let Some(b) = basis_label(v, names) {
        out.push_str(", basis ");
        out.push_str(&b);
    }
    if !(v.lhs.is_empty() && v.rhs.is_empty()) {
        let _ = write!(out, ": lhs {} vs rhs {}", v.lhs, v.rhs);
    }
    out
}

fn witness_json(v: &Violation, names: &Names) -> Value {
    json!({
        "grading": v.grading.iter().map(|g| names.element(*g)).collect::<Vec<_>>(),
        "basis": basis_label(v, names),
        "lhs": v.lhs.to_string(),
        "rhs": v.rhs.to_string(),
    })
}

impl Report {
    pub fn new(command: impl Into<String>) -> Report {
        let command = command.into();
        let mut json = Map::new();
        json.insert("command".into(), Value::String(command.clone()));
        Report { command, text: Vec::new(), json, ok: true }
    }

    pub fn is_ok(&self) -> bool {
        self.ok
    }

    pub fn fail(&mut self) {
        self.ok = false;
    }

    /// A `key: value` line and the matching JSON member.
    pub fn line(&mut self, key: &str, text: impl std::fmt::Display, value: Value) {
        self.text.push(format!("{key}: {text}"));
        self.json.insert(key.into(), value);
    }

    /// Free text under a heading; JSON gets the lines as an array.
    pub fn block(&mut self, key: &str, lines: Vec<String>, value: Value) {
        self.text.push(format!("{key}:"));
        self.text.extend(lines.into_iter().map(|l| format!("  {l}")));
        self.json.insert(key.into(), value);
    }

    /// Every check of `report` with its status and witnesses.
    pub fn checks(&mut self, key: &str, report: &VerificationReport, names: &Names) {
        let mut lines = Vec::new();
        let mut entries = Vec::new();
        for c in report.checks() {
            let passed = report.passed(c);
            lines.push(format!("[{}] {c}", if passed { "pass" } else { "FAIL" }));
            let mut violations: Vec<&Violation> = report.violations_of(c).collect();
            violations.dedup_by(|a, b| witness(a, names) == witness(b, names));
            lines.extend(violations.iter().map(|v| format!("    {}", witness(v, names))));
            entries.push(json!({
                "check": c,
                "status": if passed { "pass" } else { "fail" },
                "violations": violations.iter().map(|v| witness_json(v, names)).collect::<Vec<_>>(),
            }));
        }
        if !report.is_ok() {
            self.ok = false;
        }
        self.block(key, lines, Value::Array(entries));
    }

    pub fn text(&self) -> String {
        let mut out = format!("hpc {}\n", self.command);
        for l in &self.text {
            out.push_str(l);
            out.push('\n');
        }
        out.push_str(if self.ok { "result: ok\n" } else { "result: violations found\n" });
        out
    }

    pub fn json(&self) -> String {
        let mut map = self.json.clone();
        map.insert("ok".into(), Value::Bool(self.ok));
        let mut out = serde_json::to_string_pretty(&Value::Object(map)).expect("reports serialize");
        out.push('\n');
        out
    }
}
