//! Command reports. The structured form is JSON and mirrors the core
//! verification report one check record per entry.

use std::fmt::Write as _;

use leibniz2::report::{CheckRecord, VerifyReport};
use serde::{Deserialize, Serialize};

use crate::file::{InputError, Kind};

pub const REPORT_FORMAT: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub format: u32,
    pub command: String,
    pub input: String,
    pub kind: Kind,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
    pub notes: Vec<String>,
    /// The only nondeterministic field.
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: &str, input: &str, kind: Kind, checks: VerifyReport, notes: Vec<String>) -> Self {
        Report {
            format: REPORT_FORMAT,
            command: command.into(),
            input: input.into(),
            kind,
            passed: checks.passed(),
            checks: checks.checks,
            notes,
            elapsed_ms: 0,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} ({})\n", self.command, self.input, self.kind);
        let body = VerifyReport { checks: self.checks.clone() };
        out.push_str(&body.to_string());
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        let failing = self.checks.iter().filter(|c| !c.passed()).count();
        let verdict = if self.passed { "pass" } else { "FAIL" };
        let _ = writeln!(
            out,
            "result: {verdict} ({} checks, {failing} failing) in {} ms",
            self.checks.len(),
            self.elapsed_ms
        );
        out
    }
}

pub fn parse_report(text: &str) -> Result<Report, InputError> {
    serde_json::from_str(text).map_err(|e| InputError {
        position: Some((e.line(), e.column())),
        message: e.to_string(),
    })
}
