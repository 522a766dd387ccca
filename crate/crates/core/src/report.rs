//! Verification reports: one record per checked identity, each carrying the
//! argument tuples that witness a failure together with the residual.

use serde::{Deserialize, Serialize};

use crate::algebra::Coords;

/// Witnesses kept per check. The failure count is always exact.
pub const MAX_WITNESSES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", content = "value", rename_all = "kebab-case")]
pub enum Residual {
    /// Coordinates in the target basis of a finite-dimensional space.
    Coords(Coords),
    /// Rendered polynomial form, multivector, section or function.
    Symbolic(String),
    /// Failures without a vector residual (rank deficiency, gate failures).
    Message(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Human-readable labels of the arguments, e.g. `["e1", "e1", "e1"]`.
    pub tuple: Vec<String>,
    /// Positions of the arguments in their families (0-based).
    pub indices: Vec<usize>,
    pub residual: Residual,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    /// Short condition name, e.g. `(d)` or `invariant-inner`.
    pub name: String,
    /// The identity being checked, in words.
    pub label: String,
    pub evaluated: usize,
    pub failures: usize,
    pub witnesses: Vec<Witness>,
}

impl CheckRecord {
    pub fn new(name: impl Into<String>, label: impl Into<String>) -> Self {
        CheckRecord {
            name: name.into(),
            label: label.into(),
            evaluated: 0,
            failures: 0,
            witnesses: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Records a batch of evaluated tuples and the failing ones among them.
    pub fn absorb(&mut self, evaluated: usize, failures: Vec<Witness>) {
        self.evaluated += evaluated;
        self.failures += failures.len();
        let room = MAX_WITNESSES.saturating_sub(self.witnesses.len());
        self.witnesses.extend(failures.into_iter().take(room));
    }

    pub fn fail_with(&mut self, witness: Witness) {
        self.absorb(1, vec![witness]);
    }

    pub fn pass_one(&mut self) {
        self.evaluated += 1;
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckRecord>,
}

impl VerifyReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckRecord::passed)
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.checks.push(record);
    }

    pub fn extend(&mut self, other: VerifyReport) {
        self.checks.extend(other.checks);
    }

    /// Prefixes every check name, used when one report aggregates several
    /// verifiers.
    pub fn prefixed(mut self, prefix: &str) -> Self {
        for check in &mut self.checks {
            check.name = format!("{prefix}{}", check.name);
        }
        self
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failing(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn failing_names(&self) -> Vec<&str> {
        self.failing().map(|c| c.name.as_str()).collect()
    }
}

impl std::fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for check in &self.checks {
            let status = if check.passed() { "pass" } else { "FAIL" };
            writeln!(
                f,
                "{status} {:<24} {} [{} evaluated, {} failing]",
                check.name, check.label, check.evaluated, check.failures
            )?;
            for w in &check.witnesses {
                writeln!(f, "       at ({}): {}", w.tuple.join(", "), w.residual)?;
            }
        }
        Ok(())
    }
}

impl std::fmt::Display for Residual {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Residual::Coords(c) => write!(f, "residual {c}"),
            Residual::Symbolic(s) => write!(f, "residual {s}"),
            Residual::Message(s) => f.write_str(s),
        }
    }
}
