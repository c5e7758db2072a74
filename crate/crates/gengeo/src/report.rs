//! Structured check reports.
//!
//! Verification operations return a list of named checks rather than
//! erroring on the first failure, so callers can present everything at once.
//! Witness strings are printed in canonical form to keep reports diffable.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Warning,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail => write!(f, "fail"),
            Verdict::Warning => write!(f, "warning"),
        }
    }
}

/// One named check with an optional printed witness (empty when absent).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub description: String,
    pub verdict: Verdict,
    pub witness: String,
}

/// An ordered list of checks; ordering is deterministic by construction.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct CheckList {
    pub checks: Vec<Check>,
}

impl CheckList {
    pub fn new() -> Self {
        CheckList::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn pass(&mut self, id: &str, description: &str) {
        self.checks.push(Check {
            id: id.into(),
            description: description.into(),
            verdict: Verdict::Pass,
            witness: String::new(),
        });
    }

    pub fn pass_with(&mut self, id: &str, description: &str, witness: &str) {
        self.checks.push(Check {
            id: id.into(),
            description: description.into(),
            verdict: Verdict::Pass,
            witness: witness.into(),
        });
    }

    pub fn fail(&mut self, id: &str, description: &str, witness: &str) {
        self.checks.push(Check {
            id: id.into(),
            description: description.into(),
            verdict: Verdict::Fail,
            witness: witness.into(),
        });
    }

    pub fn warn(&mut self, id: &str, description: &str, witness: &str) {
        self.checks.push(Check {
            id: id.into(),
            description: description.into(),
            verdict: Verdict::Warning,
            witness: witness.into(),
        });
    }

    /// Records a pass or a fail depending on `ok`.
    pub fn record(&mut self, id: &str, description: &str, ok: bool, witness: &str) {
        if ok {
            self.pass(id, description);
        } else {
            self.fail(id, description, witness);
        }
    }

    pub fn extend(&mut self, other: CheckList) {
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.verdict != Verdict::Fail)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.verdict == Verdict::Fail)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter()
    }
}

impl fmt::Display for CheckList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "[{}] {}: {}", c.verdict, c.id, c.description)?;
            if !c.witness.is_empty() {
                write!(f, "  ({})", c.witness)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
