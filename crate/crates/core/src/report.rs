//! Structured verification reports.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Witness lists are cut to this many entries.
pub const WITNESS_LIMIT: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Recorded for information; never affects the overall status.
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<String>,
}

impl Check {
    /// Passes iff `expected == actual`.
    pub fn equal<T: PartialEq + fmt::Display>(name: impl Into<String>, expected: T, actual: T) -> Self {
        let status = if expected == actual {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            name: name.into(),
            status,
            expected: expected.to_string(),
            actual: actual.to_string(),
            witness: Vec::new(),
        }
    }

    /// Passes iff `failures` is empty; `total` is the number of instances tried.
    pub fn all_hold(name: impl Into<String>, total: usize, failures: Vec<String>) -> Self {
        let status = if failures.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        let mut witness = failures;
        let failed = witness.len();
        witness.truncate(WITNESS_LIMIT);
        Self {
            name: name.into(),
            status,
            expected: format!("{total} of {total} hold"),
            actual: format!("{} of {total} hold", total - failed.min(total)),
            witness,
        }
    }

    pub fn info(name: impl Into<String>, actual: impl fmt::Display) -> Self {
        Self {
            name: name.into(),
            status: Status::Info,
            expected: String::new(),
            actual: actual.to_string(),
            witness: Vec::new(),
        }
    }

    /// A check that could not run because of an error.
    pub fn error(name: impl Into<String>, err: impl fmt::Display) -> Self {
        Self {
            name: name.into(),
            status: Status::Fail,
            expected: "no error".into(),
            actual: err.to_string(),
            witness: Vec::new(),
        }
    }

    pub fn with_witness(mut self, mut witness: Vec<String>) -> Self {
        witness.truncate(WITNESS_LIMIT);
        self.witness = witness;
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub parameters: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub overall: Status,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            parameters: BTreeMap::new(),
            checks: Vec::new(),
            overall: Status::Pass,
        }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn push(&mut self, check: Check) {
        if check.status == Status::Fail {
            self.overall = Status::Fail;
        }
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        for c in checks {
            self.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.suite)?;
        for (k, v) in &self.parameters {
            write!(f, " {k}={v}")?;
        }
        writeln!(f)?;
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Info => "info",
            };
            if c.expected.is_empty() {
                writeln!(f, "  [{tag}] {}: {}", c.name, c.actual)?;
            } else {
                writeln!(f, "  [{tag}] {}: expected {}, got {}", c.name, c.expected, c.actual)?;
            }
            for w in &c.witness {
                writeln!(f, "         {w}")?;
            }
        }
        write!(f, "overall: {}", if self.passed() { "pass" } else { "FAIL" })
    }
}
