//! Structured outcome of checking one identity on one instance.

use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail { lhs: String, rhs: String },
    Skipped { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub instance: String,
    #[serde(flatten)]
    pub status: Status,
}

impl IdentityReport {
    pub fn pass(name: impl Into<String>, instance: impl Into<String>) -> Self {
        Self { name: name.into(), instance: instance.into(), status: Status::Pass }
    }

    pub fn skipped(name: impl Into<String>, instance: impl Into<String>, reason: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            instance: instance.into(),
            status: Status::Skipped { reason: reason.into() },
        }
    }

    /// Passes iff `lhs == rhs`; otherwise records both sides as the witness.
    pub fn compare<T: PartialEq + fmt::Display>(
        name: impl Into<String>,
        instance: impl Into<String>,
        lhs: &T,
        rhs: &T,
    ) -> Self {
        let status = if lhs == rhs {
            Status::Pass
        } else {
            Status::Fail { lhs: lhs.to_string(), rhs: rhs.to_string() }
        };
        Self { name: name.into(), instance: instance.into(), status }
    }

    /// Boolean check with a textual witness on failure.
    pub fn check(name: impl Into<String>, instance: impl Into<String>, ok: bool, witness: impl FnOnce() -> (String, String)) -> Self {
        let status = if ok {
            Status::Pass
        } else {
            let (lhs, rhs) = witness();
            Status::Fail { lhs, rhs }
        };
        Self { name: name.into(), instance: instance.into(), status }
    }

    pub fn passed(&self) -> bool {
        matches!(self.status, Status::Pass)
    }

    pub fn failed(&self) -> bool {
        matches!(self.status, Status::Fail { .. })
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            Status::Pass => write!(f, "PASS {} [{}]", self.name, self.instance),
            Status::Fail { lhs, rhs } => write!(f, "FAIL {} [{}]: {} != {}", self.name, self.instance, lhs, rhs),
            Status::Skipped { reason } => write!(f, "SKIP {} [{}]: {}", self.name, self.instance, reason),
        }
    }
}
