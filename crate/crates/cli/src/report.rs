//! Verification reports.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub statement: String,
    pub status: Status,
    pub witness: Value,
    /// Zero unless timings were requested, so that reports stay byte-stable.
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub version: String,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(suite: &str, seed: u64) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            checks: Vec::new(),
        }
    }

    /// Skipped checks neither pass nor fail a suite.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skipped_checks_do_not_fail() {
        let mut r = VerificationReport::new("x", 0);
        assert!(r.passed());
        r.checks.push(Check {
            id: "a".into(),
            statement: String::new(),
            status: Status::Skipped,
            witness: Value::Null,
            elapsed_ms: 0,
        });
        assert!(r.passed());
        r.checks[0].status = Status::Fail;
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
    }
}
