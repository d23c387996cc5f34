//! Uniform report envelope for the verification suites.
//!
//! Every suite emits the same envelope — suite name, the parameter set it
//! ran with, how many checks ran, the violations, pass/fail — plus its own
//! named fields flattened into the same JSON object, so `verify sf` reports
//! carry `degree`/`lyndon_count`/`terms_lhs`/`terms_rhs`/`mismatches` at
//! the top level while remaining parseable as a generic [`Report`].

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Violation {
    pub location: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub parameters: BTreeMap<String, String>,
    pub checks_run: u64,
    pub violations: Vec<Violation>,
    pub status: Status,
    #[serde(flatten)]
    pub detail: serde_json::Map<String, serde_json::Value>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            parameters: BTreeMap::new(),
            checks_run: 0,
            violations: Vec::new(),
            status: Status::Pass,
            detail: serde_json::Map::new(),
        }
    }

    pub fn parameter(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.into(), value.to_string());
        self
    }

    pub fn checks(mut self, n: u64) -> Self {
        self.checks_run = n;
        self
    }

    pub fn violation(&mut self, location: impl Into<String>, expected: impl ToString, actual: impl ToString) {
        self.violations.push(Violation {
            location: location.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    /// Merges a serializable payload's fields into the envelope. Keys that
    /// belong to the envelope itself are skipped; in particular a payload's
    /// own `violations` list is surfaced through the envelope's instead.
    pub fn with_detail(mut self, payload: &impl Serialize) -> Self {
        const RESERVED: [&str; 5] = ["suite", "parameters", "checks_run", "violations", "status"];
        if let Ok(serde_json::Value::Object(map)) = serde_json::to_value(payload) {
            for (k, v) in map {
                if !RESERVED.contains(&k.as_str()) {
                    self.detail.insert(k, v);
                }
            }
        }
        self
    }

    /// Recomputes the status invariant: pass iff no violations.
    pub fn finish(mut self) -> Self {
        self.status = if self.violations.is_empty() { Status::Pass } else { Status::Fail };
        self
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    /// Exit code is a pure function of the status.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Pass => 0,
            Status::Fail => 1,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite: {}", self.suite)?;
        for (k, v) in &self.parameters {
            writeln!(f, "  {k}: {v}")?;
        }
        writeln!(f, "checks run: {}", self.checks_run)?;
        if !self.violations.is_empty() {
            writeln!(f, "violations ({}):", self.violations.len())?;
            for v in self.violations.iter().take(20) {
                writeln!(f, "  {}: expected {}, got {}", v.location, v.expected, v.actual)?;
            }
            if self.violations.len() > 20 {
                writeln!(f, "  ... and {} more", self.violations.len() - 20)?;
            }
        }
        write!(f, "status: {}", if self.is_pass() { "pass" } else { "fail" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("verify-sf")
            .parameter("alphabet", "ab")
            .parameter("degree", 3)
            .checks(42);
        r.violation("ab⊗ba", "1", "0");
        r.with_detail(&serde_json::json!({"lyndon_count": 5})).finish()
    }

    #[test]
    fn status_tracks_violations() {
        let r = sample();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.exit_code(), 1);
        let clean = Report::new("x").finish();
        assert_eq!(clean.status, Status::Pass);
        assert_eq!(clean.exit_code(), 0);
    }

    #[test]
    fn json_round_trip_is_identity() {
        let r = sample();
        let once = serde_json::to_string(&r).unwrap();
        let parsed: Report = serde_json::from_str(&once).unwrap();
        let twice = serde_json::to_string(&parsed).unwrap();
        assert_eq!(r, parsed);
        assert_eq!(once, twice);
        // the flattened detail keys surface at the top level
        let value: serde_json::Value = serde_json::from_str(&once).unwrap();
        assert_eq!(value["lyndon_count"], 5);
        assert_eq!(value["status"], "fail");
    }
}
