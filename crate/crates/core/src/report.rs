//! Verification results.

use std::fmt::Display;
use std::time::Duration;

use serde::Serialize;

/// Outcome of a single verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub description: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    #[serde(rename = "elapsed_us", serialize_with = "as_micros")]
    pub elapsed: Duration,
}

fn as_micros<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_micros() as u64)
}

impl CheckReport {
    /// Passes iff the printed forms of `expected` and `actual` agree.
    pub fn compare(id: &str, description: &str, expected: impl Display, actual: impl Display) -> Self {
        let expected = expected.to_string();
        let actual = actual.to_string();
        let pass = expected == actual;
        CheckReport {
            check_id: id.to_string(),
            description: description.to_string(),
            expected,
            actual,
            pass,
            elapsed: Duration::ZERO,
        }
    }

    pub fn with_pass(id: &str, description: &str, expected: impl Display, actual: impl Display, pass: bool) -> Self {
        CheckReport {
            check_id: id.to_string(),
            description: description.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
            elapsed: Duration::ZERO,
        }
    }

    /// A check whose expectation is that no counterexample exists.
    pub fn no_counterexample(id: &str, description: &str, counterexample: Option<String>) -> Self {
        match counterexample {
            None => Self::with_pass(id, description, "no counterexample", "no counterexample", true),
            Some(w) => Self::with_pass(id, description, "no counterexample", w, false),
        }
    }
}

/// All reports of one run, in registry order.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub reports: Vec<CheckReport>,
}

impl SuiteResult {
    pub fn pass(&self) -> bool {
        self.reports.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckReport> {
        self.reports.iter().filter(|r| !r.pass)
    }
}
