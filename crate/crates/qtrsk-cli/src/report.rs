//! Verification reports and the parallel check runner.

use rayon::prelude::*;
use serde::Serialize;
use std::time::{Duration, Instant};

/// One failed check: the instance that failed and the two disagreeing values.
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    /// Rendering of the instance that was checked.
    pub input: String,
    /// What the check expected.
    pub expected: String,
    /// What was actually computed.
    pub actual: String,
}

/// Outcome of a verification suite.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    /// Suite name as given on the command line.
    pub suite: String,
    /// Number of instances checked.
    pub instances: usize,
    /// Failures, sorted by input rendering.
    pub failures: Vec<Failure>,
    /// Wall time of the run (human output only; omitted from JSON so that
    /// identical inputs produce byte-identical JSON).
    pub wall: Duration,
}

impl VerificationReport {
    /// True when every check passed.
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    /// Deterministic JSON rendering (wall time omitted).
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "suite": self.suite,
            "instances": self.instances,
            "failures": self.failures.iter().map(|f| serde_json::json!({
                "input": f.input,
                "expected": f.expected,
                "actual": f.actual,
            })).collect::<Vec<_>>(),
        })
    }

    /// Human-readable rendering with wall time.
    pub fn render_human(&self) -> String {
        let mut out = format!(
            "suite {}: {} instances, {} failures ({:.2}s)",
            self.suite,
            self.instances,
            self.failures.len(),
            self.wall.as_secs_f64()
        );
        for f in &self.failures {
            out.push_str(&format!(
                "\n  FAIL {}\n    expected: {}\n    actual:   {}",
                f.input, f.expected, f.actual
            ));
        }
        out
    }
}

/// Result of one check: the instance rendering and an optional mismatch.
pub struct Check {
    /// Rendering of the instance.
    pub input: String,
    /// `None` when the check passed, otherwise `(expected, actual)`.
    pub mismatch: Option<(String, String)>,
}

impl Check {
    /// A passing check.
    pub fn pass(input: impl Into<String>) -> Check {
        Check {
            input: input.into(),
            mismatch: None,
        }
    }

    /// A failing check.
    pub fn fail(
        input: impl Into<String>,
        expected: impl Into<String>,
        actual: impl Into<String>,
    ) -> Check {
        Check {
            input: input.into(),
            mismatch: Some((expected.into(), actual.into())),
        }
    }

    /// Builds a check from an equality comparison.
    pub fn eq(input: impl Into<String>, holds: bool, expected: impl Into<String>, actual: impl Into<String>) -> Check {
        if holds {
            Check::pass(input)
        } else {
            Check::fail(input, expected, actual)
        }
    }
}

/// Runs the checks for `items` in parallel and aggregates a report; failures
/// are sorted by input rendering so aggregation is order-independent.
pub fn run_suite<I, F>(name: &str, items: Vec<I>, check: F) -> VerificationReport
where
    I: Send + Sync,
    F: Fn(&I) -> Check + Send + Sync,
{
    let start = Instant::now();
    let checks: Vec<Check> = items.par_iter().map(&check).collect();
    finish(name, start, checks)
}

/// Builds a report from checks computed by the caller.
pub fn finish(name: &str, start: Instant, checks: Vec<Check>) -> VerificationReport {
    let instances = checks.len();
    let mut failures: Vec<Failure> = checks
        .into_iter()
        .filter_map(|c| {
            c.mismatch.map(|(expected, actual)| Failure {
                input: c.input,
                expected,
                actual,
            })
        })
        .collect();
    failures.sort_by(|a, b| a.input.cmp(&b.input));
    VerificationReport {
        suite: name.into(),
        instances,
        failures,
        wall: start.elapsed(),
    }
}
