//! Structured results for the exhaustive verification suites.
//!
//! Every verifier walks a bounded domain in a fixed enumeration order
//! and records, per named check, how many cases ran and which failed.
//! Reports are therefore deterministic: rerunning a suite yields the
//! same JSON byte for byte.

use serde::Serialize;

/// How many counterexamples a check keeps verbatim.
pub const MAX_COUNTEREXAMPLES: usize = 5;

/// Outcome of one named check inside a suite.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    /// Cases examined.
    pub cases: u64,
    /// Cases that failed.
    pub failures: u64,
    /// The first few failing cases, in enumeration order.
    pub counterexamples: Vec<String>,
}

/// Outcome of a whole verification suite.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn new(suite: impl Into<String>, checks: Vec<CheckResult>) -> VerifyReport {
        let passed = checks.iter().all(|c| c.failures == 0);
        VerifyReport { suite: suite.into(), passed, checks }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// Accumulates one check's tally while a verifier runs.
#[derive(Debug)]
pub struct Check {
    name: String,
    cases: u64,
    failures: u64,
    counterexamples: Vec<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Check {
        Check { name: name.into(), cases: 0, failures: 0, counterexamples: Vec::new() }
    }

    /// Records one case; `witness` is rendered only on failure.
    pub fn case(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(witness());
            }
        }
    }

    pub fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            cases: self.cases,
            failures: self.failures,
            counterexamples: self.counterexamples,
        }
    }
}
