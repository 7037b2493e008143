//! Structured pass/fail reports produced by the axiom checkers.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Outcome of one individual law instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    /// Which law was checked (e.g. `"monoidal.pentagon"`).
    pub name: String,
    /// Stable anchor label for the law family, independent of the
    /// instance (useful for grouping in downstream tooling).
    pub anchor: String,
    /// The instance the law was evaluated at (object tuple, cell names).
    pub instance: Vec<String>,
    pub passed: bool,
    /// Witness data on failure: the two cells that should have agreed,
    /// or a description of the mismatch.  Empty on success.
    pub witness: String,
}

/// Aggregated result of a checker battery.
///
/// Invariant: `verdict` is `"fail"` exactly when at least one check
/// failed, `"pass"` otherwise.  Checks are recorded in a deterministic
/// order, so serialized reports are byte-stable across runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub verdict: String,
    pub checks: Vec<Check>,
    /// Counters (instances evaluated, cells materialized, …).
    pub stats: BTreeMap<String, u64>,
}

impl Report {
    pub fn new() -> Report {
        Report {
            verdict: "pass".to_string(),
            checks: Vec::new(),
            stats: BTreeMap::new(),
        }
    }

    /// Record a check, updating the verdict.
    pub fn push(&mut self, check: Check) {
        if !check.passed {
            self.verdict = "fail".to_string();
        }
        self.checks.push(check);
    }

    /// Record a passing check.
    pub fn pass(&mut self, name: &str, anchor: &str, instance: Vec<String>) {
        self.push(Check {
            name: name.to_string(),
            anchor: anchor.to_string(),
            instance,
            passed: true,
            witness: String::new(),
        });
    }

    /// Record a failing check with a witness.
    pub fn fail(&mut self, name: &str, anchor: &str, instance: Vec<String>, witness: String) {
        self.push(Check {
            name: name.to_string(),
            anchor: anchor.to_string(),
            instance,
            passed: false,
            witness,
        });
    }

    /// Bump a named counter.
    pub fn count(&mut self, key: &str, by: u64) {
        *self.stats.entry(key.to_string()).or_insert(0) += by;
    }

    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    /// Merge another report into this one (checks appended, stats
    /// summed, verdict combined).
    pub fn merge(&mut self, other: Report) {
        for check in other.checks {
            self.push(check);
        }
        for (k, v) in other.stats {
            *self.stats.entry(k).or_insert(0) += v;
        }
    }

    /// All failing checks.
    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

impl Default for Report {
    fn default() -> Self {
        Report::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_tracks_failures() {
        let mut r = Report::new();
        assert!(r.passed());
        r.pass("law", "anchor", vec!["x".into()]);
        assert!(r.passed());
        r.fail("law", "anchor", vec!["y".into()], "mismatch".into());
        assert!(!r.passed());
        assert_eq!(r.failures().len(), 1);
    }

    #[test]
    fn merge_combines() {
        let mut a = Report::new();
        a.pass("p", "a1", vec![]);
        a.count("instances", 1);
        let mut b = Report::new();
        b.fail("q", "a2", vec![], "w".into());
        b.count("instances", 2);
        a.merge(b);
        assert!(!a.passed());
        assert_eq!(a.stats["instances"], 3);
        assert_eq!(a.checks.len(), 2);
    }
}
