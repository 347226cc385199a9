//! Verification reports shared by the library checks and the CLI.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::budget::peak_rss_kb;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Outcome of one named check.
///
/// Timing and memory are only recorded on request so that reports of two
/// runs with the same seed are byte-identical.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub check: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub peak_rss_kb: Option<u64>,
}

impl Report {
    pub fn pass(check: &str) -> Self {
        Report {
            check: check.to_string(),
            status: Status::Pass,
            witness: None,
            note: None,
            seed: None,
            details: BTreeMap::new(),
            elapsed_ms: None,
            peak_rss_kb: None,
        }
    }

    pub fn fail(check: &str, witness: impl Into<String>) -> Self {
        let mut w: String = witness.into();
        if w.is_empty() {
            w = "(no witness text)".into();
        }
        Report {
            status: Status::Fail,
            witness: Some(w),
            ..Report::pass(check)
        }
    }

    pub fn skipped(check: &str, note: impl Into<String>) -> Self {
        Report {
            status: Status::Skipped,
            note: Some(note.into()),
            ..Report::pass(check)
        }
    }

    /// Pass if every labelled sub-check succeeded, otherwise fail with the
    /// first failure as witness. Each sub-check is listed in the details.
    pub fn from_checks(check: &str, results: Vec<(String, Result<(), String>)>) -> Self {
        let mut r = match results
            .iter()
            .find_map(|(l, res)| res.as_ref().err().map(|e| (l, e)))
        {
            Some((label, err)) => Report::fail(check, format!("{label}: {err}")),
            None => Report::pass(check),
        };
        for (label, res) in results {
            r.details.insert(
                label,
                Value::String(if res.is_ok() {
                    "ok".into()
                } else {
                    "failed".into()
                }),
            );
        }
        r
    }

    pub fn detail(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.details.insert(key.to_string(), v.into());
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn renamed(mut self, check: &str) -> Self {
        self.check = check.to_string();
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    /// Records wall-clock time since `start` and the peak resident memory.
    pub fn timed(mut self, start: Instant) -> Self {
        self.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        self.peak_rss_kb = peak_rss_kb();
        self
    }

    /// One human-readable line.
    pub fn summary_line(&self) -> String {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        let mut s = format!("{status} {}", self.check);
        if let Some(w) = &self.witness {
            let mut w: String = w.chars().take(300).collect();
            if w.len() < self.witness.as_ref().map_or(0, |x| x.len()) {
                w.push_str("...");
            }
            s.push_str(&format!(" -- {w}"));
        }
        if let Some(n) = &self.note {
            s.push_str(&format!(" ({n})"));
        }
        s
    }
}

/// `Ok` if `residual` is zero, otherwise its text as the error.
pub fn expect_zero(is_zero: bool, text: impl FnOnce() -> String) -> Result<(), String> {
    if is_zero {
        Ok(())
    } else {
        Err(text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fail_always_has_witness() {
        let r = Report::fail("x", "");
        assert!(!r.witness.unwrap().is_empty());
    }

    #[test]
    fn json_is_stable() {
        let r = Report::pass("c").detail("b", 2).detail("a", 1).with_seed(7);
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(
            s,
            r#"{"check":"c","status":"pass","seed":7,"details":{"a":1,"b":2}}"#
        );
    }
}
