//! Wall-clock and memory limits for heavy computations.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Budget {
    deadline: Option<Instant>,
    mem_kb: Option<u64>,
}

impl Budget {
    pub fn new(time: Option<Duration>, mem_mb: Option<u64>) -> Self {
        Budget {
            deadline: time.map(|t| Instant::now() + t),
            mem_kb: mem_mb.map(|m| m * 1024),
        }
    }

    pub fn unlimited() -> Self {
        Budget {
            deadline: None,
            mem_kb: None,
        }
    }

    pub fn check(&self) -> Result<()> {
        if let Some(d) = self.deadline {
            if Instant::now() > d {
                return Err(Error::Budget("time limit reached".into()));
            }
        }
        if let Some(limit) = self.mem_kb {
            if let Some(rss) = current_rss_kb() {
                if rss > limit {
                    return Err(Error::Budget(format!(
                        "resident memory {} MB over limit {} MB",
                        rss / 1024,
                        limit / 1024
                    )));
                }
            }
        }
        Ok(())
    }
}

fn status_field(key: &str) -> Option<u64> {
    let s = std::fs::read_to_string("/proc/self/status").ok()?;
    s.lines()
        .find(|l| l.starts_with(key))
        .and_then(|l| l.split_whitespace().nth(1))
        .and_then(|v| v.parse().ok())
}

/// Current resident set size in kB (Linux only).
pub fn current_rss_kb() -> Option<u64> {
    status_field("VmRSS:")
}

/// Peak resident set size in kB (Linux only).
pub fn peak_rss_kb() -> Option<u64> {
    status_field("VmHWM:")
}
