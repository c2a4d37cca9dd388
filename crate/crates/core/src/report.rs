//! Structured verification transcripts.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// Outcome of a single check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    /// Passed by evaluation at sampled points, not certified symbolically.
    SampledPass,
    Skipped,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::SampledPass => "SAMPLED-PASS",
            Status::Skipped => "SKIPPED",
            Status::Fail => "FAIL",
        }
    }

    pub fn parse(text: &str) -> Option<Self> {
        Some(match text {
            "PASS" => Status::Pass,
            "SAMPLED-PASS" => Status::SampledPass,
            "SKIPPED" => Status::Skipped,
            "FAIL" => Status::Fail,
            _ => return None,
        })
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One entry of a [`Report`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    /// The mathematical statement being checked, or `"plumbing"`.
    pub statement: String,
    pub status: Status,
    /// Ordered key/value evidence; exact values rendered as strings.
    pub witness: Vec<(String, String)>,
    pub seed: Option<u64>,
    pub ms: u64,
}

impl Check {
    pub fn new(name: impl Into<String>, statement: impl Into<String>, status: Status) -> Self {
        Self {
            name: name.into(),
            statement: statement.into(),
            status,
            witness: Vec::new(),
            seed: None,
            ms: 0,
        }
    }

    pub fn with(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.witness.push((key.into(), value.to_string()));
        self
    }

    pub fn seeded(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn witness_value(&self, key: &str) -> Option<&str> {
        self.witness
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

/// Ordered list of checks with an aggregate verdict.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Self {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// `FAIL` if any check failed, else `SAMPLED-PASS` if any check was
    /// only sampled, else `PASS`.
    pub fn summary(&self) -> Status {
        let mut summary = Status::Pass;
        for check in &self.checks {
            match check.status {
                Status::Fail => return Status::Fail,
                Status::SampledPass => summary = Status::SampledPass,
                Status::Pass | Status::Skipped => {}
            }
        }
        summary
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

/// Millisecond clock used to time checks; [`NoClock`] keeps reports
/// byte-for-byte reproducible.
pub trait Clock {
    fn now_ms(&self) -> u64;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct NoClock;

impl Clock for NoClock {
    fn now_ms(&self) -> u64 {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_precedence() {
        let mut r = Report::new("t");
        assert_eq!(r.summary(), Status::Pass);
        r.push(Check::new("a", "plumbing", Status::Skipped));
        assert_eq!(r.summary(), Status::Pass);
        r.push(Check::new("b", "plumbing", Status::SampledPass));
        assert_eq!(r.summary(), Status::SampledPass);
        r.push(Check::new("c", "plumbing", Status::Pass));
        assert_eq!(r.summary(), Status::SampledPass);
        r.push(Check::new("d", "plumbing", Status::Fail));
        assert_eq!(r.summary(), Status::Fail);
    }

    #[test]
    fn status_strings_round_trip() {
        for s in [
            Status::Pass,
            Status::SampledPass,
            Status::Skipped,
            Status::Fail,
        ] {
            assert_eq!(Status::parse(s.as_str()), Some(s));
        }
    }
}
