//! Pass / fail / unknown outcomes shared by every verification report.

use std::fmt;

use serde::Serialize;

use crate::cat::Decision;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Unknown,
    Fail,
}

impl Status {
    /// The worse of two outcomes: any failure wins, then any unknown.
    pub fn and(self, other: Status) -> Status {
        self.max(other)
    }

    pub fn all(items: impl IntoIterator<Item = Status>) -> Status {
        items.into_iter().fold(Status::Pass, Status::and)
    }

    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    /// Process exit code: 0 pass, 1 failure, 2 unknown only.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Unknown => 2,
        }
    }
}

impl From<Decision> for Status {
    fn from(d: Decision) -> Self {
        match d {
            Decision::Yes => Status::Pass,
            Decision::No => Status::Fail,
            Decision::Unknown => Status::Unknown,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Unknown => "unknown",
        })
    }
}

/// Tally of one named property over many samples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub unknown: usize,
    pub status: Status,
    /// First counterexample, or first undecided instance when nothing failed.
    pub witness: Option<String>,
}

impl CheckTally {
    pub fn new(name: impl Into<String>) -> Self {
        CheckTally {
            name: name.into(),
            checked: 0,
            failed: 0,
            unknown: 0,
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn record(&mut self, status: Status, witness: impl FnOnce() -> String) {
        self.checked += 1;
        match status {
            Status::Pass => {}
            Status::Fail => {
                self.failed += 1;
                if self.status != Status::Fail {
                    self.witness = Some(witness());
                }
            }
            Status::Unknown => {
                self.unknown += 1;
                if self.status == Status::Pass {
                    self.witness = Some(witness());
                }
            }
        }
        self.status = self.status.and(status);
    }

    pub fn merge(&mut self, other: &CheckTally) {
        self.checked += other.checked;
        self.failed += other.failed;
        self.unknown += other.unknown;
        if other.status > self.status {
            self.witness = other.witness.clone();
        }
        self.status = self.status.and(other.status);
    }
}

impl fmt::Display for CheckTally {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} ({} checked, {} failed, {} unknown)",
            self.name, self.status, self.checked, self.failed, self.unknown
        )?;
        if let Some(w) = &self.witness {
            write!(f, "; witness: {w}")?;
        }
        Ok(())
    }
}
