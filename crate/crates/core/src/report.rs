use std::fmt;

use crate::exact::Vector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    NotAdmissible,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotAdmissible => "not-admissible",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A point where an identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub identity: String,
    /// Variable slots of the checked (possibly polarized) schema.
    pub variables: Vec<String>,
    /// 0-based basis index per slot; empty for random-sample witnesses.
    pub tuple: Vec<usize>,
    /// Random sample index, for witnesses found by the sampling checker.
    pub sample: Option<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    pub status: Status,
    pub witness: Option<Witness>,
    /// Number of tuple evaluations performed.
    pub tuples: u64,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn pass(check: &str) -> Self {
        CheckReport { check: check.to_string(), status: Status::Pass, witness: None, tuples: 0, notes: Vec::new() }
    }

    pub fn fail(check: &str, witness: Witness) -> Self {
        CheckReport {
            check: check.to_string(),
            status: Status::Fail,
            witness: Some(witness),
            tuples: 0,
            notes: Vec::new(),
        }
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    /// Name of the violated identity, if any.
    pub fn failed_identity(&self) -> Option<&str> {
        self.witness.as_ref().map(|w| w.identity.as_str())
    }

    pub fn renamed(mut self, check: &str) -> Self {
        self.check = check.to_string();
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.status)?;
        if let Some(w) = &self.witness {
            let t: Vec<String> = w.tuple.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, " at {} [{}] lhs={} rhs={}", w.identity, t.join(","), w.lhs, w.rhs)?;
        }
        Ok(())
    }
}
