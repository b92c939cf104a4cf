use std::io::Write;
use std::time::Instant;

use homalg_core::CheckReport;
use serde::{Deserialize, Serialize};

/// A violated identity with 1-based basis indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub identity: String,
    pub tuple: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sample: Option<usize>,
}

/// One line of report output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub target: String,
    pub check: String,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub elapsed_us: u64,
}

impl Record {
    pub fn from_report(target: &str, rep: &CheckReport, started: Instant) -> Self {
        let witness = rep.witness.as_ref().map(|w| WitnessRecord {
            identity: w.identity.clone(),
            tuple: w.tuple.iter().map(|i| i + 1).collect(),
            lhs: w.lhs.coords().iter().map(ToString::to_string).collect(),
            rhs: w.rhs.coords().iter().map(ToString::to_string).collect(),
            sample: w.sample,
        });
        Record {
            target: target.to_string(),
            check: rep.check.clone(),
            status: rep.status.as_str().to_string(),
            witness,
            notes: rep.notes.clone(),
            elapsed_us: started.elapsed().as_micros() as u64,
        }
    }

    pub fn error(target: &str, check: &str, message: String, started: Instant) -> Self {
        Record {
            target: target.to_string(),
            check: check.to_string(),
            status: "error".into(),
            witness: None,
            notes: vec![message],
            elapsed_us: started.elapsed().as_micros() as u64,
        }
    }

    pub fn is_pass(&self) -> bool {
        self.status == "pass"
    }

    pub fn emit(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let line = serde_json::to_string(self).expect("records serialize");
        writeln!(out, "{line}")
    }
}
