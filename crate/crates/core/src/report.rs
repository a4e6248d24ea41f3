//! Structured verdicts shared by every certification routine.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    /// Process exit code used by the command-line tool.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 2,
        }
    }

    /// Combine two verdicts: any failure fails, else any doubt is doubt.
    pub fn and(self, other: Status) -> Status {
        match (self, other) {
            (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
            (Status::Inconclusive, _) | (_, Status::Inconclusive) => Status::Inconclusive,
            _ => Status::Pass,
        }
    }
}

/// Where a check failed: a point, or a line `point + t·direction`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub point: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub direction: Option<Vec<f64>>,
    pub detail: String,
}

impl Witness {
    pub fn point(point: Vec<f64>, detail: impl Into<String>) -> Self {
        Witness {
            point,
            direction: None,
            detail: detail.into(),
        }
    }

    pub fn line(point: Vec<f64>, direction: Vec<f64>, detail: impl Into<String>) -> Self {
        Witness {
            point,
            direction: Some(direction),
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerdictReport {
    pub check: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub samples: usize,
    /// Largest relative residual (or smallest margin) seen, when meaningful.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_residual: Option<f64>,
    pub tol: f64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerdictReport {
    pub fn new(check: &str, status: Status, samples: usize, tol: f64) -> Self {
        VerdictReport {
            check: check.to_string(),
            status,
            witness: None,
            samples,
            max_residual: None,
            tol,
            notes: Vec::new(),
        }
    }

    pub fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn with_residual(mut self, r: f64) -> Self {
        self.max_residual = Some(r);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}
