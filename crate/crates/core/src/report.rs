//! Machine-readable verification records. Every failed record carries a
//! minimal witness; the CLI streams these as lines or bundles them into one
//! JSON document.

use serde::{Deserialize, Serialize};

/// One check: an id, its parameters, pass/fail, and a witness on failure
/// (or a short detail worth keeping on success).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckRecord {
    pub id: String,
    pub params: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckRecord {
    pub fn pass(id: impl Into<String>, params: impl Into<String>) -> Self {
        Self { id: id.into(), params: params.into(), pass: true, witness: None }
    }

    pub fn fail(id: impl Into<String>, params: impl Into<String>, witness: impl Into<String>) -> Self {
        Self { id: id.into(), params: params.into(), pass: false, witness: Some(witness.into()) }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.witness = Some(detail.into());
        self
    }

    pub fn from_outcome(
        id: impl Into<String>,
        params: impl Into<String>,
        pass: bool,
        witness: Option<String>,
    ) -> Self {
        Self { id: id.into(), params: params.into(), pass, witness }
    }
}

#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

impl Summary {
    pub fn of(records: &[CheckRecord]) -> Self {
        let passed = records.iter().filter(|r| r.pass).count();
        Self { passed, failed: records.len() - passed }
    }

    pub fn total(&self) -> usize {
        self.passed + self.failed
    }
}

/// All records of one verification suite, with parameter ranges and timing.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: String,
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
    pub wall_ms: u64,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, params: impl Into<String>, records: Vec<CheckRecord>) -> Self {
        let summary = Summary::of(&records);
        Self { suite: suite.into(), params: params.into(), records, summary, wall_ms: 0 }
    }

    pub fn timed(mut self, wall_ms: u64) -> Self {
        self.wall_ms = wall_ms;
        self
    }

    pub fn pass(&self) -> bool {
        self.summary.failed == 0
    }
}
