//! Library side of the CLI: suite runners, DOT export, and report
//! rendering, so integration tests can drive the exact code the binary runs.

pub mod dot;
pub mod runners;

use serde::{Deserialize, Serialize};
use unimodal::report::{Summary, SuiteReport};

pub use dot::export_dot;

/// The single JSON document `--json` emits: every suite plus an overall
/// summary recomputed from the records.
#[derive(Debug, Serialize, Deserialize)]
pub struct FullReport {
    pub suites: Vec<SuiteReport>,
    pub summary: Summary,
}

impl FullReport {
    pub fn new(suites: Vec<SuiteReport>) -> Self {
        let mut summary = Summary::default();
        for suite in &suites {
            summary.passed += suite.summary.passed;
            summary.failed += suite.summary.failed;
        }
        Self { suites, summary }
    }

    pub fn pass(&self) -> bool {
        self.summary.failed == 0
    }
}

/// Streams the reports as one line per record plus a per-suite summary
/// line. Returns the process exit code: 0 all pass, 1 otherwise.
pub fn render_lines(suites: &[SuiteReport], out: &mut impl std::io::Write) -> std::io::Result<i32> {
    for suite in suites {
        for record in &suite.records {
            let status = if record.pass { "PASS" } else { "FAIL" };
            match &record.witness {
                Some(witness) => writeln!(
                    out,
                    "{status} {}/{} {} :: {witness}",
                    suite.suite, record.id, record.params
                )?,
                None => writeln!(out, "{status} {}/{} {}", suite.suite, record.id, record.params)?,
            }
        }
        writeln!(
            out,
            "suite {}: {} checks, {} passed, {} failed ({} ms) [{}]",
            suite.suite,
            suite.summary.total(),
            suite.summary.passed,
            suite.summary.failed,
            suite.wall_ms,
            suite.params
        )?;
    }
    let failed: usize = suites.iter().map(|s| s.summary.failed).sum();
    Ok(if failed == 0 { 0 } else { 1 })
}

/// Emits the single JSON document. Returns the exit code like
/// [`render_lines`].
pub fn render_json(suites: Vec<SuiteReport>, out: &mut impl std::io::Write) -> std::io::Result<i32> {
    let report = FullReport::new(suites);
    let code = if report.pass() { 0 } else { 1 };
    serde_json::to_writer_pretty(&mut *out, &report)?;
    writeln!(out)?;
    Ok(code)
}
