//! Verification jobs: build both sides of each identity at sampled points,
//! compare them exactly and report the outcome.

mod checks;
mod job;
mod report;

pub use checks::{collect, cross_check_specs, refined_pairs, refined_prefactor_monomials};
pub use job::{Subject, Target, VerificationJob};
pub use report::{
    assemble, inject_fault, Check, CheckSummary, Counts, Report, Status, Trial, TrialSummary, Witness,
};

use std::path::Path;
use std::time::Instant;

use crate::dcomplete::parse_poset_json;
use crate::error::{Error, Result};

pub fn run(job: &VerificationJob) -> Result<Report> {
    let start = Instant::now();
    let trials = collect(job)?;
    let mut report = assemble(job, &trials)?;
    if job.record_elapsed {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

/// Reads a poset in the JSON format of [`crate::dcomplete::parse_poset_json`].
pub fn parse_poset_file(path: &Path) -> Result<Subject> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    let poset = parse_poset_json(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    Ok(Subject::File {
        name: path.display().to_string(),
        poset,
    })
}

pub fn emit_report(report: &Report, path: &Path) -> Result<()> {
    std::fs::write(path, report.to_json() + "\n").map_err(|e| Error::Config(format!("{}: {e}", path.display())))
}
