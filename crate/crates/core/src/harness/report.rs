use serde::Serialize;

use super::job::VerificationJob;
use crate::error::Result;
use crate::qtcore::{format_scalar, Comparison, Monomial, QtPoint, Scalar};

/// One comparison and the number of arrays enumerated for it.
#[derive(Debug, Clone)]
pub struct Check {
    pub comparison: Comparison,
    pub arrays: usize,
}

impl Check {
    pub fn new(comparison: Comparison, arrays: usize) -> Self {
        Self { comparison, arrays }
    }
}

/// Checks run at one point, or point-free checks when `point` is `None`.
#[derive(Debug, Clone)]
pub struct Trial {
    pub point: Option<QtPoint>,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub label: String,
    pub status: Status,
    pub terms: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialSummary {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<String>,
    pub checks: Vec<CheckSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub arrays: usize,
    pub comparisons: usize,
    pub terms: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub trial: usize,
    pub check: String,
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub target: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subject: Option<String>,
    pub degree: u32,
    pub seed: u64,
    pub status: Status,
    pub trials: Vec<TrialSummary>,
    pub counts: Counts,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// One line for terminals.
    pub fn summary(&self) -> String {
        let subject = self.subject.as_deref().map(|s| format!(" [{s}]")).unwrap_or_default();
        let head = format!(
            "{}{subject}: {} ({} comparisons, {} terms, {} arrays)",
            self.target,
            if self.passed() { "PASS" } else { "FAIL" },
            self.counts.comparisons,
            self.counts.terms,
            self.counts.arrays
        );
        match &self.first_mismatch {
            None => head,
            Some(w) => format!(
                "{head}\n  trial {} `{}`: coefficient of {} is {} on the left, {} on the right",
                w.trial, w.check, w.monomial, w.lhs, w.rhs
            ),
        }
    }
}

/// Builds the report for already computed trials.
pub fn assemble(job: &VerificationJob, trials: &[Trial]) -> Result<Report> {
    let mut counts = Counts {
        arrays: 0,
        comparisons: 0,
        terms: 0,
    };
    let mut first = None;
    let mut summaries = Vec::with_capacity(trials.len());
    for (k, trial) in trials.iter().enumerate() {
        let mut checks = Vec::with_capacity(trial.checks.len());
        for c in &trial.checks {
            let terms = c.comparison.terms();
            counts.arrays += c.arrays;
            counts.comparisons += 1;
            counts.terms += terms;
            let mismatch = c.comparison.mismatch()?;
            if let (Some(m), None) = (&mismatch, &first) {
                first = Some(Witness {
                    trial: k,
                    check: c.comparison.label.clone(),
                    monomial: m.monomial.to_string(),
                    lhs: format_scalar(&m.lhs),
                    rhs: format_scalar(&m.rhs),
                });
            }
            checks.push(CheckSummary {
                label: c.comparison.label.clone(),
                status: if mismatch.is_some() { Status::Fail } else { Status::Pass },
                terms,
            });
        }
        summaries.push(TrialSummary {
            point: trial.point.as_ref().map(QtPoint::to_string),
            checks,
        });
    }
    Ok(Report {
        target: job.target.to_string(),
        subject: job.subject.as_ref().map(ToString::to_string),
        degree: job.degree,
        seed: job.seed,
        status: if first.is_some() { Status::Fail } else { Status::Pass },
        trials: summaries,
        counts,
        first_mismatch: first,
        elapsed_ms: None,
    })
}

/// Adds `delta` to the `index`-th right-hand coefficient of one check.
pub fn inject_fault(
    trials: &mut [Trial],
    trial: usize,
    check: usize,
    index: usize,
    delta: &Scalar,
) -> Option<Monomial> {
    trials.get_mut(trial)?.checks.get_mut(check)?.comparison.rhs.perturb(index, delta)
}
