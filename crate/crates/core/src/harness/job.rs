use std::fmt;
use std::str::FromStr;

use crate::dcomplete::{build, LabeledPoset, PosetSpec};
use crate::error::{Error, Result};
use crate::qtcore::{sample_points, QtPoint};
use crate::tableaux::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Target {
    Gansner,
    MainA,
    MainB,
    Refined,
    Lemma1,
    Identities,
    Conjecture,
    CrossChecks,
}

impl Target {
    pub const ALL: [Target; 8] = [
        Target::Gansner,
        Target::MainA,
        Target::MainB,
        Target::Refined,
        Target::Lemma1,
        Target::Identities,
        Target::Conjecture,
        Target::CrossChecks,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Gansner => "gansner",
            Target::MainA => "main_a",
            Target::MainB => "main_b",
            Target::Refined => "refined",
            Target::Lemma1 => "lemma1",
            Target::Identities => "identities",
            Target::Conjecture => "conjecture",
            Target::CrossChecks => "cross_checks",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown target {s:?}")))
    }
}

/// What a job runs on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Subject {
    Spec(PosetSpec),
    /// A poset read from a file, with a display name.
    File { name: String, poset: LabeledPoset },
}

impl Subject {
    pub fn labeled(&self) -> Result<LabeledPoset> {
        match self {
            Subject::Spec(s) => build(s),
            Subject::File { poset, .. } => Ok(poset.clone()),
        }
    }
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Spec(PosetSpec::Shape(l)) => write!(f, "shape {l}"),
            Subject::Spec(PosetSpec::Shifted { mu, two_color }) => {
                write!(f, "shifted {mu}{}", if *two_color { " two-color" } else { "" })
            }
            Subject::Spec(PosetSpec::Tree(t)) => write!(f, "tree {t}"),
            Subject::Spec(PosetSpec::Dk1(k)) => write!(f, "d_{k}(1)"),
            Subject::File { name, .. } => write!(f, "poset {name}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerificationJob {
    pub target: Target,
    pub subject: Option<Subject>,
    /// Restricts `refined` to one profile.
    pub profile: Option<Partition>,
    pub degree: u32,
    pub trials: usize,
    pub seed: u64,
    /// Explicit points; otherwise `trials` points are sampled from `seed`.
    pub points: Option<Vec<QtPoint>>,
    pub record_elapsed: bool,
}

impl VerificationJob {
    pub const DEFAULT_DEGREE: u32 = 6;
    pub const DEFAULT_TRIALS: usize = 3;

    pub fn new(target: Target) -> Self {
        Self {
            target,
            subject: None,
            profile: None,
            degree: Self::DEFAULT_DEGREE,
            trials: Self::DEFAULT_TRIALS,
            seed: 0,
            points: None,
            record_elapsed: false,
        }
    }

    pub fn with_subject(mut self, spec: PosetSpec) -> Self {
        self.subject = Some(Subject::Spec(spec));
        self
    }

    pub fn with_degree(mut self, degree: u32) -> Self {
        self.degree = degree;
        self
    }

    pub fn with_trials(mut self, trials: usize) -> Self {
        self.trials = trials;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_profile(mut self, tau: Partition) -> Self {
        self.profile = Some(tau);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::Config("trials must be at least 1".into()));
        }
        if matches!(&self.points, Some(p) if p.is_empty()) {
            return Err(Error::Config("no (q,t) points given".into()));
        }
        if self.profile.is_some() && self.target != Target::Refined {
            return Err(Error::Config("--profile applies to the refined target".into()));
        }
        let spec = match &self.subject {
            Some(Subject::Spec(s)) => Some(s),
            _ => None,
        };
        let need = |ok: bool, what: &str| {
            if ok {
                Ok(())
            } else {
                Err(Error::Config(format!("target {} needs {what}", self.target)))
            }
        };
        match self.target {
            Target::Gansner | Target::Conjecture => need(self.subject.is_some(), "a shape, shifted shape or poset"),
            Target::MainA => need(matches!(spec, Some(PosetSpec::Shape(_))), "--shape"),
            Target::MainB | Target::Refined | Target::Lemma1 => {
                need(matches!(spec, Some(PosetSpec::Shifted { .. })), "--shifted")
            }
            Target::Identities => need(self.subject.is_none(), "no poset"),
            Target::CrossChecks => need(
                matches!(spec, None | Some(PosetSpec::Shape(_)) | Some(PosetSpec::Shifted { .. }))
                    && !matches!(self.subject, Some(Subject::File { .. })),
                "a shape, a shifted shape or nothing",
            ),
        }
    }

    /// The `(q,t)` points of the trials.
    pub fn sample(&self) -> Vec<QtPoint> {
        match &self.points {
            Some(p) => p.clone(),
            None => sample_points(self.seed, self.trials),
        }
    }
}
