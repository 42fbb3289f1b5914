use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qthook::dcomplete::PosetSpec;
use qthook::harness::{emit_report, parse_poset_file, run, Subject, Target, VerificationJob};
use qthook::qtcore::QtPoint;
use qthook::tableaux::{Partition, StrictPartition};

/// Exact checks of (q,t)-hook formulas for plane partitions and d-complete posets.
#[derive(Parser)]
#[command(name = "qthook", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one verification target and report pass/fail.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// gansner, main_a, main_b, refined, lemma1, identities, conjecture or cross_checks
    target: String,
    /// Ordinary shape, e.g. 3,2,1
    #[arg(long)]
    shape: Option<String>,
    /// Shifted shape (strict partition), e.g. 4,2,1
    #[arg(long)]
    shifted: Option<String>,
    /// Color the diagonal of a shifted shape alternately with z_0 and z_0'
    #[arg(long, requires = "shifted")]
    two_color: bool,
    /// Rooted tree, e.g. "(a(b)(c(d)))"
    #[arg(long)]
    tree: Option<String>,
    /// Double-tailed diamond d_k(1)
    #[arg(long)]
    dk1: Option<u32>,
    /// Poset file in JSON
    #[arg(long)]
    poset: Option<PathBuf>,
    /// Single profile for the refined target, e.g. 2,1
    #[arg(long)]
    profile: Option<String>,
    /// Total degree bound
    #[arg(long, default_value_t = VerificationJob::DEFAULT_DEGREE)]
    deg: u32,
    #[arg(long, default_value_t = VerificationJob::DEFAULT_TRIALS)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Fixed point q,t such as 1/3,-2/5 (repeatable; replaces sampling)
    #[arg(long)]
    qt: Vec<String>,
    /// Write the JSON report here
    #[arg(long)]
    json: Option<PathBuf>,
    /// Include elapsed time in the report
    #[arg(long)]
    elapsed: bool,
}

fn job_from(args: &VerifyArgs) -> qthook::Result<VerificationJob> {
    let target: Target = args.target.parse()?;
    let mut subjects = Vec::new();
    if let Some(s) = &args.shape {
        subjects.push(Subject::Spec(PosetSpec::Shape(Partition::parse(s)?)));
    }
    if let Some(s) = &args.shifted {
        subjects.push(Subject::Spec(PosetSpec::Shifted {
            mu: StrictPartition::parse(s)?,
            two_color: args.two_color,
        }));
    }
    if let Some(t) = &args.tree {
        subjects.push(Subject::Spec(PosetSpec::Tree(t.clone())));
    }
    if let Some(k) = args.dk1 {
        subjects.push(Subject::Spec(PosetSpec::Dk1(k)));
    }
    if let Some(p) = &args.poset {
        subjects.push(parse_poset_file(p)?);
    }
    if subjects.len() > 1 {
        return Err(qthook::Error::Config("give at most one of --shape, --shifted, --tree, --dk1, --poset".into()));
    }
    let mut job = VerificationJob::new(target).with_degree(args.deg).with_trials(args.trials).with_seed(args.seed);
    job.subject = subjects.pop();
    if let Some(p) = &args.profile {
        job.profile = Some(Partition::parse(p)?);
    }
    if !args.qt.is_empty() {
        job.points = Some(args.qt.iter().map(|s| QtPoint::parse(s)).collect::<qthook::Result<_>>()?);
    }
    job.record_elapsed = args.elapsed;
    job.validate()?;
    Ok(job)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Command::Verify(args) = cli.command;
    let job = match job_from(&args) {
        Ok(j) => j,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = match run(&job) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    println!("{}", report.summary());
    if let Some(path) = &args.json {
        if let Err(e) = emit_report(&report, path) {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
