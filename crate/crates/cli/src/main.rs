//! `ecadvice`: generate instances, run the advice pipeline, verify colorings,
//! play the lower-bound games, and batch-check invariants.
//!
//! Reports are JSON on stdout (or `--report`), human summaries on stderr.
//! Exit status: 0 success, 1 property violation, 2 usage, 3 resource limit.

mod adversary;
mod check;
mod gen;
mod output;
mod run;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use edgecolor_advice::adversary::AdversaryError;
use edgecolor_advice::advice::AdviceError;
use edgecolor_advice::coloring::{ColoringError, ExactColorer, DEFAULT_NODE_BUDGET};
use edgecolor_advice::online::OnlineError;
use serde::Serialize;

#[derive(Parser, Debug, Serialize)]
#[command(name = "ecadvice", version, about = "Online edge coloring with advice")]
struct Cli {
    /// Node budget for the exact edge-coloring search.
    #[arg(long, global = true, env = "ECADVICE_NODE_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
    node_budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug, Serialize)]
enum Command {
    /// Write a generated edge stream.
    Gen(gen::GenArgs),
    /// Run an online algorithm on a stream and report.
    Run(run::RunArgs),
    /// Check a coloring file against a stream.
    Verify(run::VerifyArgs),
    /// Play a lower-bound game.
    #[command(subcommand)]
    Adversary(adversary::AdversaryCommand),
    /// Exhaustive and batch checks.
    #[command(subcommand)]
    Check(check::CheckCommand),
}

/// A run finished but the result broke a property (improper, suboptimal,
/// invariant failed). The report has already been written.
#[derive(Debug)]
pub struct PropertyViolation(pub String);

impl std::fmt::Display for PropertyViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for PropertyViolation {}

fn coloring_limit(e: &ColoringError) -> bool {
    matches!(e, ColoringError::ResourceLimit { .. })
}

fn advice_limit(e: &AdviceError) -> bool {
    matches!(e, AdviceError::Coloring(c) if coloring_limit(c))
}

fn online_limit(e: &OnlineError) -> bool {
    matches!(e, OnlineError::Oracle(a) if advice_limit(a))
}

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<ColoringError>() {
            return match e {
                ColoringError::ResourceLimit { .. } => 3,
                ColoringError::Parse { .. } => 2,
                _ => 1,
            };
        }
        if let Some(e) = cause.downcast_ref::<AdviceError>() {
            return if advice_limit(e) { 3 } else { 1 };
        }
        if let Some(e) = cause.downcast_ref::<OnlineError>() {
            return if online_limit(e) { 3 } else { 1 };
        }
        if let Some(e) = cause.downcast_ref::<AdversaryError>() {
            return match e {
                AdversaryError::Coloring(c) if coloring_limit(c) => 3,
                AdversaryError::Online(o) if online_limit(o) => 3,
                AdversaryError::PreconditionViolated(_) => 2,
                _ => 1,
            };
        }
        if cause.downcast_ref::<PropertyViolation>().is_some() {
            return 1;
        }
    }
    2
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let colorer = ExactColorer::with_budget(cli.node_budget);
    let config = serde_json::to_value(&cli).expect("config serializes");
    let result = match &cli.command {
        Command::Gen(args) => gen::cmd_gen(args),
        Command::Run(args) => run::cmd_run(args, &colorer, &config),
        Command::Verify(args) => run::cmd_verify(args, &colorer, &config),
        Command::Adversary(cmd) => adversary::cmd_adversary(cmd, &colorer, &config),
        Command::Check(cmd) => check::cmd_check(cmd, &colorer, &config),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
