//! `specht`: enumerate weights, build Boltje–Maisch complexes and check
//! them, with an on-disk cache of q-Schur structure constants.
//!
//! Exit status: 0 when every requested check passes, 1 when one fails,
//! 2 for usage errors.

mod cache;
mod job;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use job::{Job, Target};

#[derive(Parser)]
#[command(name = "specht", version, about = "Builds Boltje–Maisch complexes over Q, Z and F_p and certifies them exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the weights Λ(n, r), the partitions among them and dim S(n, r).
    Enumerate(Options),
    /// Build the complex for λ and report its ranks.
    Build(Options),
    /// Run checks; `all` selects every target.
    Check {
        #[command(flatten)]
        options: Options,
        #[arg(required = true, value_enum)]
        targets: Vec<Target>,
    },
    /// Manage the structure-constant cache.
    #[command(subcommand)]
    Cache(CacheCommand),
}

#[derive(Subcommand)]
enum CacheCommand {
    /// Compute every structure constant of S(n, r) and store them under --cache.
    Warm(Options),
}

#[derive(Args, Clone, Debug)]
pub struct Options {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    /// Comma-separated parts, e.g. 2,1,0.
    #[arg(long, value_name = "a,b,c")]
    lambda: Option<String>,
    /// q, zz or fp:<p>.
    #[arg(long, default_value = "q")]
    ring: String,
    /// An integer or num/den.
    #[arg(long, default_value = "1")]
    q: String,
    /// partitions or compositions.
    #[arg(long, default_value = "compositions")]
    pool: String,
    /// Directory holding structure-constant tables.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (0: one per core).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Record wall-clock time in the report (otherwise `elapsed_ms` is null).
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("specht: {e}");
            ExitCode::from(2)
        }
    }
}

/// Returns whether every requested check passed.
fn run(command: Command) -> Result<bool, CliError> {
    let start = Instant::now();
    let (options, job) = match command {
        Command::Enumerate(o) => {
            let job = Job::enumerate(&o)?;
            (o, job)
        }
        Command::Build(o) => {
            let job = Job::build(&o)?;
            (o, job)
        }
        Command::Check { options, targets } => {
            let job = Job::check(&options, &targets)?;
            (options, job)
        }
        Command::Cache(CacheCommand::Warm(o)) => {
            let job = Job::warm(&o)?;
            (o, job)
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {} workers: {e}", options.jobs)))?;
    let mut outcome = pool.install(|| job.run(options.cache.as_deref()))?;
    if options.timing {
        outcome.set_elapsed(start.elapsed().as_millis() as u64);
    }
    for line in outcome.failures() {
        eprintln!("FAIL {line}");
    }
    let mut text = serde_json::to_string_pretty(&outcome.report).expect("reports serialize");
    text.push('\n');
    match &options.out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })?,
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io { path: "standard output".into(), source })?,
    }
    Ok(outcome.passed())
}
