//! `boolfn`: build or ingest Boolean functions, compute exact
//! query-complexity measures, verify the closed-form results at chosen
//! sizes, and emit machine-readable reports.
//!
//! Exit codes are a stable contract: 0 success, 1 verification failure,
//! 2 cap or usage violation, 3 parse error. All rationals are emitted as
//! integer pairs; nothing is ever rounded to a float.

mod gap;
mod input;
mod measure;
mod report;
mod verify;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "boolfn", version, about = "Exact query-complexity measures for Boolean functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute measures of one function and print a report
    Measure(measure::MeasureArgs),
    /// Run an exhaustive or derived check and print PASS/FAIL
    Verify(verify::VerifyArgs),
    /// CSV of (dt, cmin, cmax, instc, dt/cmin, dt/cmax) over sampled functions
    ReportGap(gap::GapArgs),
}

/// A bad flag combination or value that clap alone cannot catch.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for UsageError {}

fn main() {
    init_workers();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Measure(args) => measure::run(args),
        Command::Verify(args) => verify::run(args),
        Command::ReportGap(args) => gap::run(args),
    };
    let code = match result {
        Ok(code) => code,
        Err(err) => emit_error(&err),
    };
    std::process::exit(code);
}

/// Worker count for internal parallelism; BOOLFN_WORKERS overrides the
/// available-parallelism default.
fn init_workers() {
    if let Ok(v) = std::env::var("BOOLFN_WORKERS") {
        if let Ok(workers) = v.parse::<usize>() {
            if workers > 0 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(workers)
                    .build_global();
            }
        }
    }
}

/// Machine-readable error object on stdout, mapped exit code back.
fn emit_error(err: &anyhow::Error) -> i32 {
    let (kind, code) = if let Some(e) = err.downcast_ref::<boolfn::Error>() {
        match e {
            boolfn::Error::TooLarge { .. } => ("cap", 2),
            boolfn::Error::ParseTable(_) | boolfn::Error::ParseTree(_) => ("parse", 3),
            _ => ("usage", 2),
        }
    } else if err.downcast_ref::<UsageError>().is_some() {
        ("usage", 2)
    } else if err.downcast_ref::<std::io::Error>().is_some() {
        ("io", 3)
    } else {
        ("error", 2)
    };
    println!(
        "{}",
        serde_json::json!({ "error": { "kind": kind, "code": code, "message": err.to_string() } })
    );
    code
}
