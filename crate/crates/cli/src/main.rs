//! `catdyn`: check and derive finite monoid actions described in JSON.
//!
//! Exit codes: 0 when every law holds, 1 when a law fails (the report is
//! still written), 2 for unreadable, malformed or oversized input.

mod commands;
mod document;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::Operator;
use document::InputError;
use report::Report;

#[derive(Debug, Parser)]
#[command(name = "catdyn", version, about = "Check and derive finite monoid actions")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Largest derived carrier (path space or observable space) to build.
    #[arg(long, global = true, env = "CATDYN_MAX_CARRIER", default_value_t = 1_000_000)]
    max_carrier: usize,

    /// Emit the report as JSON (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,

    /// Emit the report as plain text.
    #[arg(long, global = true)]
    text: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the monoid and flow laws.
    Validate { file: PathBuf },
    /// Build the shift, transfer or Koopman system on a function space.
    Derive {
        file: PathBuf,
        #[arg(value_enum)]
        which: Operator,
        /// Size of the observable codomain for the Koopman operator.
        #[arg(long, default_value_t = 2)]
        observable_codomain: usize,
    },
    /// The subshift of genuine orbit paths.
    Subshift { file: PathBuf },
    /// The path traced out by every state.
    Orbits { file: PathBuf },
    /// The states fixed by the whole action.
    Stationary { file: PathBuf },
    /// The transition graph of each generator, in DOT.
    ExportDot { file: PathBuf },
}

fn run(cli: &Cli) -> Result<(Report, Option<String>), InputError> {
    let cap = cli.max_carrier;
    match &cli.command {
        Command::Validate { file } => Ok((commands::validate(&document::load(file)?)?, None)),
        Command::Derive { file, which, observable_codomain } => Ok((
            commands::derive(&document::load(file)?, *which, *observable_codomain, cap)?,
            None,
        )),
        Command::Subshift { file } => Ok((commands::subshift_report(&document::load(file)?, cap)?, None)),
        Command::Orbits { file } => Ok((commands::orbits(&document::load(file)?, cap)?, None)),
        Command::Stationary { file } => Ok((commands::stationary(&document::load(file)?)?, None)),
        Command::ExportDot { file } => commands::export_dot(&document::load(file)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, dot) = match run(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let body = match (&dot, cli.text) {
        (Some(dot), _) if report.succeeded() => dot.clone(),
        (_, true) => report.to_text(),
        (_, false) => report.to_json(),
    };
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(body.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(2);
    }
    if report.succeeded() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
