//! Command-line front end for the AT4(p,q,r) feasibility analyzer.
//!
//! Exit codes: 0 = ran (any verdict), 1 = oracle verification failure,
//! 2 = invalid input.

pub mod commands;
pub mod document;
pub mod render;

use std::path::PathBuf;

use at4_core::oracle::OracleName;
use clap::{Parser, Subcommand};

pub use commands::{cmd_check, cmd_enumerate, cmd_lem1_scan, cmd_oracle, cmd_table1, CliError};
pub use document::{
    CandidateReport, EnumerationRequest, ReportDocument, Request, ScanEntry, Summary, TOOL_VERSION,
};
pub use render::{render, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ORACLE_FAILURE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "at4", version, about = "Exact feasibility analysis for AT4(p,q,r)")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every gate on one parameter triple.
    #[command(allow_negative_numbers = true)]
    Check {
        p: i64,
        q: i64,
        r: i64,
        /// Edge list of a candidate mu-graph to screen.
        #[arg(long, value_name = "FILE")]
        mu_candidate: Option<PathBuf>,
        /// Ignore cited existence and nonexistence results.
        #[arg(long)]
        no_registry: bool,
    },
    /// Scan a grid of (p,q,r) and report the survivors.
    #[command(allow_negative_numbers = true)]
    Enumerate {
        #[arg(long)]
        qmin: i64,
        #[arg(long)]
        qmax: i64,
        #[arg(long, default_value_t = 1)]
        pmin: i64,
        /// Defaults to q^3 - 2q for each q.
        #[arg(long)]
        pmax: Option<i64>,
        #[arg(long)]
        no_registry: bool,
        /// Report every visited candidate, not only survivors.
        #[arg(long)]
        all: bool,
    },
    /// Regenerate the table of known and open parameter sets.
    Table1,
    /// List q with (q+r) | r(r-2)(r-1)^2(r^2-r-1) and gate the implied p.
    #[command(name = "lem1-scan", allow_negative_numbers = true)]
    Lem1Scan { r: i64 },
    /// Build a witness graph and compare it with the formulas by brute force.
    Oracle {
        #[arg(value_parser = parse_oracle)]
        name: OracleName,
    },
}

fn parse_oracle(s: &str) -> Result<OracleName, String> {
    s.parse()
}

/// What the binary prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn build_document(command: &Command) -> Result<ReportDocument, CliError> {
    match command {
        Command::Check {
            p,
            q,
            r,
            mu_candidate,
            no_registry,
        } => cmd_check(*p, *q, *r, !no_registry, mu_candidate.as_deref()),
        Command::Enumerate {
            qmin,
            qmax,
            pmin,
            pmax,
            no_registry,
            all,
        } => cmd_enumerate(&EnumerationRequest {
            q_min: *qmin,
            q_max: *qmax,
            p_min: *pmin,
            p_max: *pmax,
            registry: !no_registry,
            all: *all,
        }),
        Command::Table1 => cmd_table1(),
        Command::Lem1Scan { r } => cmd_lem1_scan(*r),
        Command::Oracle { name } => Ok(cmd_oracle(*name)),
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match build_document(&cli.command) {
        Ok(doc) => {
            let failed = doc.oracle.as_ref().is_some_and(|o| !o.all_passed());
            Outcome {
                stdout: render(&doc, cli.format),
                stderr: if failed { "oracle verification failed\n".into() } else { String::new() },
                code: if failed { EXIT_ORACLE_FAILURE } else { EXIT_OK },
            }
        }
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("at4: {e}\n"),
            code: EXIT_INVALID,
        },
    }
}
