//! `homflypt`: batch computation and verification on top of the core crate.
//!
//! Every verb prints either aligned text or, with `--json`, one JSON object
//! carrying `"schema": 1`. The exit status is 0 when every check the verb
//! performs passes, 1 when one fails and 2 on bad input.

mod commands;
mod limits;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "homflypt", version, about = "Exact Homflypt skein computations")]
pub struct Cli {
    /// Print one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The invariant of a braid closure or of a PD-code diagram, computed by
    /// the skein-relation oracle.
    Homfly {
        /// A braid word such as "n=2 s1 s1 s1".
        #[arg(long, conflicts_with = "diagram", required_unless_present = "diagram")]
        braid: Option<String>,
        /// A file holding a PD code, one crossing per line.
        #[arg(long)]
        diagram: Option<std::path::PathBuf>,
    },
    /// The Markov trace of a braid, computed in the Hecke algebra.
    Trace {
        #[arg(long)]
        braid: String,
    },
    /// Symmetrizers, Young idempotents, tableau morphisms and basis rank for
    /// `n` strands.
    IdempotentCheck {
        #[arg(long)]
        n: usize,
    },
    /// Encircling eigenvalues for every shape up to `max` cells.
    EigenTable {
        #[arg(long)]
        max: usize,
    },
    /// `c_{λ,μ}` for every pair of shapes up to `max` cells.
    CTable {
        #[arg(long)]
        max: usize,
    },
    /// Rank of the tableau basis of `H_n`.
    Rank {
        #[arg(long)]
        n: usize,
    },
    /// Reduce a surgery presentation whose dotted circles are each pierced
    /// in one direction.
    Reduce { file: std::path::PathBuf },
    /// Replay the worked knot in the connected sum of two copies of S¹×S².
    S5,
    /// Certify that a value lies in one of the localized rings.
    Certify {
        /// A rational function such as "(s^2-1)/(s*v^-1-s*v)".
        #[arg(long, allow_hyphen_values = true)]
        value: String,
        /// R, R', k_<r> or F.
        #[arg(long)]
        ring: String,
        /// Generators of the ring's monoid, e.g. `s`, `s^2-1`, `v^4-s^0`,
        /// `c([1],[1])`, `x^1-1-c([1],[])`. Repeatable.
        #[arg(long = "factor", allow_hyphen_values = true)]
        factors: Vec<String>,
    },
    /// The factor `x^r - 1 - c_{λ,μ}` and whether it is nonzero.
    Obstruction {
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command) {
        Ok(report) => {
            let out = if cli.json { report.json_text() } else { report.text };
            // a closed pipe (`| head`) is not an error worth a panic
            let _ = writeln!(std::io::stdout().lock(), "{out}");
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("homflypt: {e}");
            ExitCode::from(2)
        }
    }
}
