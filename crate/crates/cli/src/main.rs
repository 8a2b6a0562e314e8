//! `taulab`: build staircase-type algebras, inspect their Tits forms,
//! enumerate support τ-tilting pairs and classify τ-tilting finiteness.

mod cache;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use taulab_core::Error;

#[derive(Parser, Debug)]
#[command(name = "taulab", version, about = "Support τ-tilting enumeration and Tits forms for bound quiver algebras")]
pub struct Cli {
    /// Characteristic of the prime field used for module computations.
    #[arg(long, global = true, default_value_t = 101)]
    pub prime: u32,
    /// Node cap for enumerations.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub cap: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Directory for cached enumeration results.
    #[arg(long, global = true, env = "TAULAB_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

/// Exactly one algebra source.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Named family, e.g. `lambda:4`, `grid:2,4`, `auslander_a:3`.
    #[arg(long)]
    pub family: Option<String>,
    /// Young diagram, e.g. `3,3,2` or `2^5`.
    #[arg(long)]
    pub staircase: Option<String>,
    /// Strictly decreasing parts, e.g. `6,4`.
    #[arg(long)]
    pub shifted: Option<String>,
    /// Quiver file in the plain-text format.
    #[arg(long)]
    pub quiver: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print vertices, arrows, relations and dimension.
    Construct {
        #[command(flatten)]
        source: Source,
        /// Write the algebra in the plain-text quiver format.
        #[arg(long, value_name = "PATH")]
        emit_quiver: Option<PathBuf>,
    },
    /// Print the doubled Gram matrix and the weak-positivity verdict.
    Tits {
        #[command(flatten)]
        source: Source,
        /// Evaluate q at a comma-separated vector instead.
        #[arg(long, value_name = "V", allow_hyphen_values = true)]
        eval: Option<String>,
        /// Coordinate bound for the searches.
        #[arg(long, default_value_t = 6)]
        bound: u32,
    },
    /// Count support τ-tilting pairs by support rank.
    Enumerate {
        #[command(flatten)]
        source: Source,
        /// Check the recursions of the family against enumerated tables.
        #[arg(long)]
        verify_recursions: bool,
    },
    /// Decide τ-tilting finiteness.
    Classify {
        #[command(flatten)]
        source: Source,
        /// Also run the Tits decision, and enumerate when small and τ-finite.
        #[arg(long)]
        cross_check: bool,
    },
}

/// Failure with a stable exit code: 2 invalid input, 3 inconclusive,
/// 4 certification failure.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn invalid(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    pub fn inconclusive(message: impl Into<String>) -> Self {
        Failure { code: 3, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded(n) => Failure::inconclusive(format!("inconclusive: cap ({n} nodes)")),
            Error::SearchTooLarge(m) => Failure::inconclusive(format!("inconclusive: {m}")),
            Error::Uncertified(_) | Error::NotDescent(_) => Failure { code: 4, message: e.to_string() },
            _ => Failure::invalid(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}
