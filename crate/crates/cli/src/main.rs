//! `fockreg`: symbols, regularization and canonical bases from the shell.
//!
//! Exit codes: 0 on success or a clean verification, 1 when a verification
//! finds a violation (or the library reports a broken invariant), 2 on usage
//! and parse errors.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fockreg::{Charge, Multipartition};
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(name = "fockreg", version, about = "Regularization of multipartitions and canonical bases of Fock spaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write the output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Worker threads for sweeps; 0 uses every core.
    #[arg(long, default_value_t = 1, global = true)]
    pub jobs: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Args)]
pub struct Target {
    /// Multicharge, e.g. `0,1,1`.
    #[arg(long, allow_hyphen_values = true)]
    pub charge: Charge,

    /// Multipartition, e.g. `3,1||6,2` (components separated by `|`).
    #[arg(long, allow_hyphen_values = true)]
    pub mp: Multipartition,

    /// Symbol size; the minimal admissible size when omitted.
    #[arg(long)]
    pub h: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the shifted symbol of a multipartition.
    Symbol(Target),
    /// Regularize a multipartition and report R and its local terms.
    Regularize(Target),
    /// List or test cylindric multipartitions.
    Cylindric {
        #[command(subcommand)]
        action: CylindricAction,
    },
    /// Compare two multipartitions of the same rank in the dominance order.
    Dominance {
        #[arg(long, allow_hyphen_values = true)]
        left: Multipartition,
        #[arg(long, allow_hyphen_values = true)]
        right: Multipartition,
    },
    /// Peel step of a cylindric multipartition, or the whole chain.
    Peel {
        #[command(flatten)]
        target: Target,
        /// Follow the peel steps down to the empty multipartition.
        #[arg(long)]
        chain: bool,
    },
    /// Apply the divided power f_j^(r) to a multipartition.
    ApplyF {
        #[arg(long, allow_hyphen_values = true)]
        charge: Charge,
        #[arg(long, allow_hyphen_values = true)]
        mp: Multipartition,
        /// Operator index (charged, independent of the symbol size).
        #[arg(long, allow_hyphen_values = true)]
        j: i64,
        /// Divided power.
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
    /// Canonical basis of rank n, as a decomposition matrix by default.
    Canonical {
        #[arg(long, allow_hyphen_values = true)]
        charge: Charge,
        #[arg(short = 'n', long = "rank")]
        n: usize,
        /// Evaluate every coefficient at v = 1.
        #[arg(long, conflicts_with = "basis")]
        evaluate: bool,
        /// Print the basis vectors instead of the matrix.
        #[arg(long)]
        basis: bool,
    },
    /// Exhaustively check the regularization theorem or its lemmas.
    Verify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        /// Multicharge to sweep; repeat for several.
        #[arg(long = "charge", required = true, allow_hyphen_values = true)]
        charges: Vec<Charge>,
        #[arg(long, default_value_t = 0)]
        min_n: usize,
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CylindricAction {
    /// All cylindric multipartitions of rank n.
    List {
        #[arg(long, allow_hyphen_values = true)]
        charge: Charge,
        #[arg(short = 'n', long = "rank")]
        n: usize,
    },
    /// Whether one multipartition is cylindric.
    Test {
        #[arg(long, allow_hyphen_values = true)]
        charge: Charge,
        #[arg(long, allow_hyphen_values = true)]
        mp: Multipartition,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    Regularization,
    Lemmas,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Library(#[from] fockreg::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Library(fockreg::Error::Internal(_)) => 1,
            _ => 2,
        }
    }
}

/// What a command produced: the text for stdout and whether a
/// verification failed.
pub struct Rendered {
    pub body: String,
    pub violation: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(rendered) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &rendered.body),
                None => {
                    print!("{}", rendered.body);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {}", CliError::from(e));
                return ExitCode::from(2);
            }
            ExitCode::from(u8::from(rendered.violation))
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
