//! Command-line interface: exact Zariski decompositions, fundamental cycles
//! and analytic-spread classification reports from dual-graph files.
//!
//! Exit codes: 0 success, 1 I/O or parse error, 2 validation failure,
//! 3 internal certificate failure (never expected; a bug trap).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod error;
mod report;
mod schema;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Parser)]
#[command(name = "antinef", version, about = "Exact divisor computations on resolution dual graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a configuration and print its negative-definiteness certificate.
    Check {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Compute the Zariski decomposition of the divisor in the file.
    Decompose {
        path: PathBuf,
        /// Also run the 2^r enumeration oracle and assert agreement.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Full classification report: decomposition, spread class, redundant
    /// valuations, symbolic form, Hilbert slope.
    Classify {
        path: PathBuf,
        /// "fund" for the fundamental cycle, or a path to a JSON object
        /// naming an integral G divisor.
        #[arg(long, default_value = "fund")]
        g: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Compute the fundamental cycle of the configuration.
    Fundcycle {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Classify every *.json in a directory, writing one *.report.json each.
    Batch {
        dir: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Alias for `decompose --oracle`.
    Oracle {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn run(cli: Cli) -> Result<i32, error::CliError> {
    match cli.command {
        Command::Check { path, format } => commands::cmd_check(&path, format).map(|()| 0),
        Command::Decompose { path, oracle, format } => {
            commands::cmd_decompose(&path, oracle, format).map(|()| 0)
        }
        Command::Classify { path, g, format } => {
            commands::cmd_classify(&path, &g, format).map(|()| 0)
        }
        Command::Fundcycle { path, format } => commands::cmd_fundcycle(&path, format).map(|()| 0),
        Command::Batch { dir, jobs } => commands::cmd_batch(&dir, jobs),
        Command::Oracle { path, format } => {
            commands::cmd_decompose(&path, true, format).map(|()| 0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
