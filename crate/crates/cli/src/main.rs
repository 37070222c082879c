mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kohnert_core::DEFAULT_NODE_LIMIT;
use thiserror::Error;

#[derive(Parser, Debug)]
#[command(name = "kohnert", version, about = "Kohnert diagrams, moves, posets and the min/max move puzzles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form move counts and the per-column ceiling table.
    Compute {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Play an optimal chain and replay it as a self-check.
    Solve {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = ModeArg::Both)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Enumerate every diagram reachable by Kohnert moves.
    Enumerate {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        limit: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Check the closed forms against enumeration on a random corpus.
    Verify {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        limit: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Write a random diagram in cell-list format.
    Random {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Output file; stdout when absent or `-`.
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Run the HTTP puzzle service until ctrl-c.
    Serve {
        #[arg(long, default_value_t = kohnert_service::DEFAULT_PORT)]
        port: u16,
        /// Allowed CORS origin; any origin when absent.
        #[arg(long)]
        origin: Option<String>,
        /// Sessions are loaded from this file at startup and saved on shutdown.
        #[arg(long)]
        snapshot: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Cell-list or JSON file; `-` reads stdin.
    #[arg(long, short)]
    input: Option<String>,
    /// Inline cells, e.g. "1 1; 2 1; 2 2".
    #[arg(long)]
    diagram: Option<String>,
    /// Built-in diagram: small, large or lowering.
    #[arg(long)]
    preset: Option<String>,
}

#[derive(Args, Debug)]
struct CorpusArgs {
    #[arg(long, default_value_t = 5)]
    rows: u32,
    #[arg(long, default_value_t = 5)]
    cols: u32,
    #[arg(long, default_value_t = 0.3)]
    density: f64,
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Max,
    Min,
    Both,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Limit(#[from] kohnert_core::PosetError),
    #[error("{failed} of {checked} instances violated an invariant")]
    Verification { failed: usize, checked: usize },
    #[error("nothing verified: {0}")]
    Vacuous(String),
    #[error("{0}")]
    Serve(#[from] kohnert_service::ServeError),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification { .. } => 1,
            CliError::Usage(_) | CliError::Input(_) => 2,
            CliError::Vacuous(_) => 3,
            CliError::Limit(_) => 4,
            CliError::Serve(_) => 1,
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
