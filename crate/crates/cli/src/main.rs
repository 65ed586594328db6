//! `coalgebra`: reports on chain-level coalgebra structures of simplicial sets.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage or
//! input errors.

mod commands;
mod input;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::Options;
use report::Format;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] coalgebra::Error),
}

#[derive(Parser, Debug)]
#[command(
    name = "coalgebra",
    version,
    about = "Exact chain-level coalgebra reports on simplicial sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Largest dimension or degree examined.
    #[arg(long, global = true, default_value_t = 5)]
    max_dim: usize,
    /// Number of tensor factors kept in truncated cofree elements.
    #[arg(long, global = true, default_value_t = 4)]
    tensor_trunc: usize,
    /// Top level of the sampled simplicial or cosimplicial checks.
    #[arg(long, global = true, default_value_t = 2)]
    level: usize,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Table,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Integral homology of a complex.
    Homology { complex: String },
    /// Ranks of the Steenrod squares on mod-2 cohomology.
    Steenrod { complex: String },
    /// Invariants of the higher diagonals on simplices and fixtures.
    VerifyDiagonal { complex: Option<String> },
    /// Group-like signs of the higher diagonals.
    Grouplike { complex: Option<String> },
    /// Linear independence of truncated tensor powers of random lattice vectors.
    InjectivityCert {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        t: usize,
    },
    /// Dold-Kan round trip of a complex's chains (or of Z in degrees 0..3).
    DoldkanRoundtrip { complex: Option<String> },
    /// Cosimplicial identities of the Z-resolution of a reduced simplicial set.
    ResolutionCheck {
        #[arg(default_value = "s1")]
        complex: String,
    },
}

fn run(cli: &Cli) -> Result<report::Report, CliError> {
    let opts = Options {
        max_dim: cli.max_dim,
        tensor_trunc: cli.tensor_trunc,
        level: cli.level,
        seed: cli.seed,
    };
    let load_opt = |c: &Option<String>| c.as_deref().map(input::load).transpose();
    match &cli.command {
        Command::Homology { complex } => commands::homology(&input::load(complex)?, opts),
        Command::Steenrod { complex } => commands::steenrod(&input::load(complex)?),
        Command::VerifyDiagonal { complex } => commands::verify_diagonal(load_opt(complex)?.as_ref(), opts),
        Command::Grouplike { complex } => commands::grouplike(load_opt(complex)?.as_ref(), opts),
        Command::InjectivityCert { rank, t } => commands::injectivity_cert(*rank, *t, opts),
        Command::DoldkanRoundtrip { complex } => commands::doldkan_roundtrip(load_opt(complex)?.as_ref(), opts),
        Command::ResolutionCheck { complex } => commands::resolution_check(&input::load(complex)?, opts),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        FormatArg::Table => Format::Table,
        FormatArg::Json => Format::Json,
    };
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.render(format));
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
