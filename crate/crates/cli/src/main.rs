//! Command-line surface: validate, split, decompose, analyze, builtin.
//! Exit codes: 0 all checks pass, 1 a check failed, 2 input or build error.

mod run;

use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use trilie::connect::Mode;

#[derive(Parser)]
#[command(name = "trilie", version, about = "Exact validator and decomposer for split 3-Lie-Rinehart color algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an algebra file and run every axiom validator.
    Validate {
        path: PathBuf,
        /// Write the machine-readable report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Extract the root and weight systems over the declared Cartan.
    Split {
        path: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Build the class ideals and verify the decomposition theorems.
    Decompose {
        path: PathBuf,
        /// Connection mode for the root relation.
        #[arg(long, default_value = "strict")]
        mode: Mode,
        /// Which side to decompose.
        #[arg(long, default_value = "both")]
        target: Target,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Radicals, tightness, pairing, structural predicates and probes.
    Analyze {
        path: PathBuf,
        #[arg(long, default_value = "strict")]
        mode: Mode,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Emit a builtin instance as an algebra file.
    Builtin {
        name: String,
        /// Write the file here (stdout otherwise).
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Target {
    #[value(name = "L", alias = "l")]
    L,
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "both")]
    Both,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Validate { path, json } => run::cmd_validate(&path, json.as_deref()),
        Command::Split { path, json } => run::cmd_split(&path, json.as_deref()),
        Command::Decompose {
            path,
            mode,
            target,
            json,
        } => run::cmd_decompose(&path, mode, target == Target::L, target == Target::A, json.as_deref()),
        Command::Analyze { path, mode, json } => run::cmd_analyze(&path, mode, json.as_deref()),
        Command::Builtin { name, emit } => run::cmd_builtin(&name, emit.as_deref()),
    };
    ExitCode::from(code)
}
