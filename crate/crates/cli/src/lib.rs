//! Command-line front end for `trimat`: manifests of algebras, bimodules,
//! triangular matrix algebras and their modules, with named checks.

pub mod checks;
pub mod commands;
pub mod parse;
pub mod workspace;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;
use trimat::{BaseField, Fp, Q};

use workspace::{Manifest, Workspace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed input: an unreadable file, a bad entry or an unknown name.
    #[error("input error: {0}")]
    Input(String),
    /// The input is well formed but a command's precondition fails.
    #[error("precondition failed: {0}")]
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Switch {
    On,
    Off,
}

#[derive(Debug, Parser)]
#[command(name = "trimat", version, about = "Checks on triangular matrix algebras and monomorphism categories")]
pub struct Cli {
    /// Base field: a prime p for F_p, or Q. Must agree with the manifest.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Dimension bound for enumerations, overriding manifest values.
    #[arg(long, global = true)]
    pub bound: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Switch::On)]
    pub parallel: Switch,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build every entry of a manifest and list them.
    Build { manifest: PathBuf },
    /// Run one check on some entries (all that support it by default).
    Check { manifest: PathBuf, check: String, targets: Vec<String> },
    /// Enumerate indecomposable modules of a triangular algebra and classify them.
    Enumerate { manifest: PathBuf, lambda: String },
    /// Evaluate every expected result in a manifest.
    Report { manifest: PathBuf },
    /// Apply the functor `S → F` to triples in `S` and match the images.
    RssMap { manifest: PathBuf, lambda: String, triples: Vec<String> },
    /// Verify the functor `S → F` is an equivalence on the corpus.
    RssVerify { manifest: PathBuf, lambda: String },
}

impl Command {
    fn manifest(&self) -> &PathBuf {
        match self {
            Command::Build { manifest }
            | Command::Check { manifest, .. }
            | Command::Enumerate { manifest, .. }
            | Command::Report { manifest }
            | Command::RssMap { manifest, .. }
            | Command::RssVerify { manifest, .. } => manifest,
        }
    }
}

/// Output and exit code of a command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

impl Outcome {
    pub fn ok(output: String) -> Self {
        Outcome { output, code: 0 }
    }
}

fn dispatch<F: trimat::Field>(cli: &Cli, manifest: &Manifest) -> Result<Outcome, CliError> {
    let ws = Workspace::<F>::build(manifest)?;
    commands::execute(cli, &ws)
}

fn run_inner(cli: &Cli) -> Result<Outcome, CliError> {
    let manifest = Manifest::load(cli.command.manifest())?;
    match manifest.resolve_field(cli.field.as_deref())? {
        BaseField::Rationals => dispatch::<Q>(cli, &manifest),
        BaseField::Prime(2) => dispatch::<Fp<2>>(cli, &manifest),
        BaseField::Prime(3) => dispatch::<Fp<3>>(cli, &manifest),
        BaseField::Prime(5) => dispatch::<Fp<5>>(cli, &manifest),
        BaseField::Prime(7) => dispatch::<Fp<7>>(cli, &manifest),
        BaseField::Prime(11) => dispatch::<Fp<11>>(cli, &manifest),
        BaseField::Prime(13) => dispatch::<Fp<13>>(cli, &manifest),
        BaseField::Prime(p) => {
            Err(CliError::Input(format!("unsupported field F_{p}: supported primes are 2, 3, 5, 7, 11, 13")))
        }
    }
}

/// Runs a parsed command line. Errors become output on the error path with
/// their exit code.
pub fn run(cli: &Cli) -> Outcome {
    let result = match cli.parallel {
        Switch::On => run_inner(cli),
        Switch::Off => match rayon::ThreadPoolBuilder::new().num_threads(1).build() {
            Ok(pool) => pool.install(|| run_inner(cli)),
            Err(e) => Err(CliError::Input(format!("cannot start a thread pool: {e}"))),
        },
    };
    result.unwrap_or_else(|e| Outcome { output: format!("error: {e}\n"), code: e.exit_code() })
}
