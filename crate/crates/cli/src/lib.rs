//! The `homyb` command-line tool.
//!
//! Exit codes: 0 when every requested check holds, 1 when a check fails,
//! 2 on usage or input errors.

pub mod commands;
pub mod files;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Structure(#[from] homyb::StructureError),
    #[error(transparent)]
    Build(#[from] homyb::BuildError),
    #[error(transparent)]
    Verify(#[from] homyb::VerifyError),
    #[error(transparent)]
    Catalog(#[from] homyb::CatalogError),
    #[error(transparent)]
    Scalar(#[from] homyb::ScalarError),
    #[error(transparent)]
    Tensor(#[from] homyb::TensorError),
}

impl CliError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_path_buf(),
            source,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "homyb", version, about = "Build and verify Hom-Yang-Baxter operators exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms of a structure file.
    Axioms {
        file: PathBuf,
        /// For Hom-Lie algebras, also require α to preserve the bracket.
        #[arg(long)]
        require_multiplicative: bool,
        /// Write a JSON report to this path.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Build a solution operator and write its matrix as JSON.
    Build {
        file: PathBuf,
        #[arg(long)]
        construction: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Output path; stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one check on a constructed or supplied operator.
    Verify(VerifyArgs),
    /// Built-in examples.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    /// Expression for λ; new identifiers become parameters.
    #[arg(long, default_value = "lam", allow_hyphen_values = true)]
    pub lambda: String,
    /// Expression for ν.
    #[arg(long, default_value = "nu", allow_hyphen_values = true)]
    pub nu: String,
    /// Coordinates of u for Lie constructions, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub u: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Alpha,
    Hybe,
    Inverse,
    System,
    Chybe,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub file: PathBuf,
    /// Construction id, e.g. thm2.1, cor2.2, thm5.2.
    #[arg(long, conflicts_with = "operator")]
    pub construction: Option<String>,
    /// Operator file written by `build`.
    #[arg(long)]
    pub operator: Option<PathBuf>,
    /// Inverse operator file, for `--check inverse` with `--operator`.
    #[arg(long, requires = "operator")]
    pub inverse_operator: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub check: CheckKind,
    #[command(flatten)]
    pub params: ParamArgs,
    /// Power of α on the bracket leg of r (CHYBE).
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub m: i64,
    /// Power of α on the u leg of r (CHYBE).
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub n: i64,
    /// Basis indices i,j with r = α^m([e_i,e_j])⊗α^n(u); all pairs if omitted (CHYBE).
    #[arg(long)]
    pub pair: Option<String>,
    /// Explicit coordinates of r over V⊗V, comma separated (CHYBE).
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["pair", "u"])]
    pub r: Option<String>,
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// List entry ids with descriptions.
    List,
    /// Print an entry as a structure file.
    Export {
        id: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify every entry.
    VerifyAll {
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

/// Runs a parsed command; diagnostics go to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Axioms {
            file,
            require_multiplicative,
            json,
        } => commands::axioms(&file, require_multiplicative, json.as_deref(), out),
        Command::Build {
            file,
            construction,
            params,
            out: path,
        } => commands::build(&file, &construction, &params, path.as_deref(), out, err),
        Command::Verify(args) => commands::verify(&args, out, err),
        Command::Catalog { action } => commands::catalog_cmd(&action, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
