use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "ratext", version, about = "Rational extensions of the HO, Morse and ERKC potentials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate the base and extended potentials.
    Extend(CaseArgs),
    /// Analytic spectrum of the extension next to the eigen-solver values.
    Spectrum(CaseArgs),
    /// Tabulate a closed-form eigenstate of the extension.
    Eigenstate {
        #[command(flatten)]
        case: CaseArgs,
        /// Physical level k, or "-" for the extra state.
        #[arg(long, allow_hyphen_values = true)]
        level: String,
    },
    /// Run the verification checks on one case or on a matrix.
    Verify {
        #[command(flatten)]
        case: CaseArgs,
        /// Named case matrix; replaces the single case.
        #[arg(long, value_enum)]
        matrix: Option<Matrix>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Ho,
    Morse,
    Erkc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Tree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Matrix {
    Default,
}

#[derive(Debug, Clone, Args)]
pub struct CaseArgs {
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
    #[arg(long)]
    pub a: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    pub b: f64,
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    pub gamma: f64,
    /// Order of the regularized seed.
    #[arg(long)]
    pub n: Option<usize>,
    /// Highest physical level listed or checked.
    #[arg(long)]
    pub kmax: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub grid_lo: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub grid_hi: Option<f64>,
    /// Grid size; RATEXT_GRID_POINTS sets the default.
    #[arg(long)]
    pub grid_points: Option<usize>,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Allow extensions that are singular on the family domain (odd-n HO on x > 0).
    #[arg(long)]
    pub non_conforming: bool,
}
