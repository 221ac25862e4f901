use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "yqchar",
    version,
    about = "Exact l-weights and q-characters of Yangian modules"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

/// Flags shared by every subcommand. Coordinates accept rationals and
/// formal indeterminates, e.g. `0`, `-3/2`, `x`, `x+1/2`.
#[derive(Debug, Args, Default, Clone)]
pub struct Common {
    /// Lie type such as A2, B2, G2.
    #[arg(long = "type", global = true)]
    pub lie_type: Option<String>,
    /// Dynkin node, 1-based in Bourbaki numbering.
    #[arg(long, global = true)]
    pub node: Option<usize>,
    /// KR level; for rep-check the sl2 weight parameter (rational).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub k: Option<String>,
    /// Demazure index t, or the T-system shift.
    #[arg(long, global = true)]
    pub t: Option<u32>,
    /// Spectral parameter: rational or a symbol such as `x`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub x: Option<String>,
    /// Second spectral parameter.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub y: Option<String>,
    /// Denominator point of the first asymptotic factor (two-term).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Numerator point of the first asymptotic factor (two-term).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub b: Option<String>,
    /// Positive or negative prefundamental module.
    #[arg(long, global = true, value_enum)]
    pub sign: Option<SignArg>,
    /// Height bound of truncated characters.
    #[arg(long, global = true)]
    pub height: Option<u32>,
    /// Output format, overriding the config file.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// JSON file with `default_height_bound`, `term_budget`,
    /// `stabilization_k_ceiling` and `output_format`.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the q-character of a named module.
    Qchar {
        #[arg(value_enum)]
        family: Family,
    },
    /// Verify an identity between characters.
    Verify {
        #[arg(value_enum)]
        identity: Identity,
        /// JSON list of identity specifications (for `suite`).
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Checks on explicit rank-one matrix modules.
    RepCheck {
        #[arg(value_enum)]
        check: RepCheck,
        /// Truncation dimension; omit for the finite module.
        #[arg(long)]
        dim: Option<usize>,
        /// Largest generator mode index.
        #[arg(long, default_value_t = 3)]
        modes: usize,
        /// Include every matrix in the JSON output.
        #[arg(long)]
        dump: bool,
    },
    /// Rewrite the TQ relation in the multiplicative convention.
    Translate {
        #[arg(long, value_enum)]
        to: Target,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Kr,
    Demazure,
    Asymptotic,
    Prefundamental,
    M,
    N,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    Tsystem,
    Tq,
    TwoTerm,
    Factorization,
    KrSkeleton,
    DemazureSupport,
    MSupport,
    Suite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RepCheck {
    Relations,
    Qchar,
    ThreeTerm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Multiplicative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Deserialize, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}
