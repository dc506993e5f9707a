use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use gruss_core::measure::{GridSpec, Rule};
use gruss_core::sharpness::{SearchKind, DEFAULT_DIMS};
use gruss_core::{Bracket, Field, Mode};

use crate::ingest::parse_scalar;

const AFTER_HELP: &str = "\
Input files hold one column per function, separated by commas or whitespace,
with an optional header row. Complex cells are written a+bi or a-bi; spaces
around the sign are allowed in comma-separated files.

Exit codes: 0 all certified, 1 certification failed (strict mode) or a
counterexample was found, 2 input or configuration error.";

#[derive(Debug, Parser)]
#[command(name = "gruss", version, about = "Certified Grüss-type bounds for the Chebyshev functional", after_help = AFTER_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(rename_all = "snake_case", tag = "command")]
pub enum Command {
    /// Evaluate the functional and its bounds for every pair of input columns.
    Check(CheckArgs),
    /// Estimate a covering bracket for every input column.
    Estimate(EstimateArgs),
    /// Run the seeded oracle suite over generated admissible inputs.
    Fuzz(SearchArgs),
    /// Search for inputs maximizing the ratio of functional to bound.
    Sharpness(SharpnessArgs),
}

/// `mean`, `weights:<path>` or `grid:a,b,n,rule`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum MetricSpec {
    Mean,
    Weights { path: PathBuf },
    Grid(GridSpec),
}

impl std::str::FromStr for MetricSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "mean" {
            return Ok(MetricSpec::Mean);
        }
        if let Some(path) = s.strip_prefix("weights:") {
            return Ok(MetricSpec::Weights { path: path.into() });
        }
        if let Some(rest) = s.strip_prefix("grid:") {
            let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
            let [a, b, n, rule] = parts.as_slice() else {
                return Err(format!("grid spec `{rest}` must be a,b,n,rule"));
            };
            let a: f64 = a.parse().map_err(|_| format!("bad grid start `{a}`"))?;
            let b: f64 = b.parse().map_err(|_| format!("bad grid end `{b}`"))?;
            let n: usize = n.parse().map_err(|_| format!("bad grid size `{n}`"))?;
            let rule: Rule = rule.parse()?;
            return GridSpec::new(a, b, n, rule)
                .map(MetricSpec::Grid)
                .map_err(|e| e.to_string());
        }
        Err(format!(
            "unknown metric `{s}` (expected mean, weights:<path> or grid:a,b,n,rule)"
        ))
    }
}

/// `lo,hi` with real or complex endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(transparent)]
pub struct BracketArg(pub Bracket);

impl std::str::FromStr for BracketArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lo, hi) = s
            .split_once(',')
            .ok_or_else(|| format!("bracket `{s}` must be lo,hi"))?;
        let lo = parse_scalar(lo).ok_or_else(|| format!("bad bracket endpoint `{lo}`"))?;
        let hi = parse_scalar(hi).ok_or_else(|| format!("bad bracket endpoint `{hi}`"))?;
        Bracket::new(lo, hi)
            .map(BracketArg)
            .map_err(|e| e.to_string())
    }
}

/// Comma-separated positive dimensions.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Dims(pub Vec<usize>);

impl Default for Dims {
    fn default() -> Self {
        Dims(DEFAULT_DIMS.to_vec())
    }
}

impl std::str::FromStr for Dims {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .map(|d| match d.trim().parse::<usize>() {
                Ok(n) if n > 0 => Ok(n),
                _ => Err(format!("bad dimension `{d}`")),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Dims)
    }
}

impl std::fmt::Display for Dims {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CheckArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value = "real")]
    pub field: Field,
    #[arg(long, default_value = "mean")]
    pub metric: MetricSpec,
    /// Bracket for the left member of each pair.
    #[arg(long, allow_hyphen_values = true)]
    pub bracket_x: Option<BracketArg>,
    /// Bracket for the right member of each pair.
    #[arg(long, allow_hyphen_values = true)]
    pub bracket_y: Option<BracketArg>,
    /// Estimate brackets from the data where none is given explicitly.
    #[arg(long)]
    pub estimate_brackets: bool,
    #[arg(long, default_value = "strict")]
    pub mode: Mode,
    #[arg(long)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct EstimateArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value = "real")]
    pub field: Field,
    #[arg(long)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SearchArgs {
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    #[arg(long, default_value = "real")]
    pub field: Field,
    /// Relative tolerance for inequalities.
    #[arg(long, default_value_t = gruss_core::tolerance::INEQUALITY_RTOL)]
    pub tolerance: f64,
    /// Comma-separated dimensions.
    #[arg(long, default_value_t = Dims::default())]
    pub dims: Dims,
    #[arg(long)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SharpnessArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub search: SearchArgs,
    #[arg(long, default_value = "classic")]
    pub kind: SearchKind,
}

impl Command {
    pub fn out(&self) -> Option<&PathBuf> {
        match self {
            Command::Check(a) => a.out.as_ref(),
            Command::Estimate(a) => a.out.as_ref(),
            Command::Fuzz(a) => a.out.as_ref(),
            Command::Sharpness(a) => a.search.out.as_ref(),
        }
    }
}
