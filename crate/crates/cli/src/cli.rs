use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::range::IntList;

/// Every global flag can also be set through the environment variable
/// shown in its help (prefix `REGSPEC_`).
#[derive(Debug, Parser)]
#[command(name = "regspec", version, about = "Exact spectral moments of weighted random regular graphs")]
pub struct Cli {
    /// Master seed for stochastic commands (generated and recorded when absent).
    #[arg(long, global = true, env = "REGSPEC_SEED")]
    pub seed: Option<u64>,

    /// Output file (capps, moments) or directory (simulate, compare).
    #[arg(long, global = true, env = "REGSPEC_OUTPUT")]
    pub output: Option<PathBuf>,

    /// Table format: csv, or JSON lines (default).
    #[arg(long, global = true, value_enum, env = "REGSPEC_FORMAT")]
    pub format: Option<Format>,

    /// Worker threads for Monte Carlo trials (default: all cores).
    #[arg(long, global = true, env = "REGSPEC_THREADS")]
    pub threads: Option<usize>,

    /// Largest pattern length the enumerator will accept.
    #[arg(long, global = true, env = "REGSPEC_MAX_LENGTH")]
    pub max_length: Option<usize>,

    /// TOML config file, or a manifest.json written by an earlier run.
    #[arg(long, global = true, env = "REGSPEC_CONFIG")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "jsonl",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate closed acyclic path patterns of one length.
    Capps(CappsArgs),
    /// Exact moment computations.
    Moments {
        #[command(subcommand)]
        kind: MomentsCommand,
    },
    /// Sample the weighted ensemble and write moment and density tables.
    Simulate(EnsembleArgs),
    /// Compare Monte Carlo moments with the exact predictions.
    Compare(CompareArgs),
}

#[derive(Debug, Args)]
pub struct CappsArgs {
    /// Pattern length 2k.
    #[arg(long)]
    pub length: usize,
    /// Keep only patterns of this signature class, e.g. `4,2,2`.
    #[arg(long)]
    pub signature: Option<String>,
    /// Emit the counting summary instead of the patterns.
    #[arg(long)]
    pub summary: bool,
}

#[derive(Debug, Subcommand)]
pub enum MomentsCommand {
    /// Evaluate the moment expansion at integer d.
    Expand {
        #[arg(long)]
        order: IntList,
        #[arg(long)]
        d: IntList,
        /// Weight distribution, e.g. `semicircle:1/4`.
        #[arg(long, default_value = "constant")]
        weights: String,
    },
    /// Expansion with d symbolic: per-signature coefficient polynomials, or
    /// a single polynomial when weights are given.
    Symbolic {
        #[arg(long)]
        order: IntList,
        #[arg(long)]
        weights: Option<String>,
    },
    /// Eigendistribution moments.
    Eigen {
        #[arg(long)]
        d: IntList,
        /// Largest even order.
        #[arg(long)]
        max: usize,
    },
    /// Moments of Kesten's measure.
    Kesten {
        #[arg(long)]
        d: IntList,
        #[arg(long)]
        order: IntList,
        /// Add a column integrating the density numerically.
        #[arg(long)]
        numeric: bool,
    },
    /// `d^2 (mu_{W_d}(2k) - c_{2k})`.
    Deviation {
        #[arg(long)]
        d: IntList,
        #[arg(long)]
        order: IntList,
    },
}

#[derive(Clone, Debug, Default, Args)]
pub struct EnsembleArgs {
    /// Number of vertices.
    #[arg(long = "N")]
    pub n: Option<usize>,
    /// Degree.
    #[arg(long)]
    pub d: Option<usize>,
    /// constant | rademacher | semicircle[:var] | gaussian[:var] | uniform[:a]
    #[arg(long)]
    pub weights: Option<String>,
    /// Independent graphs to sample (default 100).
    #[arg(long)]
    pub trials: Option<usize>,
    /// Largest moment order measured (default 8).
    #[arg(long)]
    pub max_order: Option<usize>,
    /// Histogram bins.
    #[arg(long)]
    pub bins: Option<usize>,
    /// Skip eigendecomposition and the density table.
    #[arg(long)]
    pub no_density: bool,
    /// Rejections allowed per graph before giving up.
    #[arg(long)]
    pub max_attempts: Option<usize>,
}

#[derive(Clone, Debug, Default, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub ensemble: EnsembleArgs,
    /// Orders to gate on (default: even orders up to --max-order).
    #[arg(long)]
    pub orders: Option<IntList>,
    /// Standard errors allowed.
    #[arg(long)]
    pub z: Option<f64>,
    /// Relative allowance.
    #[arg(long)]
    pub rel: Option<f64>,
    /// Finite-size allowance coefficient, times d^k / N.
    #[arg(long)]
    pub finite_n: Option<f64>,
}
