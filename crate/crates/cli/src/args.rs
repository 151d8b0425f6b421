use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "monocurve",
    version,
    about = "Invariants of weighted-homogeneous maps from monomial curves to the plane"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,

    /// Write output to FILE instead of standard output.
    #[arg(long, value_name = "FILE", global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Gaps, Frobenius number, conductor, genus and symmetry of a semigroup.
    Semigroup {
        /// Comma-separated generators, e.g. 2,3.
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u32>,
    },
    /// Closed-formula invariants of one map.
    Invariants {
        #[command(flatten)]
        map: MapArgs,
        /// Also run the exponent-set oracle and report agreement.
        #[arg(long)]
        oracle: bool,
    },
    /// Compare every closed formula with its oracle count for one map.
    Verify {
        #[command(flatten)]
        map: MapArgs,
    },
    /// Check every map within the given bounds.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct MapArgs {
    /// Comma-separated weights of the source curve.
    #[arg(long, value_delimiter = ',', required = true)]
    pub weights: Vec<u32>,
    /// Weighted degrees of the two components, as L1,L2.
    #[arg(long, value_delimiter = ',', required = true, value_name = "L1,L2")]
    pub degrees: Vec<u32>,
    /// Require a complete-intersection presentation of the source semigroup.
    #[arg(long)]
    pub strict: bool,
    /// Weighted degrees of defining equations; their Milnor number must
    /// agree with the semigroup conductor.
    #[arg(long, value_delimiter = ',')]
    pub equation_degrees: Option<Vec<u32>>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 6)]
    pub max_weight: u32,
    #[arg(long, default_value_t = 12)]
    pub max_degree: u32,
    /// Largest embedding dimension; 3 adds space curves.
    #[arg(long, default_value_t = 2)]
    pub max_ambient_dim: u32,
    /// Keep only space curves with a complete-intersection presentation.
    #[arg(long)]
    pub require_ci: bool,
    /// Worker threads; 0 uses every available core.
    #[arg(long, env = "MONOCURVE_PARALLELISM", default_value_t = 0)]
    pub parallelism: usize,
}
