use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Electoral competition with rationally inattentive voters.
#[derive(Debug, Parser)]
#[command(name = "inattentive", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args, Default)]
pub struct Common {
    /// Scenario file (JSON).
    #[arg(long, global = true)]
    pub scenario: Option<PathBuf>,

    /// Output directory; tables go to stdout when omitted.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Seed for randomized inputs, recorded in every header.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Reproduction tolerance.
    #[arg(long, global = true, default_value_t = 0.002)]
    pub tolerance: f64,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Parse and check a scenario.
    Validate,
    /// Optimal attention of each voter group under a strategy assignment.
    SolveAttention {
        /// β's policy for each candidate type, comma separated.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        policies: Vec<f64>,
        /// Only this voter type.
        #[arg(long, allow_negative_numbers = true)]
        t: Option<f64>,
    },
    /// All symmetric equilibria on the scenario's grid.
    Enumerate,
    /// Two-policy pairs that keep a voter attentive.
    AttentionSet {
        /// Voter type; defaults to the leftmost partisan group closest to 0.
        #[arg(long, allow_negative_numbers = true)]
        t: Option<f64>,
    },
    /// Compare attention sets before and after garbling the news.
    Garble {
        /// Kernel file: {"factorized": [[..]]} or {"joint": [[..]]}.
        #[arg(long, conflicts_with = "shift")]
        kernel: Option<PathBuf>,
        /// Two-signal kernel moving this much mass to the high signal.
        #[arg(long)]
        shift: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        t: Option<f64>,
    },
    /// Equilibrium statistics over a parameter grid.
    Sweep(SweepArgs),
    /// Recompute a reference table or figure and compare.
    Reproduce {
        #[arg(value_enum)]
        target: Target,
    },
}

#[derive(Debug, Clone, Args, Default)]
pub struct SweepArgs {
    /// Run manifest (JSON); flags below are ignored when given.
    #[arg(long)]
    pub manifest: Option<PathBuf>,
    /// Attention cost: `a,b,c`, `from:to:steps` or `from:to:steps:log`.
    #[arg(long)]
    pub mu: Option<String>,
    /// Slant of the news technology.
    #[arg(long)]
    pub xi: Option<String>,
    /// Commitment probability.
    #[arg(long)]
    pub eta: Option<String>,
    /// Dissemination cost.
    #[arg(long)]
    pub cost: Option<String>,
    /// Proposal pair for the commitment boundary.
    #[arg(long, value_delimiter = ',', num_args = 2)]
    pub pair: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Table1,
    Table2,
    Figure2,
    Figure3,
}

impl Target {
    pub fn name(self) -> &'static str {
        match self {
            Target::Table1 => "table1",
            Target::Table2 => "table2",
            Target::Figure2 => "figure2",
            Target::Figure3 => "figure3",
        }
    }
}
