use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

#[derive(Debug, Parser)]
#[command(name = "codon-gas", version, about = "Codon counting, genetic-code symmetry, Grover and energy reports")]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write the report here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// TOML file with defaults for any flag. Flags given on the command line win.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ordered words, permutation classes and the partition identity.
    Count(CountArgs),
    /// Class coherence, prefix significance and violation metrics of a code.
    Analyze(AnalyzeArgs),
    /// Grover query relation and simulator.
    #[command(subcommand)]
    Grover(GroverCommand),
    /// Uncertainty-principle momentum and energy estimates.
    Energy(EnergyArgs),
    /// Emit a seeded synthetic translation table.
    Synth(SynthArgs),
}

#[derive(Debug, Args)]
pub struct CountArgs {
    /// Alphabet size. Defaults to the length of --alphabet.
    #[arg(long)]
    pub k: Option<u32>,
    /// Word length.
    #[arg(long)]
    pub r: u32,
    /// Letters in order; defaults to ACGU for k = 4 and A, B, C, ... otherwise.
    #[arg(long)]
    pub alphabet: Option<String>,
    /// Most classes to enumerate.
    #[arg(long)]
    pub cap: Option<u64>,
    /// Report the two counts without enumerating classes.
    #[arg(long)]
    pub counts_only: bool,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "source")]
pub struct TableSource {
    /// Translation table file.
    #[arg(long, group = "source")]
    pub table: Option<PathBuf>,
    /// Built-in code: `standard` or `1`.
    #[arg(long, group = "source")]
    pub builtin: Option<String>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub source: TableSource,
}

#[derive(Debug, Subcommand)]
pub enum GroverCommand {
    /// Database size that q iterations search with certainty.
    SolveN {
        #[arg(long, allow_negative_numbers = true)]
        q: i64,
    },
    /// Iteration count that makes a database of size n certain.
    SolveQ {
        #[arg(long, allow_negative_numbers = true)]
        n: f64,
    },
    /// Run q iterations on a state vector and trace the marked probability.
    Simulate {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
        /// Index of the marked item.
        #[arg(long)]
        marked: Option<u64>,
        /// Largest n the simulator will allocate.
        #[arg(long)]
        max_n: Option<u64>,
    },
}

#[derive(Debug, Args)]
pub struct EnergyArgs {
    /// Reduced Planck constant, erg·s.
    #[arg(long, allow_negative_numbers = true)]
    pub hbar: Option<f64>,
    /// Localization length, cm.
    #[arg(long, allow_negative_numbers = true)]
    pub delta_x: Option<f64>,
    /// Particle mass, g.
    #[arg(long, allow_negative_numbers = true)]
    pub mass: Option<f64>,
    /// Hydrogen-bond energy, erg.
    #[arg(long, allow_negative_numbers = true)]
    pub hbond: Option<f64>,
    /// Length multiplier for the second estimate.
    #[arg(long, allow_negative_numbers = true)]
    pub scale: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SynthKind {
    /// Independent uniform symbol per codon.
    Random,
    /// One symbol per permutation class.
    Invariant,
    /// The 20 amino acids, one per class.
    Bijective,
    /// One symbol per two-base prefix.
    Prefix,
    /// Invariant, bijective or random by seed, sometimes perturbed.
    Mixed,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum)]
    pub kind: Option<SynthKind>,
}
