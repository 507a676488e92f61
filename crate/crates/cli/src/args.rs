use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "mtg",
    version,
    about = "Build, represent, verify and search multithreshold graphs"
)]
pub struct Cli {
    /// Machine-readable JSON on stdout instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the graph of a family spec.
    Build {
        spec: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Construct and verify a representation; writes a certificate bundle.
    Construct {
        spec: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a representation against a graph.
    Verify {
        #[command(flatten)]
        input: RepInput,
    },
    /// Construct, verify and compare against the closed-form threshold number.
    Certify { spec: String },
    /// Threshold numbers from formulas or exhaustive search.
    Theta {
        #[command(subcommand)]
        mode: ThetaMode,
    },
    /// Color the triangle components by region and check the coloring rules.
    Color {
        #[command(flatten)]
        input: RepInput,
    },
    /// Export a graph in another format.
    Export {
        #[command(subcommand)]
        format: ExportFormat,
    },
}

#[derive(Debug, Args)]
pub struct RepInput {
    /// Graph JSON, or a bundle with a "graph" entry.
    #[arg(short, long)]
    pub graph: PathBuf,
    /// Representation JSON, or a bundle with a "representation" entry.
    #[arg(short, long)]
    pub rep: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum ThetaMode {
    Formula {
        spec: String,
    },
    Oracle {
        /// Graph JSON; alternatively give --spec.
        #[arg(short, long, required_unless_present = "spec", conflicts_with = "spec")]
        graph: Option<PathBuf>,
        #[arg(long)]
        spec: Option<String>,
        #[arg(long, default_value_t = 6)]
        max_k: usize,
        #[arg(long)]
        budget_nodes: Option<u64>,
        /// Wall-clock limit in seconds.
        #[arg(long)]
        timeout: Option<f64>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Write the witness representation here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ExportFormat {
    Dot {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}
