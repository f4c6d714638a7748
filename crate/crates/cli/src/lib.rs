//! The `compat` command-line tool as a library, so that tests can drive it
//! without spawning processes.
//!
//! [`run`] parses arguments, executes one subcommand and returns the text it
//! would print together with its exit code: 0 for success, 1 for a "NO"
//! verdict, 2 for usage or validation errors and 3 when `--oracle` finds a
//! disagreement.

pub mod commands;
pub mod io;
pub mod report;
pub mod svg;

use clap::{Args, Parser, Subcommand};
use std::ffi::OsString;
use std::fmt;
use std::path::PathBuf;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Invalid(String),
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Invalid(_) => 2,
            CliError::Mismatch(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Invalid(m) => f.write_str(m),
            CliError::Mismatch(m) => write!(f, "oracle mismatch: {m}"),
        }
    }
}

impl From<compat_core::Error> for CliError {
    fn from(e: compat_core::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "compat", version, about = "Compatible triangulations of simple polygons")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Cross-check against the brute-force implementations.
    #[arg(long, global = true)]
    pub oracle: bool,
    /// Seed for randomized subcommands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Append a JSON run report to this file.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
    /// Write an SVG drawing to this file.
    #[arg(long, global = true)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ear-clipping triangulation of a polygon.
    Triangulate {
        polygon: PathBuf,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Vertex-visibility queries.
    Visquery {
        polygon: PathBuf,
        #[arg(required_unless_present = "all")]
        i: Option<usize>,
        #[arg(required_unless_present = "all")]
        j: Option<usize>,
        /// Print the full visibility table.
        #[arg(long, conflicts_with_all = ["i", "j"])]
        all: bool,
    },
    /// Rotations of Q compatible with a fixed triangulation of P.
    RotationSearch {
        p: PathBuf,
        triangulation: PathBuf,
        q: PathBuf,
        /// Write one witness triangulation file per rotation here.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
    },
    /// Decide compatibility under the identity correspondence.
    Compat {
        p: PathBuf,
        q: PathBuf,
        /// Write the shared triangulation to this file.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Count triangulations inside a graph, or shared by two polygons.
    Count {
        /// Graph file; otherwise give two polygon files.
        #[arg(long, conflicts_with = "polygons")]
        graph: Option<PathBuf>,
        #[arg(num_args = 2, required_unless_present = "graph")]
        polygons: Vec<PathBuf>,
        /// Matrix kernel.
        #[arg(long, value_enum, default_value_t = KernelChoice::Classical)]
        kernel: KernelChoice,
    },
    /// Boolean matrix product through the interval DP, checked cell by cell.
    Reduction {
        /// Matrix size.
        m: usize,
        /// Probability of a one in the random matrices.
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        /// Write the gadget graph to this file.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Random simple polygon.
    Gen {
        n: usize,
        #[arg(long)]
        reflex_fraction: Option<f64>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// SVG drawing of a polygon and optional triangulation.
    Render {
        polygon: PathBuf,
        triangulation: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum KernelChoice {
    Classical,
    Strassen,
}

/// Everything a run prints, and how it exits.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { stderr: text, code: 2, ..Output::default() }
            } else {
                Output { stdout: text, ..Output::default() }
            };
        }
    };
    match commands::execute(&cli) {
        Ok(out) => out,
        Err(e) => Output { stderr: format!("{e}\n"), code: e.exit_code(), ..Output::default() },
    }
}
