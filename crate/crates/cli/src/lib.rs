//! Command-line front end: family files in, tables or JSON out.

pub mod commands;
pub mod error;
pub mod files;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use error::{CliError, CliResult};
pub use report::Format;

#[derive(Debug, Parser)]
#[command(name = "simdim", version, about = "Strong metric dimension of graphs and graph families")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    /// Size cap for exhaustive searches (enumeration oracle, exact ρ).
    #[arg(long, env = "SIMDIM_EXACT_LIMIT", global = true)]
    pub exact_limit: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// dim_s of every member and Sd_s of the family.
    Dims {
        file: PathBuf,
        /// Also compute Sd_s by subset enumeration and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Strong resolving graph of one member, or the union over the family.
    Srgraph {
        file: PathBuf,
        #[arg(long)]
        graph: Option<String>,
    },
    /// Sd_s(G, G^c) with β_s, β, dim_s and the interior cover number.
    ComplementPair {
        file: PathBuf,
        #[arg(long)]
        graph: Option<String>,
    },
    /// Every upper and lower bound on Sd_s; exits 3 if one fails.
    Bounds { file: PathBuf },
    /// Writes a generated graph or family as a family file.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Add the complement as a second member `G^c`.
        #[arg(long)]
        with_complement: bool,
    },
    /// Checks the hitting-set reduction on an instance file.
    VerifyReduction {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Order::Ascending)]
        order: Order,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    /// `path N`
    Path,
    /// `cycle N`
    Cycle,
    /// `complete N`
    Complete,
    /// `bipartite R S`
    Bipartite,
    /// `star R`
    Star,
    /// `hypercube R`
    Hypercube,
    /// `stars R`: r + 1 stars with rotating centres
    Stars,
    /// `shared-paths N K`
    SharedPaths,
    /// `star-clique R M K`
    StarClique,
    /// `random-tree N`
    RandomTree,
    /// `random-graph N P`
    RandomGraph,
    /// `caterpillar L1 L2 ...` legs per spine vertex
    Caterpillar,
    /// `figure SELECTOR`
    Figure,
    /// `hsp2 fig6 | hsp2 N K | hsp2 file PATH`
    Hsp2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Ascending,
    Reversed,
}

/// Result of one invocation: what to print and the exit status.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    match commands::execute(&cli) {
        Ok(out) => out,
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: e.exit_code() },
    }
}
