//! `specgap` command-line front end.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "specgap",
    version,
    about = "Cubic graphs with no eigenvalues in (-1, 1)"
)]
pub struct Cli {
    /// Machine-readable JSON on stdout.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Base,
    Ks,
    Gm,
}

#[derive(Debug, Args)]
pub struct Input {
    /// File of graph6 lines; stdin when absent.
    #[arg(long = "in", value_name = "FILE")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a member of one of the families.
    Family {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        k: usize,
        /// Print only the graph6 line.
        #[arg(long)]
        graph6: bool,
    },
    /// Dump sporadic registry rows.
    Sporadic {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        id: Option<usize>,
        #[arg(long)]
        all: bool,
    },
    /// Gap certificate for each input graph.
    Certify(Input),
    /// Characteristic polynomial of each input graph.
    Charpoly(Input),
    /// Count real roots in the open interval (a, b).
    Sturm {
        /// Coefficients low to high, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Count with multiplicity.
        #[arg(long)]
        multiplicity: bool,
    },
    /// Bipartite double of each input graph.
    Double(Input),
    /// Distance-two graph of each input graph.
    D2(Input),
    /// Line graph of each input graph.
    Linegraph(Input),
    /// Replace the listed vertices by triangles.
    Truncate {
        #[command(flatten)]
        input: Input,
        /// Comma-separated vertex list.
        #[arg(long)]
        vertices: String,
    },
    /// Non-bipartite graphs whose bipartite double is the input.
    Preimages(Input),
    /// Triangle decompositions as geometries.
    Decompose {
        #[command(flatten)]
        input: Input,
        /// Stop after this many decompositions.
        #[arg(long)]
        limit: Option<usize>,
        /// Keep labelled decompositions instead of one per automorphism orbit.
        #[arg(long)]
        labelled: bool,
    },
    /// Generate, certify and identify every connected cubic graph.
    Classify {
        #[arg(long, default_value_t = 16)]
        max_n: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Polynomial and covering identities for the families.
    VerifyIdentities {
        #[arg(long, default_value_t = 8)]
        k_max: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(commands::Failure::Verification { out, message }) => {
            print!("{out}");
            eprintln!("verification failed: {message}");
            ExitCode::from(1)
        }
        Err(commands::Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
