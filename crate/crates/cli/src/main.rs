//! `adapter-chain`: command-line front end.
//!
//! Exit codes: 0 success, 2 input error, 3 no chain or UNSAT, 4 instance
//! refused by a size guard.

mod commands;
mod files;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "adapter-chain",
    version,
    about = "Optimal chaining of lossy interface adapters"
)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Find the chain that loses the fewest target methods.
    Chain {
        graph: PathBuf,
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
    },
    /// Find the highest-weight chain from any of several sources.
    Discover {
        graph: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        sources: Vec<String>,
        #[arg(long)]
        target: String,
        /// JSON object of target method name to non-negative number; unlisted
        /// methods weigh 1.
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Show which target methods survive a given adapter sequence.
    Apply {
        graph: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        chain: Vec<String>,
    },
    /// Exhaustive search; refuses large graphs.
    Oracle {
        graph: PathBuf,
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
    },
    /// Turn a DIMACS 3-CNF formula into an adapter graph plus a sidecar
    /// `{source, target, threshold}` file next to it.
    Reduce {
        cnf: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Decide a DIMACS 3-CNF formula through its adapter graph.
    SolveSat { cnf: PathBuf },
    /// Write a seeded random graph.
    Generate {
        #[arg(long, default_value_t = 4)]
        interfaces: usize,
        /// Methods per interface: `N` or `MIN..MAX` (inclusive).
        #[arg(long, default_value = "1..4", value_parser = files::parse_range)]
        methods: std::ops::RangeInclusive<usize>,
        #[arg(long, default_value_t = 6)]
        adapters: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 0.1)]
        never_rate: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Check that a graph file parses and is well formed.
    Validate { graph: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    let result = match cli.command {
        Command::Chain {
            graph,
            source,
            target,
        } => commands::chain(&graph, &source, &target, json, false),
        Command::Oracle {
            graph,
            source,
            target,
        } => commands::chain(&graph, &source, &target, json, true),
        Command::Discover {
            graph,
            sources,
            target,
            weights,
        } => commands::discover(&graph, &sources, &target, weights.as_deref(), json),
        Command::Apply { graph, chain } => commands::apply(&graph, &chain, json),
        Command::Reduce { cnf, output } => commands::reduce(&cnf, &output, json),
        Command::SolveSat { cnf } => commands::solve_sat(&cnf, json),
        Command::Generate {
            interfaces,
            methods,
            adapters,
            density,
            never_rate,
            seed,
            output,
        } => {
            let params = adapter_chain::graph::RandomGraphParams {
                interfaces,
                methods,
                adapters,
                density,
                never_rate,
                seed,
            };
            commands::generate(&params, &output, json)
        }
        Command::Validate { graph } => commands::validate(&graph, json),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("adapter-chain: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
