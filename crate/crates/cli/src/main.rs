use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rideshare_cli::commands::{self, BenchPlan, Suite};
use rideshare_cli::{parse_instance, CliError, SolutionFile};
use rideshare_core::gen::GenConfig;
use rideshare_core::{Scenario, Topology};

#[derive(Parser)]
#[command(
    name = "rideshare",
    version,
    about = "Exact single-vehicle ride sharing on paths and cycles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a path or cycle instance exactly.
    Solve {
        #[arg(long)]
        input: PathBuf,
        /// Include the fully expanded node sequence.
        #[arg(long)]
        emit_ride: bool,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Solve general graphs with the exhaustive oracle.
        #[arg(long)]
        force_oracle: bool,
    },
    /// Exhaustive state-space search; works on any small graph.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        /// Largest allowed n * 3^|C|.
        #[arg(long)]
        budget: Option<u64>,
        /// Ignore the state budget.
        #[arg(long)]
        force_oracle: bool,
        #[arg(long)]
        emit_ride: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a solution file against an instance.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        solution: PathBuf,
    },
    /// Write a seeded random instance.
    Gen {
        #[arg(long, value_enum)]
        topology: TopologyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        requests: usize,
        #[arg(long, default_value_t = 1)]
        min_weight: u64,
        #[arg(long, default_value_t = 1)]
        max_weight: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Time the solvers over a ladder of sizes; prints one JSON row per size.
    Bench {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Node counts (path) or endpoint counts (cycle).
        #[arg(long, num_args = 1.., value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        /// Timed runs per size; the median is reported.
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(5..))]
        reps: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Path suite: one request per this many nodes.
        #[arg(long, default_value_t = 10)]
        request_ratio: usize,
        /// Cycle suite: number of nodes.
        #[arg(long, default_value_t = 2000)]
        cycle_n: usize,
        /// Cycle suite: number of distinct requests.
        #[arg(long, default_value_t = 100)]
        cycle_requests: usize,
        /// Sizes measured concurrently.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TopologyArg {
    Path,
    Cycle,
    General,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Path,
    Cycle,
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load(path: &Path) -> Result<Scenario, CliError> {
    parse_instance(&read(path)?)
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Solve {
            input,
            emit_ride,
            output,
            force_oracle,
        } => {
            let sol = commands::solve(&load(&input)?, emit_ride, force_oracle)?;
            emit(&commands::to_json(&sol), output.as_deref())
        }
        Command::Oracle {
            input,
            budget,
            force_oracle,
            emit_ride,
            output,
        } => {
            let sol = commands::oracle(&load(&input)?, budget, force_oracle, emit_ride)?;
            emit(&commands::to_json(&sol), output.as_deref())
        }
        Command::Verify { input, solution } => {
            let sc = load(&input)?;
            let file: SolutionFile = serde_json::from_slice(&read(&solution)?)
                .map_err(|e| CliError::Schema(e.to_string()))?;
            let cost = commands::verify(&sc, &file)?;
            println!("ok: feasible, cost {cost}");
            Ok(())
        }
        Command::Gen {
            topology,
            n,
            requests,
            min_weight,
            max_weight,
            seed,
            output,
        } => {
            let topology = match topology {
                TopologyArg::Path => Topology::Path,
                TopologyArg::Cycle => Topology::Cycle,
                TopologyArg::General => Topology::General,
            };
            let cfg = GenConfig::new(topology, n, requests).weights(min_weight, max_weight);
            emit(&commands::gen(&cfg, seed)?, output.as_deref())
        }
        Command::Bench {
            suite,
            sizes,
            reps,
            seed,
            request_ratio,
            cycle_n,
            cycle_requests,
            threads,
            output,
        } => {
            let plan = BenchPlan {
                suite: match suite {
                    SuiteArg::Path => Suite::Path,
                    SuiteArg::Cycle => Suite::Cycle,
                },
                sizes,
                reps: reps as usize,
                seed,
                request_ratio,
                cycle_n,
                cycle_requests,
                threads,
            };
            emit(&commands::bench(&plan)?, output.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
