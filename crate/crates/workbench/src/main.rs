use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use cvd_core::OracleBudget;

use cvd_workbench::bench::{run_bench, BenchConfig};
use cvd_workbench::format::{read_instance, serialize_instance};
use cvd_workbench::generate::{generate, Model, DEFAULT_SEED};
use cvd_workbench::solve::{check, rational_string, run_algo, Algo, SolutionJson};

#[derive(Parser)]
#[command(name = "cvd", version, about = "Cluster vertex deletion solvers and tooling")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one instance file.
    Solve {
        #[arg(long, default_value = "lr94", value_parser = parse_algo)]
        algo: Algo,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        output: OutputFormat,
        /// Include the local-ratio trace.
        #[arg(long)]
        trace: bool,
    },
    /// Generate an instance: gnp:N:P, planted:N:K:NOISE, vc-pendant:<model>, bull or k5.
    Gen {
        #[arg(long)]
        model: Model,
        #[arg(long, env = "CVD_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        min_weight: u64,
        #[arg(long, default_value_t = 1)]
        max_weight: u64,
        /// Write here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run algorithms over every `.cvd` file in a directory.
    Bench {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "lr94,naive3", value_parser = parse_algo)]
        algos: Vec<Algo>,
        /// Largest instance the exact oracle is run on; 0 disables it.
        #[arg(long, default_value_t = 16)]
        oracle_max_n: usize,
        /// Report path; `.json` selects JSON, anything else CSV. Defaults to CSV on standard output.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Check a solution file against an instance.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        solution: PathBuf,
        /// Check against 3-vertex path subgraphs instead of induced ones.
        #[arg(long)]
        subgraphs: bool,
    },
}

fn parse_algo(s: &str) -> Result<Algo, String> {
    s.parse()
}

/// Exit status 2 signals an infeasible or non-minimal solution.
fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Solve { algo, input, output, trace } => {
            let wg = read_instance(&input).with_context(|| format!("reading {}", input.display()))?;
            let outcome = run_algo(algo, &wg, &OracleBudget::default())?;
            let json = SolutionJson::new(algo, &wg, &outcome, trace)?;
            match output {
                OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&json)?),
                OutputFormat::Text => {
                    let ids: Vec<String> = json.vertices.iter().map(u32::to_string).collect();
                    println!("vertices: {}", ids.join(" "));
                    println!("cost: {}", json.cost);
                    println!("feasible: {}  minimal: {}", json.feasible, json.minimal);
                    for entry in json.trace.iter().flatten() {
                        println!("{}", serde_json::to_string(entry)?);
                    }
                }
            }
            Ok(if json.feasible { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Command::Gen { model, seed, min_weight, max_weight, out } => {
            let wg = generate(&model, min_weight..=max_weight, seed)?;
            let text = format!("# model {model} seed {seed}\n{}", serialize_instance(&wg)?);
            match out {
                Some(path) => std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench { corpus, algos, oracle_max_n, report } => {
            let config = BenchConfig { algorithms: algos, oracle_max_n, oracle_budget: OracleBudget::default() };
            let rep = run_bench(&corpus, &config).with_context(|| format!("reading corpus {}", corpus.display()))?;
            match report {
                Some(path) if path.extension().is_some_and(|e| e == "json") => std::fs::write(&path, rep.to_json()?)?,
                Some(path) => std::fs::write(&path, rep.to_csv()?)?,
                None => print!("{}", rep.to_csv()?),
            }
            eprintln!("{} rows, {} errors", rep.rows.len(), rep.errors());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { input, solution, subgraphs } => {
            let wg = read_instance(&input).with_context(|| format!("reading {}", input.display()))?;
            let text = std::fs::read_to_string(&solution).with_context(|| format!("reading {}", solution.display()))?;
            let sol: SolutionJson = serde_json::from_str(&text).context("parsing solution JSON")?;
            let x = sol.hitting_set();
            let algo = if subgraphs { Algo::P3Sub } else { Algo::Lr94 };
            let (feasible, minimal) = check(algo, &wg, &x)?;
            println!("cost: {}", rational_string(&x.cost(&wg)));
            println!("feasible: {feasible}  minimal: {minimal}");
            Ok(if feasible && minimal { ExitCode::SUCCESS } else { ExitCode::from(2) })
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
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
