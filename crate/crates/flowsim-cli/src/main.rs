//! Pipeline driver: each subcommand is one stage, all stages share a single
//! TOML config, and artifacts land in a run directory named by the config
//! hash. Exit codes group failures: 2 config, 3 parse, 4 numeric, 5 io.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand};

use flowsim::pipeline::{
    cmd_evaluate, cmd_fit_benchmark, cmd_ingest, cmd_report, cmd_simulate, cmd_train,
    create_run_dir, latest_run_dir, load_config, ModelKind, PipelineError, Run,
};

#[derive(Parser)]
#[command(
    name = "flowsim",
    version,
    about = "Learn a generative order-flow model and compare simulated mid-price paths to real data"
)]
struct Cli {
    /// Run configuration (TOML)
    #[arg(long, value_name = "FILE")]
    config: PathBuf,

    /// Run directory to operate in (default: the latest run for this config;
    /// `ingest` creates a fresh one)
    #[arg(long, value_name = "DIR")]
    run_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse both feeds, encode them into tokens, and write the token cache
    Ingest,
    /// Fit the per-token arrival-rate benchmark on the training flow
    FitBenchmark,
    /// Pretrain the generator and run the adversarial rounds
    Train {
        /// Master seed; required so every training run is reproducible
        #[arg(long)]
        seed: u64,
        /// Continue from the latest checkpoint instead of starting over
        #[arg(long)]
        resume: bool,
        /// Run at most this many adversarial rounds in this invocation
        #[arg(long, value_name = "N")]
        stop_after: Option<usize>,
    },
    /// Simulate mid-price paths with a fitted flow model
    Simulate {
        /// Master seed; required so every batch of paths is reproducible
        #[arg(long)]
        seed: u64,
        /// Flow model to simulate: generator | poisson
        #[arg(long, value_parser = ModelKind::from_str)]
        model: ModelKind,
    },
    /// Replay the held-out feed and compare every simulated model against it
    Evaluate,
    /// Print the evaluation tables from the written report
    Report,
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = dispatch(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}

fn resolve_dir(cli: &Cli, run: &Run) -> Result<PathBuf, PipelineError> {
    match &cli.run_dir {
        Some(dir) => Ok(dir.clone()),
        None => latest_run_dir(run),
    }
}

fn dispatch(cli: Cli) -> Result<(), PipelineError> {
    let run = load_config(&cli.config)?;
    match &cli.command {
        Command::Ingest => {
            let dir = match &cli.run_dir {
                Some(dir) => {
                    std::fs::create_dir_all(dir).map_err(|e| PipelineError::Io {
                        path: dir.display().to_string(),
                        source: e,
                    })?;
                    dir.clone()
                }
                None => create_run_dir(&run)?,
            };
            let s = cmd_ingest(&run, &dir)?;
            println!("run directory: {}", s.run_dir.display());
            println!(
                "{} training pairs ({} train events, {} test events)",
                s.pair_count, s.train_events, s.test_events
            );
        }
        Command::FitBenchmark => {
            let dir = resolve_dir(&cli, &run)?;
            let path = cmd_fit_benchmark(&run, &dir)?;
            println!("rates written: {}", path.display());
        }
        Command::Train { seed, resume, stop_after } => {
            let dir = resolve_dir(&cli, &run)?;
            let s = cmd_train(&run, &dir, *seed, *resume, *stop_after)?;
            println!("trained through round {}", s.rounds_done);
            println!("checkpoint: {}", s.checkpoint.display());
            if let Some(nll) = s.final_heldout_nll {
                println!("held-out nll: {nll:.4}");
            }
        }
        Command::Simulate { seed, model } => {
            let dir = resolve_dir(&cli, &run)?;
            let s = cmd_simulate(&run, &dir, *seed, *model)?;
            println!(
                "{} paths ({} events) written: {}",
                s.n_paths,
                s.total_events,
                s.dir.display()
            );
        }
        Command::Evaluate => {
            let dir = resolve_dir(&cli, &run)?;
            let s = cmd_evaluate(&run, &dir)?;
            println!("models evaluated: {}", s.models.join(", "));
            println!("report: {}", s.report_json.display());
            println!("tables: {}", s.report_txt.display());
        }
        Command::Report => {
            let dir = resolve_dir(&cli, &run)?;
            print!("{}", cmd_report(&dir)?);
        }
    }
    Ok(())
}
