use clap::{Parser, Subcommand, ValueEnum};
use rts_coevo::run::{load_config, run_command, RunConfig, Verb};
use rts_coevo::EvolutionMode;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(version, about = "Coevolve RTS unit micro against a fixed-timestep skirmish simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// TOML run configuration; defaults apply when omitted.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Master seed (overrides the config).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Skirmish worker threads [default: available parallelism].
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Evolution mode (overrides the config).
    #[arg(long, global = true)]
    mode: Option<Mode>,
    /// Output directory (overrides the config).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Run coevolution, writing progress.csv and per-generation champions.
    Coevolve,
    /// Random-search baselines for both sides into baseline.json.
    Baseline,
    /// Play the latest champions against the baselines from unseen starts.
    Robustness,
    /// Re-simulate the latest champion pair and write replay.trace.
    Replay,
    /// Print the resolved configuration and a summary of existing artifacts.
    Inspect,
}

#[derive(ValueEnum, Clone, Copy)]
enum Mode {
    Simple,
    Enhanced,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut config = match &cli.config {
        Some(p) => match load_config(p) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::FAILURE;
            }
        },
        None => RunConfig::default(),
    };
    if let Some(seed) = cli.seed {
        config.master_seed = seed;
    }
    if let Some(mode) = cli.mode {
        config.ga.mode = match mode {
            Mode::Simple => EvolutionMode::Simple,
            Mode::Enhanced => EvolutionMode::Enhanced,
        };
    }
    if let Some(out) = cli.out {
        config.output_dir = out;
    }
    let workers = cli
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let verb = match cli.command {
        Command::Coevolve => Verb::Coevolve,
        Command::Baseline => Verb::Baseline,
        Command::Robustness => Verb::Robustness,
        Command::Replay => Verb::Replay,
        Command::Inspect => Verb::Inspect,
    };
    match run_command(verb, &config, workers) {
        Ok(out) => {
            println!("{}", out.summary);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
