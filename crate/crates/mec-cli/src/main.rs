//! `mec` — rank candidate actions under moral uncertainty.
//!
//! Exit codes: 0 success, 2 input or validation error, 3 computation or
//! scorer error.

mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mec_core::{run_mec, MecOptions};
use mec_harness::{run_experiment, SynthConfig};

const SCORER_URL_ENV: &str = "MEC_SCORER_URL";
const SCORER_TIMEOUT: Duration = Duration::from_secs(10);

#[derive(Debug)]
pub enum CliError {
    /// Unreadable, unparsable, or invalid input (exit 2).
    Input(String),
    /// Pipeline, calibration, or remote-scorer failure (exit 3).
    Compute(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Compute(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(message) | CliError::Compute(message) => message,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "mec",
    version,
    about = "Rank candidate actions by credence-weighted expected choiceworthiness"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the aggregation pipeline on a decision-situation file
    Run(RunArgs),
    /// Calibrate a classification threshold from labeled scores
    Calibrate(CalibrateArgs),
    /// Measure ensemble accuracy over synthetic evaluators
    Simulate(SimulateArgs),
    /// Explain why one action outranks another under one theory
    Explain(ExplainArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Decision-situation JSON file
    #[arg(short, long)]
    input: PathBuf,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Cutoff in (0,1) for binarizing probability-valued ordinal scores
    #[arg(long)]
    threshold: Option<f64>,
    /// Write the rendered result to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Args)]
struct CalibrateArgs {
    /// CSV file with header `score,label` (labels 0 or 1)
    #[arg(short, long)]
    input: PathBuf,
}

#[derive(Args)]
struct SimulateArgs {
    /// Number of synthetic evaluators
    #[arg(long)]
    evaluators: usize,
    /// Probability in (0.5, 1.0] that an evaluator ranks the true action first
    #[arg(long)]
    accuracy: f64,
    /// Number of trials
    #[arg(long)]
    trials: usize,
    /// RNG seed
    #[arg(long)]
    seed: u64,
    /// Number of candidate actions per trial
    #[arg(long, default_value_t = 2)]
    actions: usize,
}

#[derive(Args)]
struct ExplainArgs {
    /// Decision-situation JSON file
    #[arg(short, long)]
    input: PathBuf,
    /// Action claimed to be more choiceworthy
    #[arg(long)]
    better: String,
    /// Action claimed to be less choiceworthy
    #[arg(long)]
    worse: String,
    /// Theory whose scores back the claim
    #[arg(long)]
    theory: String,
    /// Comparative phrase for the theory
    #[arg(long, default_value = "higher choiceworthiness")]
    phrase: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Calibrate(args) => cmd_calibrate(args),
        Command::Simulate(args) => cmd_simulate(args),
        Command::Explain(args) => cmd_explain(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}

fn cmd_run(args: RunArgs) -> Result<(), CliError> {
    if let Some(threshold) = args.threshold {
        if !(threshold > 0.0 && threshold < 1.0) {
            return Err(CliError::Input(format!(
                "threshold {threshold} outside (0, 1)"
            )));
        }
    }
    let situation = load_and_resolve(&args.input)?;
    let options = MecOptions {
        threshold: args.threshold,
    };
    let result = run_mec(&situation, &options).map_err(|err| CliError::Compute(err.to_string()))?;
    emit(&output::render(&result, args.format), args.out.as_deref())
}

fn cmd_calibrate(args: CalibrateArgs) -> Result<(), CliError> {
    let labeled = input::load_labeled_scores(&args.input)?;
    let threshold = mec_evaluators::calibrate_threshold(&labeled)
        .map_err(|err| CliError::Input(err.to_string()))?;
    println!("{threshold:.6}");
    Ok(())
}

fn cmd_simulate(args: SimulateArgs) -> Result<(), CliError> {
    let mut config = SynthConfig::new(args.seed, args.trials, args.evaluators, args.accuracy);
    config.n_actions = args.actions;
    config
        .validate()
        .map_err(|err| CliError::Input(err.to_string()))?;
    let report = run_experiment(&config).map_err(|err| CliError::Compute(err.to_string()))?;
    print!("{}", report.to_table_string());
    Ok(())
}

fn cmd_explain(args: ExplainArgs) -> Result<(), CliError> {
    let situation = load_and_resolve(&args.input)?;
    let table = situation.table_for(&args.theory).ok_or_else(|| {
        CliError::Input(format!("no theory '{}' in the input file", args.theory))
    })?;
    let vocabulary = std::collections::BTreeMap::from([(args.theory.clone(), args.phrase)]);
    let text = mec_harness::render_explanation(table, &args.better, &args.worse, &vocabulary)
        .map_err(|err| match err {
            mec_harness::HarnessError::MissingScore(_) => CliError::Input(err.to_string()),
            other => CliError::Compute(other.to_string()),
        })?;
    println!("{text}");
    Ok(())
}

fn load_and_resolve(path: &std::path::Path) -> Result<mec_core::DecisionSituation, CliError> {
    let file = input::load_situation_file(path)?;
    let scorer_url = std::env::var(SCORER_URL_ENV).ok();
    let situation = input::resolve(file, scorer_url.as_deref(), SCORER_TIMEOUT)?;
    situation
        .validate()
        .map_err(|err| CliError::Input(err.to_string()))?;
    Ok(situation)
}

fn emit(text: &str, out: Option<&std::path::Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|err| {
            CliError::Compute(format!("cannot write '{}': {err}", path.display()))
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
