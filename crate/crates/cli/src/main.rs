use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

/// Find and report transit fare arbitrage.
#[derive(Debug, Parser)]
#[command(name = "transit-arbitrage", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Load and validate network and fare files.
    Validate(DataArgs),
    /// List every trip pair whose ticket swap saves money.
    Enumerate(EnumerateArgs),
    /// Count beneficial pairs at each gain threshold.
    Summary(SummaryArgs),
    /// Work out the swap for two specific trips given as `origin:destination`.
    Pair(PairArgs),
    /// Fare-versus-stops profile along a route and its curvature segments.
    Profile(ProfileArgs),
    /// Write a synthetic line network and fare table.
    Synth(SynthArgs),
}

#[derive(Debug, Args)]
struct DataArgs {
    #[arg(long)]
    stations: PathBuf,
    #[arg(long)]
    routes: PathBuf,
    #[arg(long)]
    fares: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[command(flatten)]
    data: DataArgs,
    #[command(flatten)]
    output: OutputArgs,
    #[arg(long, default_value_t = 5)]
    min_gain_cents: u64,
    /// Comma-separated thresholds in cents for the JSON summary block.
    #[arg(long, value_delimiter = ',', default_value = "5,100")]
    thresholds: Vec<u64>,
    /// Run the enumeration on a single thread.
    #[arg(long)]
    sequential: bool,
}

#[derive(Debug, Args)]
struct SummaryArgs {
    #[command(flatten)]
    data: DataArgs,
    #[command(flatten)]
    output: OutputArgs,
    #[arg(long, value_delimiter = ',', default_value = "5,100")]
    thresholds: Vec<u64>,
    #[arg(long)]
    sequential: bool,
}

#[derive(Debug, Args)]
struct PairArgs {
    #[command(flatten)]
    data: DataArgs,
    #[arg(long)]
    out: Option<PathBuf>,
    /// First trip, `origin:destination`.
    trip1: String,
    /// Second trip, `origin:destination`.
    trip2: String,
}

#[derive(Debug, Args)]
struct ProfileArgs {
    #[command(flatten)]
    data: DataArgs,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    origin: String,
    #[arg(long)]
    route: String,
    #[arg(long, default_value_t = transit_arbitrage::DEFAULT_TOLERANCE_CENTS)]
    tolerance_cents: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelKind {
    Flat,
    Affine,
    Power,
    Density,
}

#[derive(Debug, Args)]
struct SynthArgs {
    #[arg(long, value_enum)]
    model: ModelKind,
    /// Number of stations on the line.
    #[arg(long)]
    n: usize,
    /// Base fare in dollars (flat, affine).
    #[arg(long)]
    c: Option<String>,
    /// Dollars per hop (affine, density).
    #[arg(long)]
    k: Option<String>,
    /// Scale in dollars (power).
    #[arg(long)]
    a: Option<String>,
    /// Exponent (power).
    #[arg(long)]
    p: Option<f64>,
    /// Base fare in dollars (density).
    #[arg(long)]
    c0: Option<String>,
    /// Zone as `first:last:surcharge`, 1-based station positions, surcharge in dollars.
    #[arg(long)]
    zone: Vec<String>,
    /// Directory receiving stations.csv, routes.csv and fares.csv.
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
}

/// Exit status 1: bad invocation. Exit status 2: bad data.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Data(String),
}

impl From<transit_arbitrage::Error> for Failure {
    fn from(err: transit_arbitrage::Error) -> Self {
        Failure::Data(err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Validate(args) => commands::validate(&args),
        Command::Enumerate(args) => commands::enumerate(&args),
        Command::Summary(args) => commands::summary(&args),
        Command::Pair(args) => commands::pair(&args),
        Command::Profile(args) => commands::profile(&args),
        Command::Synth(args) => commands::synth(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
