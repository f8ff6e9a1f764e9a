use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod manifest;

use commands::Failure;

/// Linear triple systems: generators, pattern detectors, exact extremal
/// search and wicket-finding simulators.
#[derive(Parser, Debug)]
#[command(name = "wicketlab", version, about)]
struct Cli {
    /// Worker threads for `extremal` and `pipeline` (results do not depend on it)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a system and write it with a JSON sidecar
    Gen(GenArgs),
    /// Find one occurrence of a pattern
    Detect(DetectArgs),
    /// Count occurrences of a pattern
    Count(CountArgs),
    /// Exact linear Turán numbers for small n
    Extremal(ExtremalArgs),
    /// Run one of the two wicket-finding simulators
    Pipeline(PipelineArgs),
    /// Check a system file, and optionally an embedding against it
    Validate(ValidateArgs),
    /// Convert between the text and JSON system formats
    Convert(ConvertArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// Rejection-sampled random linear system
    Random,
    /// Random greedy system avoiding --pattern
    Greedy,
    /// Steiner triple system (n = 1, 3 mod 6)
    Sts,
    /// The affine plane of order 3
    Ag23,
    /// Three-partite (6,3)-free system from a progression-free set below --base
    Rsz,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    n: Option<usize>,
    /// Stop once this many edges are present (random, greedy)
    #[arg(long)]
    target: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Forbidden pattern for greedy generation
    #[arg(long, default_value = "wicket")]
    pattern: String,
    #[arg(long)]
    base: Option<usize>,
    #[arg(long)]
    max_attempts: Option<u64>,
    /// System file; the sidecar goes to <out>.json (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct DetectArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, default_value = "wicket")]
    pattern: String,
    /// Exit 1 if the pattern is found
    #[arg(long)]
    expect_free: bool,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the embedding JSON here
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CountArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, default_value = "wicket")]
    pattern: String,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args, Debug)]
struct ExtremalArgs {
    /// Orders to solve, comma separated
    #[arg(long, required = true, value_delimiter = ',')]
    n: Vec<usize>,
    #[arg(long, default_value = "wicket")]
    pattern: String,
    #[arg(long)]
    budget_nodes: Option<u64>,
    #[arg(long)]
    budget_seconds: Option<f64>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Table file; witnesses go beside it as <stem>.n<N>.<pattern>.txt and
    /// budget-truncated rows as <stem>.lower_bounds.<ext>
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct PipelineArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// 1 or 2
    #[arg(long, default_value = "1")]
    proof: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    rounds: usize,
    /// Candidates drawn per step, best kept (1 = plain uniform draws)
    #[arg(long)]
    trials: Option<usize>,
    /// Output prefix: <out>.embedding.json and <out>.trace.json
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ValidateArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Embedding JSON to check against the system
    #[arg(long)]
    embedding: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ConvertArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Target format: tsv is the plain text format
    #[arg(long, value_enum)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .expect("thread pool configured once");
    }
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let result = match cli.command {
        Command::Gen(a) => commands::gen(&a, &argv),
        Command::Detect(a) => commands::detect(&a, &argv),
        Command::Count(a) => commands::count(&a),
        Command::Extremal(a) => commands::extremal(&a, &argv),
        Command::Pipeline(a) => commands::pipeline(&a, &argv),
        Command::Validate(a) => commands::validate(&a),
        Command::Convert(a) => commands::convert(&a, &argv),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("see `wicketlab --help`");
            ExitCode::from(2)
        }
        Err(Failure::Domain(report)) => {
            eprintln!("{report}");
            ExitCode::from(1)
        }
    }
}
