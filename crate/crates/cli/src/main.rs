mod bench;
mod document;

use std::fmt::Display;
use std::fs;
use std::io::{self, Write};
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lbflow::{
    approx, certify, exact_max_l_flow, generate_random, parse_network, serialize_network,
    GeneratorConfig, LengthMode, Network, RationalFlow, Solution, DEFAULT_PATH_BUDGET,
};
use serde::Serialize;

use bench::{BenchConfig, Suite};
use document::{verify_document, InstanceInfo, OracleDocument, ResultDocument};

const REJECTED: u8 = 1;
const INPUT_ERROR: u8 = 2;
const PARAMETER_ERROR: u8 = 3;
const INTERNAL_ERROR: u8 = 4;
const BUDGET_EXCEEDED: u8 = 5;

/// Maximum length-bounded s-t flow: solve, verify, exact oracle, benchmarks
/// and instance generation.
#[derive(Debug, Parser)]
#[command(name = "lbflow", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Approximate the maximum bounded flow and print a result document.
    Solve(SolveArgs),
    /// Recheck a result document against its network.
    Verify(VerifyArgs),
    /// Solve small instances exactly over the rationals.
    Oracle(OracleArgs),
    /// Run a benchmark suite and print CSV rows.
    Bench(BenchArgs),
    /// Print a random network.
    Gen(GenArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Hop,
    General,
}

impl From<Mode> for LengthMode {
    fn from(mode: Mode) -> Self {
        match mode {
            Mode::Hop => LengthMode::Hop,
            Mode::General => LengthMode::General,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long)]
    input: PathBuf,
    /// Length bound.
    #[arg(long = "L")]
    bound: u64,
    /// Approximation parameter in (0, 1).
    #[arg(long, allow_negative_numbers = true)]
    eps: f64,
    #[arg(long, value_enum)]
    mode: Mode,
    #[arg(long, value_enum, default_value = "json")]
    out: OutputFormat,
    /// Write the per-iteration trace as CSV.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Recorded in the document; the solver is deterministic.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    result: PathBuf,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long = "L")]
    bound: u64,
    #[arg(long, value_enum)]
    mode: Mode,
    /// Maximum number of bounded paths to enumerate.
    #[arg(long, default_value_t = DEFAULT_PATH_BUDGET)]
    budget: usize,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// Comma-separated `NxM` sizes for the random suite.
    #[arg(long, value_delimiter = ',', value_parser = bench::parse_size, default_value = "8x20")]
    sizes: Vec<(usize, usize)>,
    #[arg(long, value_delimiter = ',', required = true)]
    eps: Vec<f64>,
    #[arg(long, default_value_t = 1)]
    repeats: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Length bound for the random suite.
    #[arg(long = "L", default_value_t = 4)]
    bound: u64,
    #[arg(long, value_enum, default_value = "hop")]
    mode: Mode,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long = "n")]
    vertices: usize,
    #[arg(long = "m")]
    edges: usize,
    /// Capacity range `A:B`.
    #[arg(long, value_parser = parse_range::<f64>, default_value = "1:10")]
    caps: (f64, f64),
    /// Length range `A:B`.
    #[arg(long, value_parser = parse_range::<u64>, default_value = "1:1")]
    lens: (u64, u64),
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn parse_range<T: std::str::FromStr>(text: &str) -> Result<(T, T), String>
where
    T::Err: Display,
{
    let (a, b) = text
        .split_once(':')
        .ok_or_else(|| format!("expected A:B, got {text:?}"))?;
    let a = a.trim().parse().map_err(|e| format!("{text:?}: {e}"))?;
    let b = b.trim().parse().map_err(|e| format!("{text:?}: {e}"))?;
    Ok((a, b))
}

/// A failed command: exit status plus a message for stderr.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Display) -> Self {
        Self {
            code,
            message: message.to_string(),
        }
    }
}

impl From<lbflow::Error> for Failure {
    fn from(err: lbflow::Error) -> Self {
        use lbflow::Error::*;
        let code = match err {
            Parse { .. } | InvalidNetwork(_) | InvalidPath(_) | DanglingEdge(_) => INPUT_ERROR,
            InvalidArgument(_) | EpsilonOutOfRange(_) | DeltaUnderflow { .. } => PARAMETER_ERROR,
            TableBudgetExceeded { .. } => PARAMETER_ERROR,
            IterationCapExceeded { .. } => INTERNAL_ERROR,
            PathBudgetExceeded { .. } | LpTooLarge { .. } => BUDGET_EXCEEDED,
        };
        Failure::new(code, err)
    }
}

fn read_text(path: &FsPath) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::new(INPUT_ERROR, format!("cannot read {}: {e}", path.display())))
}

fn read_network(path: &FsPath) -> Result<Network, Failure> {
    parse_network(&read_text(path)?)
        .map_err(|e| Failure::new(INPUT_ERROR, format!("{}: {e}", path.display())))
}

fn print_json(value: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::new(INTERNAL_ERROR, e))?;
    println!("{text}");
    Ok(())
}

fn io_failure(e: impl Display) -> Failure {
    Failure::new(INPUT_ERROR, format!("write failed: {e}"))
}

#[derive(Serialize)]
struct TraceRow {
    iteration: u64,
    path: String,
    bottleneck: f64,
    alpha: f64,
    flow_value: f64,
}

fn write_trace(path: &FsPath, result: &Solution) -> Result<(), Failure> {
    let mut out = csv::Writer::from_path(path).map_err(io_failure)?;
    for r in &result.trace.records {
        let ids: Vec<String> = r.path.edges().iter().map(ToString::to_string).collect();
        out.serialize(TraceRow {
            iteration: r.iteration,
            path: ids.join(" "),
            bottleneck: r.bottleneck,
            alpha: r.alpha,
            flow_value: r.flow_value,
        })
        .map_err(io_failure)?;
    }
    out.flush().map_err(io_failure)
}

#[derive(Serialize)]
struct SummaryRow<'a> {
    n: usize,
    m: usize,
    #[serde(rename = "L")]
    bound: u64,
    mode: &'a str,
    eps: f64,
    value: f64,
    dual_bound: Option<f64>,
    ratio: Option<f64>,
    iterations: u64,
    runtime_ms: f64,
    violations: usize,
}

fn solve(args: &SolveArgs) -> Result<(), Failure> {
    let net = read_network(&args.input)?;
    let mode = args.mode.into();
    let result = approx(&net, args.bound, args.eps, mode)?;
    let cert = certify(&net, &result, args.bound, mode)?;
    if let Some(path) = &args.trace {
        write_trace(path, &result)?;
    }
    let doc = ResultDocument::new(
        InstanceInfo::new(&net, args.bound, mode, args.seed),
        &result,
        &cert,
    );
    match args.out {
        OutputFormat::Json => print_json(&doc),
        OutputFormat::Csv => {
            let mut out = csv::Writer::from_writer(io::stdout());
            out.serialize(SummaryRow {
                n: doc.instance.n,
                m: doc.instance.m,
                bound: doc.instance.bound,
                mode: &doc.instance.mode,
                eps: doc.params.eps,
                value: doc.value,
                dual_bound: doc.dual_bound,
                ratio: doc.ratio,
                iterations: doc.iterations,
                runtime_ms: doc.runtime_ms,
                violations: doc.violations.len(),
            })
            .map_err(io_failure)?;
            out.flush().map_err(io_failure)
        }
    }
}

fn verify(args: &VerifyArgs) -> Result<(), Failure> {
    let net = read_network(&args.input)?;
    let doc: ResultDocument = serde_json::from_str(&read_text(&args.result)?)
        .map_err(|e| Failure::new(INPUT_ERROR, format!("{}: {e}", args.result.display())))?;
    let mode: LengthMode = doc
        .instance
        .mode
        .parse()
        .map_err(|e| Failure::new(INPUT_ERROR, format!("{}: {e}", args.result.display())))?;
    let report = verify_document(&net, &doc, mode);
    print_json(&report)?;
    if report.accepted() {
        Ok(())
    } else {
        Err(Failure::new(
            REJECTED,
            format!("rejected:\n  {}", report.violations.join("\n  ")),
        ))
    }
}

fn oracle(args: &OracleArgs) -> Result<(), Failure> {
    let net = read_network(&args.input)?;
    let mode = args.mode.into();
    let exact: RationalFlow = exact_max_l_flow(&net, args.bound, mode, args.budget)?;
    print_json(&OracleDocument::new(
        InstanceInfo::new(&net, args.bound, mode, None),
        &net,
        &exact,
    ))
}

fn run_bench(args: &BenchArgs) -> Result<(), Failure> {
    let cfg = BenchConfig {
        suite: args.suite,
        sizes: args.sizes.clone(),
        eps: args.eps.clone(),
        repeats: args.repeats,
        seed: args.seed,
        bound: args.bound,
        mode: args.mode.into(),
    };
    let rows = bench::run(&cfg)?;
    let mut out = csv::Writer::from_writer(io::stdout());
    for row in &rows {
        out.serialize(row).map_err(io_failure)?;
    }
    out.flush().map_err(io_failure)
}

fn gen(args: &GenArgs) -> Result<(), Failure> {
    let cfg = GeneratorConfig::new(args.vertices, args.edges, args.seed)
        .capacities(args.caps.0, args.caps.1)
        .lengths(args.lens.0, args.lens.1);
    let net = generate_random(&cfg).map_err(|e| Failure::new(INPUT_ERROR, e))?;
    io::stdout()
        .write_all(serialize_network(&net).as_bytes())
        .map_err(io_failure)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Solve(args) => solve(args),
        Command::Verify(args) => verify(args),
        Command::Oracle(args) => oracle(args),
        Command::Bench(args) => run_bench(args),
        Command::Gen(args) => gen(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("lbflow: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
