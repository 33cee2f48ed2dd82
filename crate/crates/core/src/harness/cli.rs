use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use super::experiment::{run_experiment, Emit, ExperimentConfig, ExperimentSummary};
use crate::boolean::{is_bent, walsh_hadamard, TruthTable};
use crate::cost::{resource_table, TableParams, DEFAULT_QUBIT_BUDGET, DEFAULT_RAM_BUDGET_BITS};
use crate::ga::{Evaluator, EvaluatorKind, GaConfig};
use crate::Error;

#[derive(Debug, Parser)]
#[command(
    name = "bentsearch",
    version,
    about = "Gowers-U2 driven search for bent Boolean functions"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run seeded GA repetitions and write CSV / JSON / truth-table artifacts.
    Run(RunArgs),
    /// Evaluate a single truth table.
    Eval(EvalArgs),
    /// Print the classical-vs-quantum resource table as CSV.
    Cost(CostArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EvaluatorArg {
    Classical,
    QuantumExact,
    QuantumShotsAllzero,
    QuantumShotsHadamard,
}

impl From<EvaluatorArg> for EvaluatorKind {
    fn from(e: EvaluatorArg) -> Self {
        match e {
            EvaluatorArg::Classical => Self::Classical,
            EvaluatorArg::QuantumExact => Self::QuantumExact,
            EvaluatorArg::QuantumShotsAllzero => Self::QuantumShotsAllzero,
            EvaluatorArg::QuantumShotsHadamard => Self::QuantumShotsHadamard,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EmitArg {
    Csv,
    Json,
    Tt,
}

#[derive(Debug, Args)]
struct RunArgs {
    #[arg(long, default_value_t = 6)]
    n: u32,
    #[arg(long, default_value_t = 250)]
    generations: usize,
    #[arg(long, default_value_t = 25)]
    population: usize,
    #[arg(long, default_value_t = 0.5)]
    pc: f64,
    #[arg(long, default_value_t = 0.8)]
    pm: f64,
    #[arg(long, default_value_t = 3)]
    tournament: usize,
    /// Master seed; repetition r uses a seed derived from it.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    reps: usize,
    #[arg(long, value_enum, default_value = "classical")]
    evaluator: EvaluatorArg,
    /// Shots per estimate (shot evaluators only).
    #[arg(long, default_value_t = 1000)]
    shots: u64,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, value_delimiter = ',', default_values = ["csv", "json", "tt"])]
    emit: Vec<EmitArg>,
    /// Re-run the configuration echoed in an earlier `summary.json`;
    /// all other experiment flags are ignored.
    #[arg(long)]
    from_summary: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EvalArgs {
    /// A truth-table file, an `n=<k> tt=<hex>` line, or bare hex with `--n`.
    #[arg(long)]
    tt: String,
    /// Variable count for bare hex input.
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, value_enum, default_value = "classical")]
    evaluator: EvaluatorArg,
    #[arg(long, default_value_t = 1000)]
    shots: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct CostArgs {
    #[arg(long, default_value_t = 1)]
    n_min: u32,
    #[arg(long, default_value_t = 40)]
    n_max: u32,
    #[arg(long, default_value_t = 0.01)]
    epsilon: f64,
    #[arg(long, default_value_t = 0.05)]
    delta: f64,
    #[arg(long, default_value_t = DEFAULT_RAM_BUDGET_BITS)]
    ram_budget_bits: u128,
    #[arg(long, default_value_t = DEFAULT_QUBIT_BUDGET)]
    qubit_budget: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Output(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Output(_) => 3,
            Failure::Internal(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Output(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_) => Failure::Output(e.to_string()),
            Error::Json(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CliResult = std::result::Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run_cli<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    let result = match cli.command {
        Command::Run(a) => cmd_run(a, stdout),
        Command::Eval(a) => cmd_eval(a, stdout),
        Command::Cost(a) => cmd_cost(a, stdout),
    };
    match result {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(stderr, "bentsearch: {}", f.message());
            f.code()
        }
    }
}

fn check_writable(dir: &Path) -> CliResult {
    let probe = dir.join(".bentsearch-write-probe");
    fs::create_dir_all(dir)
        .and_then(|_| fs::write(&probe, b""))
        .and_then(|_| fs::remove_file(&probe))
        .map_err(|e| Failure::Output(format!("cannot write to {}: {e}", dir.display())))
}

fn load_summary_config(path: &Path) -> std::result::Result<ExperimentConfig, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let summary: ExperimentSummary = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("{}: not a summary.json: {e}", path.display())))?;
    Ok(summary.config)
}

fn cmd_run(a: RunArgs, out: &mut dyn Write) -> CliResult {
    let config = match &a.from_summary {
        Some(path) => load_summary_config(path)?,
        None => ExperimentConfig {
            ga: GaConfig {
                n: a.n,
                population: a.population,
                generations: a.generations,
                tournament_size: a.tournament,
                crossover_prob: a.pc,
                mutation_prob: a.pm,
                seed: a.seed,
                evaluator: a.evaluator.into(),
                shots: a.shots,
            },
            repetitions: a.reps,
            emit: Emit {
                csv: a.emit.iter().any(|e| matches!(e, EmitArg::Csv)),
                json: a.emit.iter().any(|e| matches!(e, EmitArg::Json)),
                tt: a.emit.iter().any(|e| matches!(e, EmitArg::Tt)),
            },
        },
    };
    config.validate()?;
    check_writable(&a.out)?;
    let summary = run_experiment(&config, &a.out)?;
    let w = |e: std::io::Error| Failure::Internal(e.to_string());
    writeln!(
        out,
        "n={} evaluator={} generations={} threshold={:.9}",
        config.ga.n, config.ga.evaluator, config.ga.generations, summary.threshold
    )
    .map_err(w)?;
    for r in &summary.runs {
        writeln!(
            out,
            "run {}: best_norm={:.9} final_best={:.9} final_avg={:.9} bent={} gap={:.3e}",
            r.repetition,
            r.best_norm,
            r.final_best_fitness,
            r.final_avg_fitness,
            r.is_bent.map_or("n/a".into(), |b| b.to_string()),
            r.gap_to_threshold
        )
        .map_err(w)?;
    }
    Ok(())
}

fn parse_tt(arg: &str, n: Option<u32>) -> std::result::Result<TruthTable, Failure> {
    let path = Path::new(arg);
    let text = if path.is_file() {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {arg}: {e}")))?
    } else {
        arg.to_string()
    };
    let text = text.trim();
    let parsed = if text.starts_with("n=") {
        text.parse::<TruthTable>()
    } else if let Some(n) = n {
        TruthTable::from_hex(n, text)
    } else {
        return Err(Failure::Usage(format!(
            "{arg:?} is neither a file nor an `n=<k> tt=<hex>` line (use --n for bare hex)"
        )));
    };
    parsed.map_err(|e| Failure::Usage(e.to_string()))
}

fn cmd_eval(a: EvalArgs, out: &mut dyn Write) -> CliResult {
    let f = parse_tt(&a.tt, a.n)?;
    let kind: EvaluatorKind = a.evaluator.into();
    if !kind.is_exact() && a.shots == 0 {
        return Err(Failure::Usage("--shots must be at least 1".into()));
    }
    let est = Evaluator::new(kind, a.shots).evaluate(&f, a.seed)?;
    let w = walsh_hadamard(&f);
    let bent = is_bent(&f).ok();
    let io = |e: std::io::Error| Failure::Internal(e.to_string());
    if a.json {
        let v = json!({
            "n": f.n(),
            "evaluator": kind.as_str(),
            "norm": est.norm,
            "u4": est.value,
            "walsh_max_abs": w.max_abs(),
            "walsh_min_abs": w.min_abs(),
            "is_bent": bent,
            "shots": est.shots,
            "std_error": (!kind.is_exact()).then_some(est.std_error),
        });
        writeln!(out, "{v}").map_err(io)?;
    } else {
        writeln!(out, "n = {}", f.n()).map_err(io)?;
        writeln!(out, "evaluator = {kind}").map_err(io)?;
        writeln!(out, "norm = {:.12}", est.norm).map_err(io)?;
        writeln!(out, "u4 = {:.12}", est.value).map_err(io)?;
        writeln!(out, "walsh_max_abs = {}", w.max_abs()).map_err(io)?;
        writeln!(out, "walsh_min_abs = {}", w.min_abs()).map_err(io)?;
        writeln!(
            out,
            "is_bent = {}",
            bent.map_or("n/a".into(), |b| b.to_string())
        )
        .map_err(io)?;
        if !kind.is_exact() {
            writeln!(out, "shots = {}", est.shots).map_err(io)?;
            writeln!(out, "std_error = {:.6e}", est.std_error).map_err(io)?;
        }
    }
    Ok(())
}

fn cmd_cost(a: CostArgs, out: &mut dyn Write) -> CliResult {
    let table = resource_table(&TableParams {
        n_min: a.n_min,
        n_max: a.n_max,
        epsilon: a.epsilon,
        delta: a.delta,
        ram_budget_bits: a.ram_budget_bits,
        qubit_budget: a.qubit_budget,
    })?;
    let csv = table.to_csv();
    match a.out {
        Some(path) => fs::write(&path, csv)
            .map_err(|e| Failure::Output(format!("cannot write {}: {e}", path.display()))),
        None => out
            .write_all(csv.as_bytes())
            .map_err(|e| Failure::Internal(e.to_string())),
    }
}
