mod analyze;
mod generate;
mod input;
mod search;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::Context;
use clap::{Parser, Subcommand};
use dismis_core::families::conjecture_search;
use dismis_core::io::encode_graph6;
use dismis_core::verify::{self, Suite, VerifyConfig};
use dismis_core::{decide, Error, Limits, Strategy};

const EXIT_INTERNAL: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_MISMATCH: u8 = 4;
const EXIT_COUNTEREXAMPLE: u8 = 5;

/// Disjoint maximum independent sets: analysis, decisions with
/// certificates, and property verification over small graphs.
#[derive(Parser)]
#[command(
    name = "dismis",
    version,
    after_help = "Exit codes: 0 ok, 1 internal error, 2 parse error, \
3 cap exceeded, 4 strategy mismatch, 5 counterexample or failed property."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report invariants, vertex classes and a disjoint-pair certificate.
    Analyze {
        /// Graph file, inline graph6, or `-` for stdin (the default).
        input: Option<String>,
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        #[arg(long)]
        dot: bool,
        /// Largest order handed to exponential routines.
        #[arg(long)]
        max_n: Option<usize>,
        /// Largest number of maximum independent sets to enumerate.
        #[arg(long)]
        max_omega: Option<usize>,
        /// Skip the remaining stages once this much time has passed.
        #[arg(long)]
        timeout_seconds: Option<f64>,
    },
    /// Decide whether two disjoint maximum independent sets exist.
    Decide {
        input: Option<String>,
        /// auto, omega-pairs, condition-ii or unicyclic.
        #[arg(long, default_value = "auto")]
        strategy: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_omega: Option<usize>,
    },
    /// Run a property suite (or `all`) and print a JSON summary.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random graphs per order above the exhaustive range.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Print graph6 lines for a family, e.g. `corona-k1 cycle 5`.
    Generate {
        #[arg(required = true, num_args = 1..)]
        family: Vec<String>,
        /// Instances drawn for random families.
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a conjecture search described by a key = value config file.
    Search {
        config: PathBuf,
        /// Overrides the config's worker count.
        #[arg(long)]
        workers: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e)
            if e.chain().any(|c| {
                c.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
            }) =>
        {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.chain().find_map(|c| c.downcast_ref::<Error>()) {
        Some(
            Error::Graph6(_)
            | Error::EdgeList { .. }
            | Error::TooManyVertices(_)
            | Error::VertexOutOfRange { .. }
            | Error::SelfLoop(_)
            | Error::InvalidParameter(_)
            | Error::Io(_),
        ) => EXIT_PARSE,
        Some(Error::CapExceeded { .. }) => EXIT_CAP,
        Some(Error::StrategyMismatch { .. }) => EXIT_MISMATCH,
        _ => EXIT_INTERNAL,
    }
}

fn limits(max_n: Option<usize>, max_omega: Option<usize>) -> Limits {
    let mut l = Limits::default();
    if let Some(n) = max_n {
        l.max_n = n;
    }
    if let Some(o) = max_omega {
        l.max_omega = o;
    }
    l
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Writes to stdout; a closed pipe surfaces as [`std::io::ErrorKind::BrokenPipe`].
fn emit(text: &str) -> anyhow::Result<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn print_json<T: serde::Serialize>(v: &T) -> anyhow::Result<()> {
    emit(&(serde_json::to_string_pretty(v)? + "\n"))
}

fn run(cmd: Command) -> anyhow::Result<u8> {
    match cmd {
        Command::Analyze { input, json, dot, max_n, max_omega, timeout_seconds } => {
            let graphs = input::read_graphs(input.as_deref())?;
            let limits = limits(max_n, max_omega);
            let deadline = match timeout_seconds {
                Some(s) if !(s.is_finite() && s >= 0.0) => {
                    return Err(Error::InvalidParameter(format!("timeout {s} is not a non-negative number")).into())
                }
                Some(s) => Some(Instant::now() + Duration::from_secs_f64(s)),
                None => None,
            };
            let mut reports = Vec::new();
            for g in &graphs {
                let r = analyze::analyze(g, &limits, deadline)?;
                if dot {
                    emit(&analyze::render_dot(g, &r))?;
                } else if !json {
                    if !reports.is_empty() {
                        emit("\n")?;
                    }
                    emit(&analyze::render_text(&r))?;
                }
                reports.push(r);
            }
            if json {
                match reports.as_slice() {
                    [one] => print_json(one)?,
                    many => print_json(&many)?,
                }
            }
            if reports.iter().any(analyze::AnalysisReport::is_partial) {
                eprintln!("warning: some fields were skipped; the report is partial");
                return Ok(EXIT_CAP);
            }
            Ok(0)
        }
        Command::Decide { input, strategy, max_n, max_omega } => {
            let strategy: Strategy = strategy.parse()?;
            let graphs = input::read_graphs(input.as_deref())?;
            let limits = limits(max_n, max_omega);
            let mut certs = Vec::new();
            for g in &graphs {
                let c = decide(g, strategy, &limits)?;
                c.validate(g, &limits).with_context(|| format!("certificate for {}", encode_graph6(g)))?;
                certs.push(c);
            }
            match certs.as_slice() {
                [one] => print_json(one)?,
                many => print_json(&many)?,
            }
            Ok(0)
        }
        Command::Verify { suite, nmax, seed, samples, workers } => {
            let suites = Suite::parse_selection(&suite)?;
            let cfg = VerifyConfig {
                nmax,
                seed,
                samples,
                workers: workers.unwrap_or_else(default_workers),
                limits: Limits::default(),
            };
            let summary = verify::run(&suites, &cfg)?;
            for s in &summary.suites {
                eprintln!(
                    "{:<18} {}  graphs {:>7}  checks {:>9}  failures {}",
                    s.suite.name(),
                    if s.passed { "pass" } else { "FAIL" },
                    s.graphs,
                    s.checks,
                    s.failure_count
                );
                for f in &s.failures {
                    eprintln!("  {}: {} ({})", f.property, f.graph6, f.detail);
                }
            }
            print_json(&summary)?;
            Ok(if summary.passed { 0 } else { EXIT_COUNTEREXAMPLE })
        }
        Command::Generate { family, count, seed } => {
            let lines: String =
                generate::generate(&family, count, seed)?.iter().map(|g| encode_graph6(g) + "\n").collect();
            emit(&lines)?;
            Ok(0)
        }
        Command::Search { config, workers } => {
            let text = std::fs::read_to_string(&config).map_err(|e| Error::Io(format!("{}: {e}", config.display())))?;
            let base = config.parent().unwrap_or(Path::new("."));
            let cfg = search::parse_config(&text, base)?;
            let workers = workers.or(cfg.workers).unwrap_or_else(default_workers);
            let report = conjecture_search(&cfg.family, cfg.budget, cfg.seed, workers, &cfg.limits)?;
            report.revalidate(&cfg.limits).context("counterexample failed revalidation")?;
            let json = serde_json::to_string_pretty(&report)?;
            match &cfg.output {
                Some(path) => {
                    std::fs::write(path, json + "\n").map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                    eprintln!(
                        "examined {}  critical {}  counterexamples {}  report {}",
                        report.examined,
                        report.critical,
                        report.counterexamples.len(),
                        path.display()
                    );
                }
                None => emit(&(json + "\n"))?,
            }
            for c in &report.counterexamples {
                eprintln!("counterexample: {}", c.graph6);
            }
            Ok(if report.counterexamples.is_empty() { 0 } else { EXIT_COUNTEREXAMPLE })
        }
    }
}
