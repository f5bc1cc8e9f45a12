//! `ebi`: compute, construct and verify edge-balanced index sets.
//!
//! Exit status: 0 success, 1 verification failure, 2 usage or input error,
//! 3 search stopped by the budget.

mod descriptor;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use ebi_core::crown_construct::{all_witnesses, labeling_for_index, ConstructError};
use ebi_core::dot::{crown_vertex_name, labeling_to_dot};
use ebi_core::ebi_search::{
    compute_ebi_with_progress, Progress, SearchConfig, SearchError, DEFAULT_BUDGET,
};
use ebi_core::labeling::{EdgeLabeling, LabelCounts};
use ebi_core::verify::{self, VerifyReport, DEFAULT_SEED};

#[derive(Debug, Parser)]
#[command(
    name = "ebi",
    version,
    about = "Edge-balanced index sets of finite simple graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exhaustively compute the edge-balanced index set of a graph.
    Ebi {
        /// Graph descriptor, e.g. crown:4, bipartite:3,3, product:direct:complete:5:complete:2.
        graph: String,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Report the number of visited labelings on stderr while searching.
        #[arg(long)]
        progress: bool,
    },
    /// Emit constructive witness labelings of the crown graph K_n x K_2.
    Construct {
        /// Crown order n (at least 3).
        n: usize,
        /// Target index; every attainable index when omitted.
        #[arg(short = 'k', long = "index")]
        index: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a verification battery and report pass/fail per check.
    Verify {
        #[command(subcommand)]
        scope: VerifyScope,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print a graph in edge-list format.
    Graph {
        graph: String,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyScope {
    /// Replay constructions and schedules for crown orders in an inclusive range, e.g. 4..12.
    CrownRange { range: String },
    /// Exhaustive maximum index of odd-regular graphs against the regular bound.
    Lemma3 {
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Random edge-friendly labelings of an odd-degree graph have even index.
    Lemma5 {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Strong balance of even-size graphs and the parity conditions on products.
    Theorem3 {
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Product edge counts of random graph pairs against the closed forms.
    Prop2 {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long = "max-p", default_value_t = 8)]
        max_p: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// Maximum number of labelings to visit.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads for the enumeration.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            budget: self.budget,
            jobs: self.jobs.max(1),
        }
    }
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Write to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Descriptor(#[from] descriptor::DescriptorError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error("invalid range {0:?}: expected A..B with A <= B")]
    Range(String),
    #[error("writing output: {0}")]
    Io(#[from] std::io::Error),
}

/// What a command produced, beyond its output text.
enum Outcome {
    Success,
    VerificationFailed,
    BudgetExhausted,
}

#[derive(Serialize)]
struct Witness {
    n: usize,
    index: usize,
    labels: String,
    counts: LabelCounts,
}

impl Witness {
    fn new(n: usize, labeling: &EdgeLabeling) -> Self {
        let counts = labeling.counts();
        Self {
            n,
            index: counts.index,
            labels: labeling.bit_string(),
            counts,
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}

fn emit(output: &OutputArgs, text: &str) -> Result<(), CliError> {
    match &output.output {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn parse_range(text: &str) -> Result<std::ops::RangeInclusive<usize>, CliError> {
    let bad = || CliError::Range(text.to_string());
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

fn run_ebi(
    graph: &str,
    search: &SearchArgs,
    output: &OutputArgs,
    progress: bool,
) -> Result<Outcome, CliError> {
    let graph = Arc::new(descriptor::parse(graph)?);
    let counter = Progress::new();
    let done = AtomicBool::new(false);
    let report = std::thread::scope(|scope| {
        if progress {
            scope.spawn(|| {
                while !done.load(Ordering::Relaxed) {
                    std::thread::sleep(Duration::from_millis(500));
                    eprintln!("visited {}", counter.visited());
                }
            });
        }
        let report = compute_ebi_with_progress(&graph, search.config(), Some(&counter));
        done.store(true, Ordering::Relaxed);
        report
    })?;
    emit(output, &to_json(&report.to_json()))?;
    Ok(if report.complete {
        Outcome::Success
    } else {
        Outcome::BudgetExhausted
    })
}

fn run_construct(
    n: usize,
    index: Option<usize>,
    format: Format,
    output: &OutputArgs,
) -> Result<Outcome, CliError> {
    let witnesses = match index {
        Some(k) => vec![(k, labeling_for_index(n, k)?)],
        None => all_witnesses(n)?,
    };
    let text = match format {
        Format::Json => {
            let json: Vec<_> = witnesses.iter().map(|(_, l)| Witness::new(n, l)).collect();
            match index {
                Some(_) => to_json(&json[0]),
                None => to_json(&json),
            }
        }
        Format::Dot => witnesses
            .iter()
            .map(|(k, l)| {
                labeling_to_dot(l, &format!("K{n} x K2, index {k}"), crown_vertex_name(n))
            })
            .collect(),
    };
    emit(output, &text)?;
    Ok(Outcome::Success)
}

fn run_verify(scope: &VerifyScope, output: &OutputArgs) -> Result<Outcome, CliError> {
    let report: VerifyReport = match scope {
        VerifyScope::CrownRange { range } => verify::crown_range(parse_range(range)?),
        VerifyScope::Lemma3 { search } => verify::lemma3(search.config()),
        VerifyScope::Lemma5 {
            graph,
            samples,
            seed,
        } => verify::lemma5(graph, &Arc::new(descriptor::parse(graph)?), *samples, *seed),
        VerifyScope::Theorem3 { search } => verify::theorem3(search.config()),
        VerifyScope::Prop2 {
            trials,
            max_p,
            seed,
        } => verify::prop2(*trials, *max_p, *seed),
    };
    emit(output, &to_json(&report))?;
    Ok(if report.passed {
        Outcome::Success
    } else {
        Outcome::VerificationFailed
    })
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Ebi {
            graph,
            search,
            output,
            progress,
        } => run_ebi(&graph, &search, &output, progress),
        Command::Construct {
            n,
            index,
            format,
            output,
        } => run_construct(n, index, format, &output),
        Command::Verify { scope, output } => run_verify(&scope, &output),
        Command::Graph { graph, output } => {
            emit(&output, &descriptor::parse(&graph)?.to_edge_list())?;
            Ok(Outcome::Success)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => ExitCode::from(1),
        Ok(Outcome::BudgetExhausted) => {
            eprintln!("ebi: budget exhausted; report is partial");
            ExitCode::from(3)
        }
        Err(err) => {
            eprintln!("ebi: {err}");
            ExitCode::from(2)
        }
    }
}
