//! `polyforge`: exact graph polynomials and identity checks from the command
//! line. Exit status is 0 when every requested check passes, 1 when some
//! check fails and 2 on bad input.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use polyforge::Status;
use serde::Serialize;
use serde_json::Value;

use commands::{Outcome, PolyKind};
use input::GraphInput;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "polyforge", version, about = "Exact Potts, Tutte, flow, chromatic and order polynomials")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads for corpus runs (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Potts partition function; uniform weights give a polynomial in (q, w).
    Potts {
        #[command(flatten)]
        input: GraphInput,
        /// File of `edge-id weight` lines.
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Tutte polynomial.
    Tutte {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Chromatic polynomial.
    Chromatic {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Flow polynomial.
    Flow {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Characteristic polynomial of the cycle matroid.
    Char {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Order polynomial of an acyclic digraph (`p a`, then 1-based arcs).
    Order {
        path: Option<PathBuf>,
        #[arg(long)]
        inline: Option<String>,
        #[arg(long, conflicts_with = "weak")]
        strict: bool,
        #[arg(long)]
        weak: bool,
    },
    /// Chromatic polynomial with its sigma, w and tau coordinates.
    Polys {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Counts of sigma-, w- and tau-unreal connected graphs of one order.
    Census {
        #[arg(long)]
        order: usize,
        /// One graph6 string per line, one graph per isomorphism class.
        #[arg(long)]
        graph6: Option<PathBuf>,
        #[arg(long)]
        witnesses: bool,
    },
    /// Run an identity suite (all, potts, tutte, flow, order, bases).
    Verify {
        suite: String,
        /// Check one graph instead of the built-in corpus.
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 6)]
        max_order: usize,
        #[arg(long, default_value_t = 4)]
        dag_order: usize,
    },
    /// Isolate the real roots of a graph polynomial.
    Roots {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = PolyKind::Flow)]
        poly: PolyKind,
        /// Largest isolating interval width, as a rational.
        #[arg(long, default_value = "1/1000000000")]
        width: String,
        /// Keep only roots in this window.
        #[arg(long, num_args = 2, value_names = ["LOW", "HIGH"])]
        between: Option<Vec<String>>,
        #[arg(long)]
        timeout: Option<u64>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Potts { .. } => "potts",
            Command::Tutte { .. } => "tutte",
            Command::Chromatic { .. } => "chromatic",
            Command::Flow { .. } => "flow",
            Command::Char { .. } => "char",
            Command::Order { .. } => "order",
            Command::Polys { .. } => "polys",
            Command::Census { .. } => "census",
            Command::Verify { .. } => "verify",
            Command::Roots { .. } => "roots",
        }
    }

    fn run(&self) -> Result<Outcome, String> {
        match self {
            Command::Potts { input, weights } => commands::potts(input, weights.as_ref()),
            Command::Tutte { input } => commands::tutte(input),
            Command::Chromatic { input } => commands::chromatic(input),
            Command::Flow { input } => commands::flow(input),
            Command::Char { input } => commands::characteristic(input),
            Command::Order { path, inline, weak, .. } => commands::order(path.as_ref(), inline.as_deref(), *weak),
            Command::Polys { input } => commands::polys(input),
            Command::Census { order, graph6, witnesses } => commands::census_cmd(*order, graph6.as_ref(), *witnesses),
            Command::Verify { suite, input, max_order, dag_order } => commands::verify(suite, Some(input), *max_order, *dag_order),
            Command::Roots { input, poly, width, between, timeout } => {
                commands::roots(input, *poly, width, between.as_deref(), *timeout)
            }
        }
    }
}

#[derive(Debug, Serialize)]
struct Summary {
    passed: usize,
    failed: usize,
    skipped: usize,
}

#[derive(Debug, Serialize)]
struct RunReport<'a> {
    subcommand: &'a str,
    input_digest: &'a str,
    results: &'a Value,
    reports: &'a [polyforge::IdentityReport],
    summary: Summary,
    elapsed_ms: u128,
}

fn summarize(reports: &[polyforge::IdentityReport]) -> Summary {
    let count = |f: fn(&Status) -> bool| reports.iter().filter(|r| f(&r.status)).count();
    Summary {
        passed: count(|s| matches!(s, Status::Pass)),
        failed: count(|s| matches!(s, Status::Fail { .. })),
        skipped: count(|s| matches!(s, Status::Skipped { .. })),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let outcome = match cli.command.run() {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let summary = summarize(&outcome.reports);
    let failed = summary.failed > 0;
    match cli.format {
        Format::Json => {
            let report = RunReport {
                subcommand: cli.command.name(),
                input_digest: &outcome.input_digest,
                results: &outcome.results,
                reports: &outcome.reports,
                summary,
                elapsed_ms: start.elapsed().as_millis(),
            };
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
        }
        Format::Text => {
            for line in &outcome.text {
                println!("{line}");
            }
            for r in outcome.reports.iter().filter(|r| !r.passed()) {
                println!("{r}");
            }
            if !outcome.reports.is_empty() {
                println!("{} passed, {} failed, {} skipped", summary.passed, summary.failed, summary.skipped);
            }
        }
    }
    if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
