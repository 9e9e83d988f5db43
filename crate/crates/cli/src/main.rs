//! `motifcensus`: exact 3/4/5-vertex connected-subgraph census, null-model
//! significance, class-table dumps and brute-force verification.
//!
//! Exit codes: 0 success, 1 usage or configuration error, 2 input parse
//! error, 3 verification mismatch.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use motifcensus_cli::engine;
use motifcensus_cli::io::{load_edge_list, LoadError, LoadReport};
use motifcensus_cli::report::{
    self, CountReport, Format, SignificanceReport,
};
use motifcensus_core::census::Context;
use motifcensus_core::graph::DirectedGraph;
use motifcensus_core::nullmodel::{default_ensemble, SwitchConfig};
use motifcensus_core::oracle::{self, DEFAULT_BUDGET};
use motifcensus_core::CensusError;
use std::path::PathBuf;
use std::time::Instant;

const EXIT_USAGE: i32 = 1;
const EXIT_PARSE: i32 = 2;
const EXIT_MISMATCH: i32 = 3;

#[derive(Parser)]
#[command(
    name = "motifcensus",
    version,
    about = "Exact census of connected induced subgraphs of sizes 3-5 by isomorphism class"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct GraphArgs {
    /// Edge-list file: two whitespace-separated vertex tokens per line,
    /// '#'/'%' comments.
    input: PathBuf,
    /// Subgraph size to count.
    #[arg(short, long, value_parser = clap::value_parser!(u8).range(3..=5))]
    k: u8,
    /// Count on the undirected skeleton instead of the directed graph.
    #[arg(long)]
    undirected: bool,
    /// Keep zero-degree vertices instead of dropping them.
    #[arg(long)]
    keep_isolated: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count connected induced k-subgraphs per isomorphism class.
    Count {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Compare real counts against a degree-preserving random ensemble.
    Significance {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        /// PRNG seed for the ensemble.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of random graphs (defaults: 100 / 10 / 5 for k = 3 / 4 / 5).
        #[arg(long)]
        ensemble: Option<u32>,
        /// Edge-switch trials per edge when randomizing.
        #[arg(long, default_value_t = 3)]
        attempts: u32,
    },
    /// Dump the isomorphism-class table with correction divisors.
    Classes {
        #[arg(short, long, value_parser = clap::value_parser!(u8).range(3..=5))]
        k: u8,
        #[arg(long)]
        undirected: bool,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Verify the accelerated census against the brute-force oracle.
    OracleCheck {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Refuse runs that would enumerate more subgraphs than this.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Test hook: report this class with an off-by-one count.
        #[arg(long, hide = true)]
        corrupt_class: Option<u16>,
    },
}

fn fail(code: i32, msg: impl std::fmt::Display) -> ! {
    eprintln!("motifcensus: {msg}");
    std::process::exit(code);
}

fn load(graph: &GraphArgs) -> (DirectedGraph, LoadReport) {
    match load_edge_list(&graph.input, graph.keep_isolated) {
        Ok(pair) => pair,
        Err(e @ LoadError::Io(_)) => fail(EXIT_USAGE, e),
        Err(e) => fail(EXIT_PARSE, e),
    }
}

fn check_workers(workers: usize) {
    if workers == 0 {
        fail(EXIT_USAGE, "--workers must be at least 1");
    }
}

fn census_fail(e: CensusError) -> ! {
    match e {
        CensusError::BudgetExceeded { .. } | CensusError::EnsembleTooSmall => {
            fail(EXIT_USAGE, e)
        }
        other => fail(EXIT_USAGE, format!("internal error: {other}")),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return;
        }
        Err(e) => {
            eprint!("{e}");
            std::process::exit(EXIT_USAGE);
        }
    };

    match cli.cmd {
        Cmd::Count {
            graph,
            workers,
            format,
        } => {
            check_workers(workers);
            let (g, load_rep) = load(&graph);
            let ctx = Context::new(graph.k as usize, !graph.undirected);
            let start = Instant::now();
            let hist = engine::census(&g, &ctx, workers).unwrap_or_else(|e| census_fail(e));
            let elapsed = start.elapsed();
            let rep = CountReport {
                k: graph.k,
                directed: !graph.undirected,
                n: g.vertex_count(),
                m: g.edge_count(),
                total: hist.total(),
                rows: report::hist_rows(&hist, &ctx.classes),
            };
            print!("{}", report::render_count(&rep, format));
            eprintln!(
                "motifcensus: counted {} subgraphs in {:.3} ms ({} isolated vertices dropped)",
                rep.total,
                elapsed.as_secs_f64() * 1e3,
                load_rep.isolated_removed
            );
        }
        Cmd::Significance {
            graph,
            workers,
            format,
            seed,
            ensemble,
            attempts,
        } => {
            check_workers(workers);
            if attempts == 0 {
                fail(EXIT_USAGE, "--attempts must be at least 1");
            }
            let ensemble = ensemble.unwrap_or_else(|| default_ensemble(graph.k as usize));
            if ensemble < 2 {
                fail(EXIT_USAGE, "--ensemble must be at least 2");
            }
            let (g, _) = load(&graph);
            let ctx = Context::new(graph.k as usize, !graph.undirected);
            let cfg = SwitchConfig {
                attempts_per_edge: attempts,
                seed,
                ensemble,
            };
            let start = Instant::now();
            let stats =
                engine::significance(&g, &ctx, cfg, workers).unwrap_or_else(|e| census_fail(e));
            let elapsed = start.elapsed();
            let rep = SignificanceReport {
                k: graph.k,
                directed: !graph.undirected,
                n: g.vertex_count(),
                m: g.edge_count(),
                seed,
                ensemble,
                rows: report::significance_rows(&stats, &ctx.classes),
            };
            print!("{}", report::render_significance(&rep, format));
            eprintln!(
                "motifcensus: ensemble of {ensemble} done in {:.3} ms",
                elapsed.as_secs_f64() * 1e3
            );
        }
        Cmd::Classes {
            k,
            undirected,
            format,
        } => {
            let ctx = Context::new(k as usize, !undirected);
            print!("{}", report::render_classes(&ctx.classes, format));
        }
        Cmd::OracleCheck {
            graph,
            workers,
            budget,
            corrupt_class,
        } => {
            check_workers(workers);
            let (g, _) = load(&graph);
            let ctx = Context::new(graph.k as usize, !graph.undirected);
            let mut fast = engine::census(&g, &ctx, workers).unwrap_or_else(|e| census_fail(e));
            if let Some(class) = corrupt_class {
                fast.add(class, 1).unwrap();
            }
            let slow = if ctx.directed {
                oracle::oracle_directed(&g, ctx.k, &ctx.classes, budget)
            } else {
                oracle::oracle_undirected(&g.skeleton(), ctx.k, &ctx.classes, budget)
            }
            .unwrap_or_else(|e| census_fail(e));
            let mut mismatches = 0u32;
            for class in 0..ctx.classes.len() as u16 {
                let (a, b) = (fast.get(class), slow.hist.get(class));
                if a != b {
                    mismatches += 1;
                    println!(
                        "MISMATCH\tclass={class}\tcode={:x}\tcensus={a}\toracle={b}",
                        ctx.classes.code_bits(class)
                    );
                }
            }
            if mismatches > 0 {
                println!("FAIL\t{mismatches} classes disagree");
                std::process::exit(EXIT_MISMATCH);
            }
            println!(
                "PASS\tk={}\tclasses={}\tsubgraphs={}",
                ctx.k,
                ctx.classes.len(),
                slow.total
            );
        }
    }
}
