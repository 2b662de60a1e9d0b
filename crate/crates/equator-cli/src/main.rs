//! Command-line front end: analyze graphs, construct the extremal families,
//! verify the structure theory clause by clause, and run tiny exhaustive
//! searches. Exit codes: 0 success/pass, 1 verification failed, 2 error.

mod construct;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use equator::analysis::{analyze, AnalyzeOptions};
use equator::graph::Graph;
use equator::search::{min_order_search, SearchSpec};

#[derive(Parser)]
#[command(
    name = "equator",
    version,
    about = "Longest isometric cycles and the graphs extremal for them"
)]
struct Cli {
    /// Worker threads (default: EQUATOR_THREADS, then all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Emit machine-readable JSON on stdout
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report for a graph file (edge list or graph6)
    Analyze {
        file: PathBuf,
        /// Cap the equator search ceiling (partial analysis of huge inputs)
        #[arg(long)]
        cap: Option<usize>,
        /// Include induced partition sizes for equatorial graphs
        #[arg(long)]
        partition: bool,
    },
    /// Generate a graph from one of the extremal families
    Construct {
        #[command(subcommand)]
        family: construct::Family,
    },
    /// Check a named theorem against graph files
    Verify {
        /// One of: lower-bound, k-degree, structure, uniqueness, retraction,
        /// characterize, brown-properties
        theorem: String,
        files: Vec<PathBuf>,
        /// Isometric cycle budget for `uniqueness`
        #[arg(long, default_value_t = 50)]
        cycles: usize,
    },
    /// Exhaustive minimum-order search for (delta+, g, q)-graphs (n <= 12)
    Search {
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        girth: usize,
        #[arg(long)]
        equator: usize,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long)]
        require_regular: bool,
        /// Write each witness as graph6 + edge list into this directory
        #[arg(long)]
        witness_dir: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads.or_else(|| {
        std::env::var("EQUATOR_THREADS")
            .ok()
            .and_then(|s| s.parse().ok())
    }) {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn load_graph(path: &PathBuf) -> Result<Graph> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let g =
        equator::io::parse_auto(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(g)
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Analyze {
            file,
            cap,
            partition,
        } => {
            let g = load_graph(file)?;
            let report = analyze(
                &g,
                AnalyzeOptions {
                    cap: *cap,
                    partition: *partition,
                },
            );
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print_analysis(&report);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { family } => construct::run(family, cli.json),
        Command::Verify {
            theorem,
            files,
            cycles,
        } => verify::run(theorem, files, *cycles, cli.json),
        Command::Search {
            delta,
            girth,
            equator,
            max_n,
            require_regular,
            witness_dir,
        } => {
            let spec = SearchSpec {
                delta_min: *delta,
                girth: *girth,
                equator: *equator,
                n_max: *max_n,
                require_regular: *require_regular,
            };
            let result = min_order_search(&spec)?;
            if let Some(dir) = witness_dir {
                std::fs::create_dir_all(dir)?;
                for (i, w) in result.witnesses.iter().enumerate() {
                    let base = dir.join(format!("witness_{i:03}"));
                    std::fs::write(base.with_extension("g6"), equator::io::write_graph6(w))?;
                    std::fs::write(
                        base.with_extension("txt"),
                        equator::io::write_edge_list(w, &[]),
                    )?;
                }
            }
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&result.to_json())?);
            } else {
                match result.min_order {
                    Some(n) => println!(
                        "min_order {} with {} witness(es): {}",
                        n,
                        result.witnesses.len(),
                        result
                            .witnesses
                            .iter()
                            .map(equator::io::write_graph6)
                            .collect::<Vec<_>>()
                            .join(" ")
                    ),
                    None => println!("no witness up to n = {} (search exhausted)", spec.n_max),
                }
                println!(
                    "nodes_explored {} wall_ms {}",
                    result.nodes_explored, result.wall_ms
                );
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_analysis(r: &equator::AnalysisReport) {
    println!("n         {}", r.n);
    println!("m         {}", r.m);
    println!("delta     {}", r.delta);
    println!("regular   {}", r.regular);
    println!("connected {}", r.connected);
    match r.girth {
        Some(g) => println!("girth     {g}"),
        None => println!("girth     inf (acyclic)"),
    }
    if let (Some(d), Some(rad)) = (r.diameter, r.radius) {
        println!("diameter  {d}");
        println!("radius    {rad}");
    }
    println!(
        "equator   {}{}",
        r.equator,
        if r.search_capped { " (capped)" } else { "" }
    );
    if let Some(w) = &r.witness {
        println!(
            "witness   {}",
            w.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        );
    }
    if let Some(b) = &r.bound {
        println!(
            "bound     n*g = {} vs q*M = {} -> satisfied={} tight={} regime_ok={}",
            b.n * b.girth,
            b.lower_bound_numerator,
            b.satisfied,
            b.tight,
            b.regime_ok
        );
    }
    println!("equatorial {}", r.equatorial);
    if let Some(sizes) = &r.part_sizes {
        println!(
            "parts     [{}]",
            sizes
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        );
    }
}
