//! The `construct` subcommand: build a family member, write it out with a
//! provenance header, and optionally verify the family's expected invariants
//! against the actual graph.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Subcommand};

use equator::analysis::{analyze, AnalyzeOptions};
use equator::catalog;
use equator::constructions;
use equator::graph::Graph;

#[derive(Args, Clone)]
pub struct OutputArgs {
    /// Edge-list output path (stdout when omitted)
    #[arg(long, short = 'o')]
    out: Option<PathBuf>,
    /// Also write a graph6 file
    #[arg(long)]
    g6_out: Option<PathBuf>,
    /// Verify expected invariants (order, degree, girth, equator) after
    /// construction; nonzero exit on mismatch
    #[arg(long)]
    verify: bool,
    /// Cap the equator search during --verify (for very large instances the
    /// check then only certifies a witness of that length exists)
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Subcommand, Clone)]
pub enum Family {
    /// j copies of a Moore graph or cage minus a girth-cycle edge, chained
    Splice {
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        girth: usize,
        #[arg(long)]
        j: usize,
        /// Seed from the cage catalog instead of the Moore catalog
        #[arg(long)]
        cage: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// C4-free chain from the Brown graph B(delta + 1)
    C4free {
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        j: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// C4-free chain of j copies of the fixed 11-vertex gadget
    Gadget11 {
        #[arg(long)]
        j: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Brown polarity graph B(t)
    Brown {
        #[arg(long)]
        t: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Point-line incidence graph of PG(2, t)
    Incidence {
        #[arg(long)]
        t: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// A Moore graph from the catalog
    Moore {
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        girth: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// A cage from the catalog
    Cage {
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        girth: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Chain j copies of an equatorial graph, multiplying its equator
    Multiply {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        j: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Quotient an equatorial graph with a singleton part to a Moore graph
    Quotient {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Layered girth-3 equatorial graph with part sizes a,b,c
    Layered3 {
        #[arg(long)]
        q: usize,
        /// Three comma-separated part sizes, e.g. 1,3,1
        #[arg(long)]
        sizes: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Layered girth-4 equatorial graph with part sizes a,b,c,d
    Layered4 {
        #[arg(long)]
        q: usize,
        /// Four comma-separated part sizes, e.g. 1,2,2,1
        #[arg(long)]
        sizes: String,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// Expected invariants, from the family's closed formulas.
#[derive(Default)]
struct Expected {
    n: Option<usize>,
    min_degree: Option<usize>,
    regular: Option<bool>,
    girth: Option<usize>,
    equator: Option<usize>,
    c4free: bool,
}

fn parse_sizes<const K: usize>(s: &str) -> Result<[usize; K]> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|x| x.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .context("sizes must be comma-separated integers")?;
    let arr: [usize; K] = parts
        .try_into()
        .map_err(|v: Vec<usize>| anyhow::anyhow!("expected {K} sizes, got {}", v.len()))?;
    Ok(arr)
}

pub fn run(family: &Family, json: bool) -> Result<ExitCode> {
    let (graph, header, expected, output) = build(family)?;
    emit(&graph, &header, &expected, output, json)
}

fn build(family: &Family) -> Result<(Graph, Vec<String>, Expected, OutputArgs)> {
    let version = env!("CARGO_PKG_VERSION");
    let mut header = vec![format!("equator-tools v{version}")];
    Ok(match family {
        Family::Splice {
            delta,
            girth,
            j,
            cage,
            output,
        } => {
            let seed = if *cage {
                catalog::cage_catalog(*delta, *girth)?
            } else {
                catalog::moore_catalog(*delta, *girth)?
            };
            let g = constructions::splice_chain(&seed, *j)?;
            header.push(format!(
                "family: splice seed={} delta={delta} girth={girth} j={j}",
                seed.name
            ));
            let expected = Expected {
                n: Some(j * seed.graph.order()),
                min_degree: Some(*delta),
                regular: Some(true),
                girth: Some(*girth),
                equator: Some(j * girth),
                c4free: false,
            };
            (g, header, expected, output.clone())
        }
        Family::C4free { delta, j, output } => {
            let g = constructions::c4free_chain(*delta, *j)?;
            header.push(format!("family: c4free-chain delta={delta} j={j}"));
            header.push(
                "reading: chain edges join y_i to z_{i+1}; the in-block distance fact is d(y,z) = 4"
                    .to_string(),
            );
            let expected = Expected {
                n: Some(j * (delta * delta + 3 * delta + 2)),
                min_degree: Some(*delta),
                girth: None,
                equator: Some(5 * j),
                c4free: true,
                regular: None,
            };
            (g, header, expected, output.clone())
        }
        Family::Gadget11 { j, output } => {
            let g = constructions::gadget11_chain(*j)?;
            header.push(format!("family: gadget11-chain j={j}"));
            let expected = Expected {
                n: Some(11 * j),
                min_degree: Some(3),
                equator: Some(6 * j),
                c4free: true,
                ..Default::default()
            };
            (g, header, expected, output.clone())
        }
        Family::Brown { t, output } => {
            let g = equator::projective::brown_graph(*t)?;
            header.push(format!("family: brown t={t}"));
            let expected = Expected {
                n: Some((t * t + t + 1) as usize),
                min_degree: Some(*t as usize),
                c4free: true,
                ..Default::default()
            };
            (g, header, expected, output.clone())
        }
        Family::Incidence { t, output } => {
            let g = equator::projective::pg2_incidence_graph(*t)?;
            header.push(format!("family: pg2-incidence t={t}"));
            let expected = Expected {
                n: Some((2 * (t * t + t + 1)) as usize),
                min_degree: Some((t + 1) as usize),
                regular: Some(true),
                girth: Some(6),
                ..Default::default()
            };
            (g, header, expected, output.clone())
        }
        Family::Moore {
            delta,
            girth,
            output,
        } => {
            let entry = catalog::moore_catalog(*delta, *girth)?;
            header.push(format!("family: moore name={}", entry.name));
            let expected = Expected {
                n: Some(entry.graph.order()),
                min_degree: Some(*delta),
                regular: Some(true),
                girth: Some(*girth),
                ..Default::default()
            };
            (entry.graph, header, expected, output.clone())
        }
        Family::Cage {
            delta,
            girth,
            output,
        } => {
            let entry = catalog::cage_catalog(*delta, *girth)?;
            header.push(format!("family: cage name={}", entry.name));
            let expected = Expected {
                n: Some(entry.graph.order()),
                min_degree: Some(*delta),
                regular: Some(true),
                girth: Some(*girth),
                ..Default::default()
            };
            (entry.graph, header, expected, output.clone())
        }
        Family::Multiply { input, j, output } => {
            let base = super::load_graph(input)?;
            let base_report = analyze(&base, AnalyzeOptions::default());
            let g = constructions::multiply_equatorial(&base, *j)?;
            header.push(format!("family: multiply input={} j={j}", input.display()));
            let expected = Expected {
                n: Some(j * base.order()),
                min_degree: Some(base_report.delta),
                regular: Some(true),
                girth: base_report.girth,
                equator: Some(j * base_report.equator),
                c4free: false,
            };
            (g, header, expected, output.clone())
        }
        Family::Quotient { input, output } => {
            let base = super::load_graph(input)?;
            let base_report = analyze(&base, AnalyzeOptions::default());
            let g = constructions::quotient_to_moore(&base)?;
            header.push(format!("family: quotient input={}", input.display()));
            let moore = base_report.bound.as_ref().map(|b| b.moore as usize);
            let expected = Expected {
                n: moore,
                min_degree: Some(base_report.delta),
                regular: Some(true),
                girth: base_report.girth,
                ..Default::default()
            };
            (g, header, expected, output.clone())
        }
        Family::Layered3 { q, sizes, output } => {
            let arr = parse_sizes::<3>(sizes)?;
            let g = constructions::girth3_equatorial(*q, arr)?;
            header.push(format!("family: layered-girth3 q={q} sizes={sizes}"));
            let delta = arr.iter().sum::<usize>() - 1;
            let expected = Expected {
                n: Some(g.order()),
                min_degree: Some(delta),
                regular: Some(true),
                girth: Some(3),
                equator: Some(*q),
                c4free: false,
            };
            (g, header, expected, output.clone())
        }
        Family::Layered4 { q, sizes, output } => {
            let arr = parse_sizes::<4>(sizes)?;
            let g = constructions::girth4_equatorial(*q, arr)?;
            header.push(format!("family: layered-girth4 q={q} sizes={sizes}"));
            let delta = arr[0] + arr[2];
            let expected = Expected {
                n: Some(g.order()),
                min_degree: Some(delta),
                regular: Some(true),
                girth: Some(4),
                equator: Some(*q),
                c4free: false,
            };
            (g, header, expected, output.clone())
        }
    })
}

fn is_c4_free(g: &Graph) -> bool {
    let n = g.order();
    (0..n).all(|u| {
        (u + 1..n).all(|v| {
            g.neighbors(u)
                .iter()
                .filter(|w| g.neighbors(v).contains(w))
                .count()
                <= 1
        })
    })
}

fn emit(
    graph: &Graph,
    header: &[String],
    expected: &Expected,
    output: OutputArgs,
    json: bool,
) -> Result<ExitCode> {
    let text = equator::io::write_edge_list(graph, header);
    match &output.out {
        Some(path) => {
            std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?
        }
        None if !json => print!("{text}"),
        None => {}
    }
    if let Some(path) = &output.g6_out {
        std::fs::write(path, equator::io::write_graph6(graph) + "\n")
            .with_context(|| format!("writing {}", path.display()))?;
    }

    let mut checks: Vec<(String, String, String, bool)> = Vec::new();
    if output.verify {
        let report = analyze(
            graph,
            AnalyzeOptions {
                cap: output.cap,
                partition: false,
            },
        );
        let mut push = |name: &str, want: String, got: String| {
            let ok = want == got;
            checks.push((name.to_string(), want, got, ok));
        };
        if let Some(n) = expected.n {
            push("order", n.to_string(), report.n.to_string());
        }
        if let Some(d) = expected.min_degree {
            push("min_degree", d.to_string(), report.delta.to_string());
        }
        if let Some(r) = expected.regular {
            push("regular", r.to_string(), report.regular.to_string());
        }
        if let Some(g) = expected.girth {
            push(
                "girth",
                g.to_string(),
                report.girth.map_or("inf".into(), |x| x.to_string()),
            );
        }
        if let Some(q) = expected.equator {
            if report.search_capped {
                // capped verification only certifies a witness at the cap
                push(
                    "equator>=cap-witness",
                    output.cap.unwrap_or(q).to_string(),
                    report.equator.to_string(),
                );
            } else {
                push("equator", q.to_string(), report.equator.to_string());
            }
        }
        if expected.c4free {
            push("c4free", "true".into(), is_c4_free(graph).to_string());
        }
    }
    let all_ok = checks.iter().all(|(_, _, _, ok)| *ok);

    if json {
        let value = serde_json::json!({
            "n": graph.order(),
            "m": graph.size(),
            "graph6": equator::io::write_graph6(graph),
            "header": header,
            "verified": output.verify.then(|| checks.iter().map(|(name, want, got, ok)| {
                serde_json::json!({"check": name, "expected": want, "actual": got, "pass": ok})
            }).collect::<Vec<_>>()),
        });
        println!("{}", serde_json::to_string_pretty(&value)?);
    } else if output.verify {
        for (name, want, got, ok) in &checks {
            println!(
                "[{}] {name}: expected {want}, got {got}",
                if *ok { "PASS" } else { "FAIL" }
            );
        }
    }
    if output.verify && !all_ok {
        bail!("constructed graph failed verification");
    }
    Ok(ExitCode::SUCCESS)
}
