//! Command-line front end: parse graph files, run the WCW/EVS pipelines or
//! their brute-force oracles, emit human or JSON reports, and sweep small
//! graph corpora comparing the two.
//!
//! Exit codes: 0 success (or "true" for recognition), 1 recognition says
//! "false", 2 input error (unreadable file, parse failure, claw in WCW
//! input), 3 internal invariant violation.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use weightspace::corpus;
use weightspace::graph::{Graph, Matching};
use weightspace::linalg::{format_rational, rat, Provenance, Restriction, WeightSpace};
use weightspace::{evs, oracle, wcw, Error};

#[derive(Parser)]
#[command(name = "weightspace", version, about = "Exact weight spaces of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Include witnesses (certificates) in the output.
    #[arg(long, global = true)]
    certificates: bool,
    /// Worker threads for corpus sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Vector space of vertex weights making a claw-free graph w-well-covered.
    Wcw { file: PathBuf },
    /// Vector space of edge weights making a graph w-equimatchable.
    Evs { file: PathBuf },
    /// WCW(G) recomputed from all maximal independent sets (brute force).
    OracleWcw { file: PathBuf },
    /// EVS(G) recomputed from all maximal matchings (brute force).
    OracleEvs { file: PathBuf },
    /// Decide whether a claw-free graph is well-covered.
    RecognizeWellcovered { file: PathBuf },
    /// Decide whether a graph is equimatchable.
    RecognizeEquimatchable { file: PathBuf },
    /// Compare pipelines against oracles over a corpus of small graphs:
    /// exhaustive for n <= 5, seeded random samples for n in {6, 7}.
    Verify {
        /// Largest vertex count to sweep (1..=7).
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=7))]
        max_n: u8,
        /// Random graphs per vertex count above 5.
        #[arg(long, default_value_t = 500)]
        samples: usize,
        /// Seed for the random part of the sweep.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Internal(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Wcw { file } => {
            let g = load_graph(file)?;
            let (space, restrictions) = wcw::wcw_space(&g)?;
            print_space_report(cli, &g, "wcw", &space, &restrictions);
            Ok(ExitCode::SUCCESS)
        }
        Command::Evs { file } => {
            let g = load_graph(file)?;
            let (space, restrictions) = evs::evs_space(&g)?;
            print_space_report(cli, &g, "evs", &space, &restrictions);
            Ok(ExitCode::SUCCESS)
        }
        Command::OracleWcw { file } => {
            let g = load_graph(file)?;
            let (space, restrictions) = oracle::oracle_wcw(&g)?;
            print_space_report(cli, &g, "wcw", &space, &restrictions);
            Ok(ExitCode::SUCCESS)
        }
        Command::OracleEvs { file } => {
            let g = load_graph(file)?;
            let (space, restrictions) = oracle::oracle_evs(&g)?;
            print_space_report(cli, &g, "evs", &space, &restrictions);
            Ok(ExitCode::SUCCESS)
        }
        Command::RecognizeWellcovered { file } => {
            let g = load_graph(file)?;
            recognize_wellcovered(cli, &g)
        }
        Command::RecognizeEquimatchable { file } => {
            let g = load_graph(file)?;
            recognize_equimatchable(cli, &g)
        }
        Command::Verify {
            max_n,
            samples,
            seed,
        } => verify(cli, *max_n as usize, *samples, *seed),
    }
}

fn load_graph(path: &Path) -> Result<Graph, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("cannot read {}: {e}", path.display()),
    })?;
    weightspace::parse_graph(&text)
}

fn edge_pairs(g: &Graph, m: &Matching) -> Vec<(usize, usize)> {
    m.edge_indices().iter().map(|&i| g.edge(i)).collect()
}

fn pairs_json(pairs: &[(usize, usize)]) -> Value {
    Value::Array(pairs.iter().map(|&(u, v)| json!([u, v])).collect())
}

fn provenance_json(g: &Graph, p: &Provenance, certificates: bool) -> Value {
    match p {
        Provenance::GeneratingSubgraph { core, witness } => {
            let mut obj = json!({
                "type": "generating-subgraph",
                "shape": core.shape.to_string(),
                "b_x": core.b_x.as_slice(),
                "b_y": core.b_y.as_slice(),
            });
            if certificates {
                obj["witness"] = json!(witness.as_slice());
            }
            obj
        }
        Provenance::SymDiffPath {
            vertices,
            matchings,
        } => {
            let mut obj = json!({ "type": "path", "vertices": vertices });
            if certificates {
                obj["witness"] = json!({
                    "m1": pairs_json(&edge_pairs(g, &matchings.0)),
                    "m2": pairs_json(&edge_pairs(g, &matchings.1)),
                });
            }
            obj
        }
        Provenance::SymDiffCycle {
            vertices,
            matchings,
        } => {
            let mut obj = json!({ "type": "cycle", "vertices": vertices });
            if certificates {
                obj["witness"] = json!({
                    "m1": pairs_json(&edge_pairs(g, &matchings.0)),
                    "m2": pairs_json(&edge_pairs(g, &matchings.1)),
                });
            }
            obj
        }
        Provenance::MaximalIndependentPair { first, second } => json!({
            "type": "maximal-independent-sets",
            "first": first.as_slice(),
            "second": second.as_slice(),
        }),
        Provenance::MaximalMatchingPair { first, second } => json!({
            "type": "maximal-matchings",
            "first": pairs_json(&edge_pairs(g, first)),
            "second": pairs_json(&edge_pairs(g, second)),
        }),
    }
}

fn provenance_text(g: &Graph, p: &Provenance) -> String {
    match p {
        Provenance::GeneratingSubgraph { core, witness } => {
            format!("generating {core} witness={witness}")
        }
        Provenance::SymDiffPath { vertices, .. } => format!("path {vertices:?}"),
        Provenance::SymDiffCycle { vertices, .. } => format!("cycle {vertices:?}"),
        Provenance::MaximalIndependentPair { first, second } => {
            format!("maximal independent sets {first} and {second}")
        }
        Provenance::MaximalMatchingPair { first, second } => format!(
            "maximal matchings {:?} and {:?}",
            edge_pairs(g, first),
            edge_pairs(g, second)
        ),
    }
}

fn witness_text(g: &Graph, p: &Provenance) -> Option<String> {
    match p {
        Provenance::SymDiffPath { matchings, .. } | Provenance::SymDiffCycle { matchings, .. } => {
            Some(format!(
                "m1={:?} m2={:?}",
                edge_pairs(g, &matchings.0),
                edge_pairs(g, &matchings.1)
            ))
        }
        _ => None,
    }
}

/// Variable name for coordinate `i` in the given mode.
fn var_name(g: &Graph, mode: &str, i: usize) -> String {
    if mode == "evs" {
        let (u, v) = g.edge(i);
        format!("w({u},{v})")
    } else {
        format!("w{i}")
    }
}

fn print_space_report(
    cli: &Cli,
    g: &Graph,
    mode: &str,
    space: &WeightSpace,
    restrictions: &[Restriction],
) {
    if cli.json {
        let basis: Vec<Vec<String>> = space
            .basis()
            .iter()
            .map(|row| row.iter().map(format_rational).collect())
            .collect();
        let restrictions_json: Vec<Value> = restrictions
            .iter()
            .map(|r| {
                json!({
                    "coeffs": r.coeffs.iter().map(format_rational).collect::<Vec<_>>(),
                    "provenance": provenance_json(g, &r.provenance, cli.certificates),
                })
            })
            .collect();
        let report = json!({
            "n": g.n(),
            "m": g.m(),
            "edges": pairs_json(g.edges()),
            "mode": mode,
            "dimension": space.dimension(),
            "basis": basis,
            "restrictions": restrictions_json,
        });
        println!("{report}");
        return;
    }
    println!("graph: n={}, m={}", g.n(), g.m());
    println!("mode: {mode}");
    println!("dimension: {}", space.dimension());
    println!("basis:");
    for row in space.basis() {
        let rendered: Vec<String> = row.iter().map(format_rational).collect();
        println!("  [{}]", rendered.join(", "));
    }
    println!("restrictions ({}):", restrictions.len());
    for r in restrictions {
        println!("  {}", r.render(|i| var_name(g, mode, i)));
        if cli.certificates {
            println!("    via {}", provenance_text(g, &r.provenance));
            if let Some(w) = witness_text(g, &r.provenance) {
                println!("    witness {w}");
            }
        }
    }
}

fn recognize_wellcovered(cli: &Cli, g: &Graph) -> Result<ExitCode, Error> {
    let (space, restrictions) = wcw::wcw_space(g)?;
    let ones = vec![rat(1); g.n()];
    let well_covered = space.contains(&ones)?;
    let violated = if well_covered {
        None
    } else {
        restrictions
            .iter()
            .find(|r| r.evaluate(&ones) != rat(0))
    };
    if cli.json {
        let mut report = json!({
            "n": g.n(),
            "m": g.m(),
            "edges": pairs_json(g.edges()),
            "mode": "wcw",
            "well_covered": well_covered,
        });
        if let Some(r) = violated {
            report["violated"] = json!({
                "restriction": r.render(|i| var_name(g, "wcw", i)),
                "provenance": provenance_json(g, &r.provenance, true),
            });
        }
        println!("{report}");
    } else {
        println!("well-covered: {well_covered}");
        if let Some(r) = violated {
            println!(
                "violated restriction: {}",
                r.render(|i| var_name(g, "wcw", i))
            );
            println!("  via {}", provenance_text(g, &r.provenance));
        }
    }
    Ok(if well_covered {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn recognize_equimatchable(cli: &Cli, g: &Graph) -> Result<ExitCode, Error> {
    let obstruction = evs::equimatchability_obstruction(g)?;
    let equimatchable = obstruction.is_none();
    if cli.json {
        let mut report = json!({
            "n": g.n(),
            "m": g.m(),
            "edges": pairs_json(g.edges()),
            "mode": "evs",
            "equimatchable": equimatchable,
        });
        if let Some((path, witness)) = &obstruction {
            report["obstruction"] = json!({
                "path": path.vertices(),
                "m1": pairs_json(&edge_pairs(g, &witness.m1)),
                "m2": pairs_json(&edge_pairs(g, &witness.m2)),
            });
        }
        println!("{report}");
    } else {
        println!("equimatchable: {equimatchable}");
        if let Some((path, witness)) = &obstruction {
            println!("obstruction path: {:?}", path.vertices());
            println!(
                "  maximal matchings m1={:?} m2={:?}",
                edge_pairs(g, &witness.m1),
                edge_pairs(g, &witness.m2)
            );
        }
    }
    Ok(if equimatchable {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[derive(Default, Clone)]
struct SweepTotals {
    graphs: u64,
    evs_ok: u64,
    wcw_checked: u64,
    wcw_ok: u64,
    line_ok: u64,
    recognition_ok: u64,
    failures: Vec<String>,
}

impl SweepTotals {
    fn absorb(&mut self, other: SweepTotals) {
        self.graphs += other.graphs;
        self.evs_ok += other.evs_ok;
        self.wcw_checked += other.wcw_checked;
        self.wcw_ok += other.wcw_ok;
        self.line_ok += other.line_ok;
        self.recognition_ok += other.recognition_ok;
        self.failures.extend(other.failures);
    }

    fn all_ok(&self) -> bool {
        self.evs_ok == self.graphs
            && self.wcw_ok == self.wcw_checked
            && self.line_ok == self.graphs
            && self.recognition_ok == self.graphs
    }
}

fn check_graph(g: &Graph, totals: &mut SweepTotals) -> Result<(), Error> {
    totals.graphs += 1;
    let tag = || format!("n={} edges={:?}", g.n(), g.edges());

    let (evs_space, _) = evs::evs_space(g)?;
    let (evs_reference, _) = oracle::oracle_evs(g)?;
    if evs_space.subspace_equal(&evs_reference)? {
        totals.evs_ok += 1;
    } else {
        totals.failures.push(format!("evs mismatch: {}", tag()));
    }

    let line = g.line_graph();
    let (wcw_of_line, _) = wcw::wcw_space(line.graph())?;
    if evs_space.subspace_equal(&wcw_of_line)? {
        totals.line_ok += 1;
    } else {
        totals
            .failures
            .push(format!("line-graph identity fails: {}", tag()));
    }

    let quick = evs::is_equimatchable(g)?;
    let ones = vec![rat(1); g.m()];
    let member = evs_space.contains(&ones)?;
    let matchings = oracle::maximal_matchings(g);
    let cardinal = matchings.windows(2).all(|w| w[0].len() == w[1].len());
    if quick == member && quick == cardinal {
        totals.recognition_ok += 1;
    } else {
        totals
            .failures
            .push(format!("recognition disagreement: {}", tag()));
    }

    if g.is_claw_free() {
        totals.wcw_checked += 1;
        let (wcw_space, _) = wcw::wcw_space(g)?;
        let (wcw_reference, _) = oracle::oracle_wcw(g)?;
        if wcw_space.subspace_equal(&wcw_reference)? {
            totals.wcw_ok += 1;
        } else {
            totals.failures.push(format!("wcw mismatch: {}", tag()));
        }
    }
    Ok(())
}

fn sweep_level(n: usize, samples: usize, seed: u64, jobs: usize) -> Result<SweepTotals, Error> {
    let graphs: Vec<Graph> = if n <= 5 {
        corpus::all_labeled_graphs(n).collect()
    } else {
        let mut rng = corpus::seeded_rng(seed ^ (n as u64) << 32);
        (0..samples)
            .map(|i| {
                let p = 0.2 + 0.6 * ((i % 7) as f64) / 6.0;
                corpus::random_graph(n, p, &mut rng)
            })
            .collect()
    };
    let workers = jobs.max(1).min(graphs.len().max(1));
    if workers <= 1 {
        let mut totals = SweepTotals::default();
        for g in &graphs {
            check_graph(g, &mut totals)?;
        }
        return Ok(totals);
    }
    let chunk_size = graphs.len().div_ceil(workers);
    let results: Vec<Result<SweepTotals, Error>> = std::thread::scope(|scope| {
        let handles: Vec<_> = graphs
            .chunks(chunk_size)
            .map(|chunk| {
                scope.spawn(move || {
                    let mut totals = SweepTotals::default();
                    for g in chunk {
                        check_graph(g, &mut totals)?;
                    }
                    Ok(totals)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    // Merge in chunk order so output is independent of scheduling.
    let mut totals = SweepTotals::default();
    for r in results {
        totals.absorb(r?);
    }
    Ok(totals)
}

fn verify(cli: &Cli, max_n: usize, samples: usize, seed: u64) -> Result<ExitCode, Error> {
    let mut levels = Vec::new();
    let mut grand = SweepTotals::default();
    for n in 1..=max_n {
        let samples_here = if n <= 5 { 0 } else { samples };
        let totals = sweep_level(n, samples_here, seed, cli.jobs)?;
        grand.absorb(totals.clone());
        levels.push((n, totals));
    }
    let ok = grand.all_ok();
    if cli.json {
        let level_values: Vec<Value> = levels
            .iter()
            .map(|(n, t)| {
                json!({
                    "n": n,
                    "graphs": t.graphs,
                    "evs_ok": t.evs_ok,
                    "wcw_claw_free": t.wcw_checked,
                    "wcw_ok": t.wcw_ok,
                    "line_graph_ok": t.line_ok,
                    "recognition_ok": t.recognition_ok,
                })
            })
            .collect();
        let report = json!({
            "max_n": max_n,
            "samples": samples,
            "seed": seed,
            "levels": level_values,
            "failures": grand.failures,
            "ok": ok,
        });
        println!("{report}");
    } else {
        for (n, t) in &levels {
            println!(
                "n={n}: {}/{} graphs: evs matches oracle; {}/{} claw-free graphs: wcw matches oracle; line-graph identity {}/{}; recognition {}/{}",
                t.evs_ok, t.graphs, t.wcw_ok, t.wcw_checked, t.line_ok, t.graphs,
                t.recognition_ok, t.graphs
            );
        }
        for f in &grand.failures {
            println!("FAIL {f}");
        }
        println!("verify: {}", if ok { "all checks passed" } else { "FAILED" });
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(3) })
}
