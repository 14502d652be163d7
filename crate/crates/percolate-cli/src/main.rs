//! Batch front-end for the percolation library: compute exact values, emit
//! verified constructions, run theorem-verification suites, enumerate
//! extremal bipartite graphs, and probe the open-question territory.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 inconclusive within
//! budget, 3 verification failure.

mod expr;
mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use percolate::bounds::enumerate_extremal_bipartite;
use percolate::constructions::{
    double_layer_set, layer_set, odd_cycle_set, odd_order_set, punctured_layer_set,
    ConstructionError, ProductConstruction,
};
use percolate::engine;
use percolate::graph::Graph;
use percolate::grid::{grid_graph, grid_percolating_set};
use percolate::io::to_dot;
use percolate::solver::{min_percolating, SolveOutcome, SolverConfig};
use percolate::suites::{run_suite, small_corpus, Suite, SuiteLimits};

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_VERIFICATION: u8 = 3;

#[derive(Parser)]
#[command(name = "percolate", about = "r-neighbor bootstrap percolation toolbox", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    run: RunOptions,
}

#[derive(Args, Clone)]
struct RunOptions {
    /// Infection threshold r.
    #[arg(long = "r", global = true, default_value_t = 2)]
    r: usize,
    /// Solver budget in closure evaluations (default: PERCOLATE_BUDGET env
    /// var or 100000000).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Worker thread count (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the main document to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Include wall-clock timings in the JSON (not deterministic run to run).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Compute m(G, r) exactly for a graph expression.
    Compute {
        /// Builder expression, e.g. "path 7 x path 5" or "file:g.el".
        expr: String,
        /// Include the round-by-round infection trace of the witness.
        #[arg(long)]
        trace: bool,
    },
    /// Emit a named, engine-verified percolating-set construction.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Run a theorem-verification suite.
    Verify {
        /// One of: grid-theorem, characterization, upper-bounds, perimeter,
        /// families.
        suite: String,
        /// Size cap (grid side or graph order, suite-specific).
        #[arg(long)]
        max: Option<usize>,
    },
    /// Enumerate connected bipartite graphs with min degree 2 attaining
    /// m(G, 2) = |V|/2.
    Enumerate {
        /// Largest vertex count to enumerate (at most 8).
        #[arg(long, default_value_t = 6)]
        max: usize,
    },
    /// Probe open-question territory; prints observations, asserts nothing.
    Explore {
        /// One of: gxkn, submultiplicative, min-factor.
        probe: String,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Percolating set of P_n x P_m of closed-formula size.
    Grid { n: usize, m: usize },
    /// G-layer on a vertex of H.
    Layer { g: String, h: String, layer: usize },
    /// Minimum set of G doubled across an edge {h1, h2} of H.
    Double { g: String, h: String, h1: usize, h2: usize },
    /// Layer on x punctured at (v, x).
    Punctured { g: String, h: String, v: usize, x: usize },
    /// Odd-order saving construction (r = 2).
    OddOrder { g: String, h: String },
    /// Odd-cycle saving construction (r = 2).
    OddCycle { g: String, h: String },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(workers) = cli.run.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(workers).build_global() {
            eprintln!("error: cannot configure {workers} workers: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let code = match &cli.command {
        Command::Compute { expr, trace } => cmd_compute(expr, *trace, &cli.run),
        Command::Construct { what } => cmd_construct(what, &cli.run),
        Command::Verify { suite, max } => cmd_verify(suite, *max, &cli.run),
        Command::Enumerate { max } => cmd_enumerate(*max, &cli.run),
        Command::Explore { probe } => cmd_explore(probe, &cli.run),
    };
    ExitCode::from(code)
}

fn solver_config(run: &RunOptions) -> SolverConfig {
    let from_env = std::env::var("PERCOLATE_BUDGET").ok().and_then(|v| v.parse().ok());
    SolverConfig {
        max_closure_evals: run
            .budget
            .or(from_env)
            .unwrap_or_else(|| SolverConfig::default().max_closure_evals),
    }
}

/// Emits the main document per the requested format.
fn emit(run: &RunOptions, doc: &Value, dot: Option<String>) -> u8 {
    let text = match run.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(doc).expect("serializable")),
        Format::Table => output::render_table(doc),
        Format::Dot => match dot {
            Some(d) => d,
            None => {
                eprintln!("error: --format dot is only available for construct commands");
                return EXIT_USAGE;
            }
        },
    };
    match &run.out {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("error: cannot write {path:?}: {e}");
                return EXIT_USAGE;
            }
        }
        None => print!("{text}"),
    }
    EXIT_OK
}

fn graph_summary(g: &Graph) -> Value {
    json!({ "order": g.order(), "edges": g.edge_count() })
}

fn cmd_compute(expr_text: &str, with_trace: bool, run: &RunOptions) -> u8 {
    let g = match expr::parse_graph_expr(expr_text) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("{}", e.render(expr_text));
            return EXIT_USAGE;
        }
    };
    if run.r == 0 {
        eprintln!("error: r must be at least 1");
        return EXIT_USAGE;
    }
    let config = solver_config(run);
    let outcome = min_percolating(&g, run.r, &config).expect("r >= 1");
    let mut doc = match &outcome {
        SolveOutcome::Exact(rep) => json!({
            "expr": expr_text,
            "r": run.r,
            "graph": graph_summary(&g),
            "outcome": "exact",
            "value": rep.value,
            "witness": rep.witness,
            "lower_bound": { "value": rep.lower_bound, "origin": rep.lower_bound_origin.to_string() },
            "sets_examined": rep.sets_examined,
            "exhaustive": rep.exhaustive,
        }),
        SolveOutcome::Inconclusive { lower_bound, upper_bound, upper_witness, sets_examined, .. } => json!({
            "expr": expr_text,
            "r": run.r,
            "graph": graph_summary(&g),
            "outcome": "inconclusive",
            "lower_bound": lower_bound,
            "upper_bound": upper_bound,
            "upper_witness": upper_witness,
            "sets_examined": sets_examined,
        }),
    };
    if with_trace {
        let witness = match &outcome {
            SolveOutcome::Exact(rep) => &rep.witness,
            SolveOutcome::Inconclusive { upper_witness, .. } => upper_witness,
        };
        let tr = engine::trace(&g, run.r, witness).expect("widths match");
        doc["trace"] = serde_json::to_value(&tr).expect("serializable");
    }
    if run.timings {
        let ms = match &outcome {
            SolveOutcome::Exact(rep) => rep.wall_time.as_millis(),
            SolveOutcome::Inconclusive { wall_time, .. } => wall_time.as_millis(),
        };
        doc["wall_time_ms"] = json!(ms as u64);
    }
    let emit_code = emit(run, &doc, None);
    if emit_code != EXIT_OK {
        return emit_code;
    }
    match outcome {
        SolveOutcome::Exact(_) => EXIT_OK,
        SolveOutcome::Inconclusive { .. } => EXIT_INCONCLUSIVE,
    }
}

fn parse_two(g: &str, h: &str) -> Result<(Graph, Graph), u8> {
    let pg = expr::parse_graph_expr(g).map_err(|e| {
        eprintln!("{}", e.render(g));
        EXIT_USAGE
    })?;
    let ph = expr::parse_graph_expr(h).map_err(|e| {
        eprintln!("{}", e.render(h));
        EXIT_USAGE
    })?;
    Ok((pg, ph))
}

fn construction_error_code(e: &ConstructionError) -> u8 {
    match e {
        ConstructionError::VerificationFailed => EXIT_VERIFICATION,
        _ => EXIT_USAGE,
    }
}

fn cmd_construct(what: &ConstructCmd, run: &RunOptions) -> u8 {
    let r = run.r;
    let named: Result<(String, Value, ProductConstruction), (String, u8)> = match what {
        ConstructCmd::Grid { n, m } => match grid_percolating_set(*n, *m) {
            Ok(c) => {
                let product = grid_graph(*n, *m).expect("valid dims");
                let meta = json!({
                    "n": n, "m": m,
                    "case": c.case.to_string(),
                    "transposed": c.transposed,
                    "repaired": c.repaired,
                    "diagonals": c.diagonals,
                    "spine": c.spine,
                    "extras": c.extras,
                });
                let seeds = c.seeds;
                Ok(("grid".to_string(), meta, ProductConstruction { product, seeds }))
            }
            Err(e) => Err((e.to_string(), EXIT_USAGE)),
        },
        ConstructCmd::Layer { g, h, layer } => match parse_two(g, h) {
            Ok((pg, ph)) => layer_set(&pg, &ph, *layer)
                .map(|c| ("layer".to_string(), json!({ "layer": layer }), c))
                .map_err(|e| (e.to_string(), construction_error_code(&e))),
            Err(code) => return code,
        },
        ConstructCmd::Double { g, h, h1, h2 } => match parse_two(g, h) {
            Ok((pg, ph)) => {
                let config = solver_config(run);
                let s = match min_percolating(&pg, r, &config).expect("r >= 1") {
                    SolveOutcome::Exact(rep) => rep.witness,
                    SolveOutcome::Inconclusive { .. } => {
                        eprintln!("error: solving m(G, r) for the doubled set was inconclusive");
                        return EXIT_INCONCLUSIVE;
                    }
                };
                double_layer_set(&pg, &ph, &s, *h1, *h2, r)
                    .map(|c| ("double".to_string(), json!({ "h1": h1, "h2": h2, "base_set": s }), c))
                    .map_err(|e| (e.to_string(), construction_error_code(&e)))
            }
            Err(code) => return code,
        },
        ConstructCmd::Punctured { g, h, v, x } => match parse_two(g, h) {
            Ok((pg, ph)) => punctured_layer_set(&pg, &ph, *v, *x, r)
                .map(|c| ("punctured".to_string(), json!({ "v": v, "x": x }), c))
                .map_err(|e| (e.to_string(), construction_error_code(&e))),
            Err(code) => return code,
        },
        ConstructCmd::OddOrder { g, h } => match parse_two(g, h) {
            Ok((pg, ph)) => odd_order_set(&pg, &ph)
                .map(|c| ("odd-order".to_string(), json!({}), c))
                .map_err(|e| (e.to_string(), construction_error_code(&e))),
            Err(code) => return code,
        },
        ConstructCmd::OddCycle { g, h } => match parse_two(g, h) {
            Ok((pg, ph)) => odd_cycle_set(&pg, &ph)
                .map(|c| ("odd-cycle".to_string(), json!({}), c))
                .map_err(|e| (e.to_string(), construction_error_code(&e))),
            Err(code) => return code,
        },
    };
    let (name, meta, c) = match named {
        Ok(t) => t,
        Err((msg, code)) => {
            eprintln!("error: {msg}");
            return code;
        }
    };
    // the saving constructions and the grid are r = 2 statements
    let verify_r = match what {
        ConstructCmd::Grid { .. } | ConstructCmd::OddOrder { .. } | ConstructCmd::OddCycle { .. } => 2,
        _ => r,
    };
    let verified = engine::propagates(&c.product, verify_r, &c.seeds).expect("widths match");
    let doc = json!({
        "construction": name,
        "r": verify_r,
        "meta": meta,
        "product": graph_summary(&c.product),
        "size": c.seeds.len(),
        "witness": c.seeds,
        "verified": verified,
    });
    let dot = to_dot(&c.product, Some(&c.seeds));
    let emit_code = emit(run, &doc, Some(dot));
    if emit_code != EXIT_OK {
        return emit_code;
    }
    if verified {
        EXIT_OK
    } else {
        // layer sets are emitted without hypothesis checks; an unverified
        // one is reported, not hidden
        EXIT_VERIFICATION
    }
}

fn cmd_verify(suite_name: &str, max: Option<usize>, run: &RunOptions) -> u8 {
    let suite: Suite = match suite_name.parse() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let limits = SuiteLimits { max, solver: solver_config(run) };
    let report = run_suite(suite, &limits);
    let doc = serde_json::to_value(&report).expect("serializable");
    let emit_code = emit(run, &doc, None);
    if emit_code != EXIT_OK {
        return emit_code;
    }
    if report.passed {
        EXIT_OK
    } else {
        EXIT_VERIFICATION
    }
}

fn cmd_enumerate(max: usize, run: &RunOptions) -> u8 {
    let config = solver_config(run);
    let found = match enumerate_extremal_bipartite(max, &config) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let graphs: Vec<Value> = found
        .iter()
        .map(|e| {
            json!({
                "order": e.order,
                "edges": e.edges,
                "value": e.value,
                "witness": e.witness,
                "degree_sequence": e.signature.0,
            })
        })
        .collect();
    let doc = json!({ "n_max": max, "count": found.len(), "graphs": graphs });
    emit(run, &doc, None)
}

fn cmd_explore(probe: &str, run: &RunOptions) -> u8 {
    let config = solver_config(run);
    let solve = |g: &Graph, r: usize| -> Option<usize> {
        match min_percolating(g, r, &config).expect("r >= 1") {
            SolveOutcome::Exact(rep) => Some(rep.value),
            SolveOutcome::Inconclusive { .. } => None,
        }
    };
    let corpus: Vec<(String, Graph)> = small_corpus()
        .into_iter()
        .filter(|(_, g)| g.order() <= 10 && percolate::analysis::is_connected(g))
        .collect();
    let mut observations: Vec<Value> = Vec::new();
    match probe {
        // preliminary claim: m(G x K_n, r) = r for connected G of order >= 3
        // and n >= 2r
        "gxkn" => {
            let r = run.r.max(2);
            for (name, g) in corpus.iter().filter(|(_, g)| g.order() >= 3) {
                let kn = percolate::families::complete(2 * r).expect("2r >= 4");
                let prod = percolate::product::direct_product(g, &kn).expect("nonempty");
                if prod.order() > 80 {
                    continue;
                }
                if let Some(v) = solve(&prod, r) {
                    observations.push(json!({
                        "instance": format!("{name} x K{}", 2 * r),
                        "r": r,
                        "value": v,
                        "matches_claim": v == r,
                    }));
                }
            }
        }
        // is m(G x H, r) <= m(G, r) m(H, r) when one factor is non-bipartite?
        "submultiplicative" => {
            for (gn, g) in corpus.iter().take(8) {
                for (hn, h) in corpus.iter().take(8) {
                    let one_nonbipartite = !percolate::analysis::bipartiteness(g).is_bipartite()
                        || !percolate::analysis::bipartiteness(h).is_bipartite();
                    if !one_nonbipartite {
                        continue;
                    }
                    let prod = percolate::product::direct_product(g, h).expect("nonempty");
                    if prod.order() > 40 {
                        continue;
                    }
                    if let (Some(vg), Some(vh), Some(vp)) =
                        (solve(g, run.r), solve(h, run.r), solve(&prod, run.r))
                    {
                        observations.push(json!({
                            "instance": format!("{gn} x {hn}"),
                            "r": run.r,
                            "product_value": vp,
                            "factor_product": vg * vh,
                            "holds": vp <= vg * vh,
                        }));
                    }
                }
            }
        }
        // is min(m(G, r), m(H, r)) <= m(G x H, r)?
        "min-factor" => {
            for (gn, g) in corpus.iter().take(8) {
                for (hn, h) in corpus.iter().take(8) {
                    let prod = percolate::product::direct_product(g, h).expect("nonempty");
                    if prod.order() > 40 {
                        continue;
                    }
                    if let (Some(vg), Some(vh), Some(vp)) =
                        (solve(g, run.r), solve(h, run.r), solve(&prod, run.r))
                    {
                        observations.push(json!({
                            "instance": format!("{gn} x {hn}"),
                            "r": run.r,
                            "product_value": vp,
                            "min_factor": vg.min(vh),
                            "holds": vg.min(vh) <= vp,
                        }));
                    }
                }
            }
        }
        other => {
            eprintln!(
                "error: unknown probe {other:?}; expected gxkn, submultiplicative, or min-factor"
            );
            return EXIT_USAGE;
        }
    }
    let doc = json!({
        "probe": probe,
        "note": "observations only; nothing here is asserted as a theorem",
        "observations": observations,
    });
    emit(run, &doc, None)
}
