use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use treeforge::constructions::ConstructionSpec;
use treeforge::graph::io::{parse_auto, parse_edge_list, parse_graph6, write_edge_list};
use treeforge::search::{self, ProofConfig, SearchResult};
use treeforge::verify::{self, Suite, SuiteOptions};
use treeforge::witness::{self, check_bounds, ViolationSummary, Witness};
use treeforge::{idoneal, tau_dc, tau_matrix, Error, Exec, LabeledMultigraph};

#[derive(Parser)]
#[command(name = "treeforge", version, about = "Graphs with a prescribed number of spanning trees")]
struct Cli {
    /// Print one JSON report on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Matrix,
    Dc,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Auto,
    Edgelist,
    Graph6,
}

#[derive(Subcommand)]
enum Command {
    /// Count spanning trees of a graph read from a file (or `-` for stdin).
    Count {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Matrix)]
        method: Method,
        #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
        format: InputFormat,
    },
    /// Build a certified witness for n, or the graph named by a construction
    /// string such as `theta:3,3,28` or `v1:3,1,4,1;2`.
    Construct { target: String },
    /// Witness bound table for lo..=hi.
    Scan { lo: u64, hi: u64 },
    /// Fewest vertices of a graph with n spanning trees, by exhaustive search.
    Alpha {
        n: u64,
        #[arg(long, default_value_t = 8)]
        max_vertices: u64,
    },
    /// Fewest edges of a graph with n spanning trees, by exhaustive search.
    Beta {
        n: u64,
        #[arg(long, default_value_t = 9)]
        max_edges: u64,
    },
    /// Prove that no graph on fewer than `budget` vertices has n spanning trees.
    Fixedpoint {
        n: u64,
        /// Vertex budget (default: n).
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = search::proof::DEFAULT_MAX_CYCLOMATIC)]
        max_cyclomatic: u64,
    },
    /// Representations n = ab + ac + bc with 0 < a < b < c.
    Idoneal {
        n: Option<u64>,
        /// List every representation-free number up to this bound instead.
        #[arg(long)]
        scan: Option<u64>,
    },
    /// Run a named check suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        /// Random cases per property (properties suite).
        #[arg(long, default_value_t = 1000)]
        cases: usize,
        /// Upper end of the witness scan (theorem suite).
        #[arg(long, default_value_t = 10_000)]
        theorem_hi: u64,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("unknown suite `{s}` (expected one of: {})", names.join(", "))
    })
}

#[derive(Serialize)]
struct RunReport {
    command: Vec<String>,
    inputs: Value,
    outputs: Value,
    elapsed_ms: f64,
    version: &'static str,
}

/// What a command produced: JSON for the report, text for humans, and
/// whether every check it ran passed.
struct Outcome {
    inputs: Value,
    outputs: Value,
    text: String,
    ok: bool,
}

enum Failure {
    Usage(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("warning: could not size the worker pool: {e}");
        }
    }
    let start = Instant::now();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if cli.json {
        let report = RunReport {
            command: std::env::args().collect(),
            inputs: outcome.inputs,
            outputs: outcome.outputs,
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
            version: env!("CARGO_PKG_VERSION"),
        };
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else {
        print!("{}", outcome.text);
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Count { input, method, format } => count(input, *method, *format),
        Command::Construct { target } => construct(target),
        Command::Scan { lo, hi } => scan(*lo, *hi),
        Command::Alpha { n, max_vertices } => {
            let r = search::alpha_exact(*n, *max_vertices)?;
            Ok(search_outcome(json!({ "n": n, "max_vertices": max_vertices }), r))
        }
        Command::Beta { n, max_edges } => {
            let r = search::beta_exact(*n, *max_edges)?;
            Ok(search_outcome(json!({ "n": n, "max_edges": max_edges }), r))
        }
        Command::Fixedpoint {
            n,
            budget,
            max_cyclomatic,
        } => fixedpoint(*n, budget.unwrap_or(*n), *max_cyclomatic),
        Command::Idoneal { n, scan } => idoneal_cmd(*n, *scan),
        Command::Verify {
            suite,
            cases,
            theorem_hi,
        } => {
            let opts = SuiteOptions {
                seed: cli.seed,
                cases: *cases,
                theorem_hi: *theorem_hi,
                exec: Exec::default(),
            };
            verify_cmd(*suite, &opts)
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn count(input: &PathBuf, method: Method, format: InputFormat) -> Result<Outcome, Failure> {
    let text = read_input(input)?;
    let g = match format {
        InputFormat::Auto => parse_auto(&text),
        InputFormat::Edgelist => parse_edge_list(&text),
        InputFormat::Graph6 => parse_graph6(&text),
    }
    .map_err(|e| Failure::Input(format!("{}: {e}", input.display())))?;
    if !g.is_connected() {
        eprintln!("warning: graph is not connected; it has no spanning trees");
    }
    let (tau, ok, methods) = match method {
        Method::Matrix => (tau_matrix(&g), true, json!({ "matrix": tau_matrix(&g) })),
        Method::Dc => (tau_dc(&g), true, json!({ "dc": tau_dc(&g) })),
        Method::Both => {
            let (m, d) = (tau_matrix(&g), tau_dc(&g));
            let agree = m == d;
            if !agree {
                eprintln!("error: methods disagree: matrix {m}, deletion-contraction {d}");
            }
            (m.clone(), agree, json!({ "matrix": m, "dc": d }))
        }
    };
    Ok(Outcome {
        inputs: json!({
            "path": input.display().to_string(),
            "vertices": g.vertex_count(),
            "edges": g.edge_count().to_string(),
        }),
        outputs: json!({ "tau": tau, "methods": methods, "connected": g.is_connected() }),
        text: format!("{tau}\n"),
        ok,
    })
}

fn edge_triples(g: &LabeledMultigraph) -> Vec<(usize, usize, u32)> {
    g.edges().map(|((u, v), m)| (u, v, m)).collect()
}

fn witness_json(w: &Witness) -> Value {
    let mut v = serde_json::to_value(w).expect("witness serializes");
    v["edge_list"] = json!(edge_triples(&w.graph));
    v
}

fn construct(target: &str) -> Result<Outcome, Failure> {
    if let Ok(n) = target.parse::<u64>() {
        if n < 3 {
            return Err(Failure::Usage(format!("n must be at least 3 (got {n})")));
        }
        let w = witness::build_witness(n)?;
        let report = check_bounds(n, &w);
        let text = format!(
            "# n = {n}: {} ({}), {} vertices, {} edges, tau = {}\n# bounds: {}\n{}",
            w.construction,
            w.strategy,
            w.vertices,
            w.edges,
            w.tau,
            serde_json::to_string(&report).expect("report serializes"),
            write_edge_list(&w.graph)
        );
        return Ok(Outcome {
            inputs: json!({ "n": n }),
            outputs: json!({ "witness": witness_json(&w), "bounds": report }),
            text,
            ok: w.tau == n,
        });
    }
    let spec: ConstructionSpec = target
        .parse()
        .map_err(|e: Error| Failure::Usage(format!("`{target}` is neither an integer nor a construction: {e}")))?;
    let g = spec.build()?;
    let closed = spec.closed_form()?;
    let tau = tau_matrix(&g);
    let ok = closed == tau;
    Ok(Outcome {
        inputs: json!({ "construction": spec.to_string() }),
        outputs: json!({
            "vertices": g.vertex_count(),
            "edges": g.edge_count().to_string(),
            "tau": tau,
            "closed_form": closed,
            "edge_list": edge_triples(&g),
        }),
        text: format!(
            "# {spec}: {} vertices, {} edges, tau = {tau} (closed form {closed})\n{}",
            g.vertex_count(),
            g.edge_count(),
            write_edge_list(&g)
        ),
        ok,
    })
}

fn scan(lo: u64, hi: u64) -> Result<Outcome, Failure> {
    if lo < 3 {
        return Err(Failure::Usage(format!("lo must be at least 3 (got {lo})")));
    }
    if hi < lo {
        return Err(Failure::Usage(format!("empty range {lo}..={hi}")));
    }
    let rows = witness::scan(lo, hi, Exec::default())?;
    let summary = ViolationSummary::from_rows(&rows);
    let mut text = String::from(
        "n,edges,vertices,strategy,construction,certified,bound_third,bound_quarter,vertex_bound_third,vertex_bound_quarter,exception_class\n",
    );
    for row in &rows {
        let r = &row.report;
        let class = serde_json::to_value(r.exception_class).expect("serializes");
        text.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            r.n,
            r.beta_witness_edges,
            r.alpha_witness_vertices,
            row.witness.strategy,
            row.witness.construction,
            row.certified,
            r.bound_third,
            r.bound_quarter,
            r.vertex_bound_third,
            r.vertex_bound_quarter,
            class.as_str().unwrap_or_default()
        ));
    }
    text.push_str(&format!("# uncertified: {:?}\n", summary.uncertified));
    text.push_str(&format!("# edges > (n+7)/3: {:?}\n", summary.bound_third));
    text.push_str(&format!("# vertices > (n+4)/3: {:?}\n", summary.vertex_bound_third));
    text.push_str(&format!("# quarter edge bound violations: {:?}\n", summary.bound_quarter));
    text.push_str(&format!("# quarter vertex bound violations: {:?}\n", summary.vertex_bound_quarter));
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|row| json!({ "witness": row.witness, "certified": row.certified, "bounds": row.report }))
        .collect();
    Ok(Outcome {
        inputs: json!({ "lo": lo, "hi": hi }),
        outputs: json!({ "rows": json_rows, "summary": summary }),
        text,
        ok: summary.uncertified.is_empty(),
    })
}

fn search_outcome(inputs: Value, r: SearchResult) -> Outcome {
    let kind = serde_json::to_value(r.kind).expect("serializes");
    let value = match r.exact() {
        Some(v) => v.to_string(),
        None => format!("> {}", r.search_space.max_vertices.max(r.search_space.max_edges.unwrap_or(0))),
    };
    let mut text = format!("{} ({}) = {value}\n", kind.as_str().unwrap_or_default().to_lowercase(), r.n);
    if let Some(w) = &r.witness {
        text.push_str(&format!("# witness: {} vertices, {} edges, tau = {}\n", w.vertices, w.edges, w.tau));
        text.push_str(&write_edge_list(&w.graph));
    }
    let certified = r.witness.as_ref().is_none_or(|w| w.tau == r.n);
    let mut outputs = serde_json::to_value(&r).expect("serializes");
    if let Some(w) = &r.witness {
        outputs["witness"] = witness_json(w);
    }
    Outcome {
        inputs,
        outputs,
        text,
        ok: certified,
    }
}

fn fixedpoint(n: u64, budget: u64, max_cyclomatic: u64) -> Result<Outcome, Failure> {
    if n < 3 {
        return Err(Failure::Usage(format!("n must be at least 3 (got {n})")));
    }
    let config = ProofConfig {
        max_cyclomatic,
        exec: Exec::default(),
    };
    let report = search::verify_with(n, budget, &config);
    let mut text = format!("n = {n}, vertex budget {budget}: {:?}\n", report.verdict);
    for level in &report.single_block.levels {
        let pruned = level.skeletons.iter().filter(|s| s.pruned).count();
        text.push_str(&format!(
            "  cyclomatic {}: {} skeletons, {} pruned, level minimum tau {}\n",
            level.cyclomatic,
            level.skeletons.len(),
            pruned,
            level.level_min_tau.as_deref().unwrap_or("overflow")
        ));
    }
    for f in &report.factorizations {
        text.push_str(&format!("  blocks {:?}: smallest {:?} vertices\n", f.factors, f.min_vertices));
    }
    for c in &report.counterexamples {
        text.push_str(&format!(
            "  counterexample {}: {} vertices, {} edges, tau = {}\n",
            c.description, c.vertices, c.edges, c.tau
        ));
    }
    Ok(Outcome {
        inputs: json!({ "n": n, "vertex_budget": budget, "max_cyclomatic": max_cyclomatic }),
        outputs: serde_json::to_value(&report).expect("serializes"),
        text,
        ok: report.verdict == search::Verdict::Proven,
    })
}

fn idoneal_cmd(n: Option<u64>, scan: Option<u64>) -> Result<Outcome, Failure> {
    match (n, scan) {
        (_, Some(hi)) => {
            let found = idoneal::scan(hi, Exec::default());
            let text = found.iter().map(u64::to_string).collect::<Vec<_>>().join("\n") + "\n";
            Ok(Outcome {
                inputs: json!({ "scan": hi }),
                outputs: json!({ "representation_free": found, "count": found.len() }),
                text,
                ok: true,
            })
        }
        (Some(n), None) => {
            if n == 0 {
                return Err(Failure::Usage("n must be positive".into()));
            }
            let reps = idoneal::strict_representations(n);
            let mut text = if reps.is_empty() {
                format!("{n}: idoneal (no representation ab+ac+bc with 0<a<b<c)\n")
            } else {
                format!("{n}: not idoneal, {} representation(s)\n", reps.len())
            };
            for r in &reps {
                text.push_str(&format!("  {} {} {}\n", r.a, r.b, r.c));
            }
            Ok(Outcome {
                inputs: json!({ "n": n }),
                outputs: json!({ "idoneal": reps.is_empty(), "representations": reps }),
                text,
                ok: true,
            })
        }
        (None, None) => Err(Failure::Usage("give n or --scan <hi>".into())),
    }
}

fn verify_cmd(suite: Suite, opts: &SuiteOptions) -> Result<Outcome, Failure> {
    let report = verify::run(suite, opts);
    let mut text = format!(
        "{suite}: {} checks, {}\n",
        report.checks_run,
        if report.passed { "all passed" } else { "FAILED" }
    );
    for c in &report.checks {
        let mark = if c.pass { "ok  " } else { "FAIL" };
        text.push_str(&format!("  {mark} {}: expected {}, computed {}\n", c.name, c.expected, c.computed));
    }
    Ok(Outcome {
        inputs: json!({ "suite": suite, "seed": opts.seed, "cases": opts.cases, "theorem_hi": opts.theorem_hi }),
        outputs: serde_json::to_value(&report).expect("serializes"),
        text,
        ok: report.passed,
    })
}
