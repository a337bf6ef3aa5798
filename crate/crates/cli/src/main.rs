//! `blowup`: command-line front end for blowup-polynomial computations.
//!
//! Exit codes: 0 success, 2 input error, 3 property violation, 4 capacity.

mod battery;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use blowup_core::graph::{
    enumerate_connected_graphs, parse_graph6, to_graph6, Graph, MAX_ENUMERATION_N,
};
use blowup_core::poly::{blowup_polynomial_with, recover_graph, MultiAffinePoly};
use blowup_core::reproduce::run_reproduction;
use blowup_core::stability::{Sampling, DEFAULT_SAMPLES};
use blowup_core::{par, Config, Exec};

use battery::Battery;
use input::InputArgs;

#[derive(Parser, Debug)]
#[command(name = "blowup", version, about = "Exact blowup-polynomials of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Run every loop on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Args, Debug, Clone, Copy)]
struct SamplingArgs {
    /// Seed for sampled checks.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Number of sample points.
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Multivariate blowup-polynomial p_G.
    Poly {
        #[command(flatten)]
        input: InputArgs,
        /// Also print the homogenized polynomial.
        #[arg(long)]
        homog: bool,
        /// Also print the univariate specialization.
        #[arg(long)]
        univariate: bool,
    },
    /// Univariate polynomial u_G(n) = p_G(n, .., n).
    Upoly {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Run a property battery on one graph.
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Battery::All)]
        battery: Battery,
        #[command(flatten)]
        sampling: SamplingArgs,
    },
    /// Run a battery over enumerated graphs or a graph6 file, one JSON line each.
    Scan {
        /// Enumerate connected graphs on exactly this many vertices (at most 8).
        #[arg(long, value_name = "MAX", required_unless_present = "input")]
        n: Option<usize>,
        /// Start the enumeration at this order instead of --n.
        #[arg(long, value_name = "MIN", requires = "n")]
        min_n: Option<usize>,
        /// One graph per isomorphism class.
        #[arg(long)]
        dedup: bool,
        /// File with one graph6 record per line.
        #[arg(long, value_name = "FILE", conflicts_with = "n")]
        input: Option<String>,
        #[arg(long, value_enum, default_value_t = Battery::Theorem4)]
        battery: Battery,
        #[command(flatten)]
        sampling: SamplingArgs,
    },
    /// Recompute the bundled reference results.
    Reproduce {
        #[command(flatten)]
        sampling: SamplingArgs,
    },
    /// Rebuild the graph from a polynomial JSON document.
    Recover {
        /// File with a polynomial document (as printed by `poly --json`).
        #[arg(long, value_name = "FILE", conflicts_with = "poly")]
        input: Option<String>,
        /// Inline polynomial document.
        #[arg(long, value_name = "JSON")]
        poly: Option<String>,
    },
}

#[derive(Debug)]
pub enum CliError {
    Core(blowup_core::Error),
    Input(String),
}

impl From<blowup_core::Error> for CliError {
    fn from(e: blowup_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Core(e) => e.exit_code() as u8,
            CliError::Input(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Input(m) => f.write_str(m),
        }
    }
}

const EXIT_VIOLATION: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut cfg = Config::from_env();
    if cli.sequential {
        cfg.exec = Exec::Sequential;
    }
    match run(&cli, &cfg) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn sampling(args: &SamplingArgs, cfg: &Config) -> Sampling {
    Sampling::new(args.seed, args.samples).with_exec(cfg.exec)
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn run(cli: &Cli, cfg: &Config) -> Result<u8, CliError> {
    match &cli.command {
        Command::Poly {
            input,
            homog,
            univariate,
        } => cmd_poly(input, *homog, *univariate, cli.json, cfg),
        Command::Upoly { input } => cmd_upoly(input, cli.json, cfg),
        Command::Check {
            input,
            battery,
            sampling: s,
        } => {
            let source = input::load(input)?;
            let report = battery::run(source.graph()?, *battery, &sampling(s, cfg), cfg)?;
            if cli.json {
                print_json(&report);
            } else {
                println!("{}", battery::human(&report));
            }
            Ok(if report.passed { 0 } else { EXIT_VIOLATION })
        }
        Command::Scan {
            n,
            min_n,
            dedup,
            input,
            battery,
            sampling: s,
        } => cmd_scan(
            *n,
            *min_n,
            *dedup,
            input.as_deref(),
            *battery,
            &sampling(s, cfg),
            cfg,
        ),
        Command::Reproduce { sampling: s } => {
            let report = run_reproduction(cfg, &sampling(s, cfg));
            if cli.json {
                print_json(&report);
            } else {
                for item in &report.items {
                    println!(
                        "[{}] {}: {}\n       {}",
                        if item.passed { "PASS" } else { "FAIL" },
                        item.name,
                        item.claim,
                        item.detail
                    );
                }
                let failures = report.failures();
                if failures.is_empty() {
                    println!("all {} items pass", report.items.len());
                } else {
                    println!("failed: {}", failures.join(", "));
                }
            }
            Ok(if report.passed() { 0 } else { EXIT_VIOLATION })
        }
        Command::Recover { input, poly } => {
            cmd_recover(input.as_deref(), poly.as_deref(), cli.json)
        }
    }
}

fn cmd_poly(
    args: &InputArgs,
    homog: bool,
    univariate: bool,
    json: bool,
    cfg: &Config,
) -> Result<u8, CliError> {
    let source = input::load(args)?;
    let p = blowup_polynomial_with(&source.metric()?, cfg)?;
    if json {
        let mut doc = json!({ "source": source.label(), "polynomial": p });
        if homog {
            doc["homogenized"] = serde_json::to_value(p.homogenize()).expect("serializable");
        }
        if univariate {
            doc["univariate"] = univariate_json(&p);
        }
        print_json(&doc);
        return Ok(0);
    }
    if let input::Source::Metric(_) = source {
        println!("# input: distance matrix (metric-input), not necessarily a graph");
    }
    println!("k = {}", p.k());
    println!("p = {p}");
    if homog {
        println!("homogenized = {}", p.homogenize().display());
    }
    if univariate {
        println!("u = {}", p.univariate().display_with("n"));
    }
    println!("monomials (ascending subset index):");
    for (s, c) in p.coeffs() {
        let name: Vec<String> = s.iter().map(|i| format!("n{}", i + 1)).collect();
        let name = if name.is_empty() {
            "1".to_string()
        } else {
            name.join("*")
        };
        println!("  {:>6}  {name}: {c}", s.bits());
    }
    Ok(0)
}

fn univariate_json(p: &MultiAffinePoly) -> Value {
    let u = p.univariate();
    json!({
        "coeffs": u.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "display": u.display_with("n"),
    })
}

fn cmd_upoly(args: &InputArgs, json: bool, cfg: &Config) -> Result<u8, CliError> {
    let source = input::load(args)?;
    let p = blowup_polynomial_with(&source.metric()?, cfg)?;
    if json {
        let mut doc = univariate_json(&p);
        doc["k"] = json!(p.k());
        doc["source"] = json!(source.label());
        print_json(&doc);
    } else {
        println!("{}", p.univariate().display_with("n"));
    }
    Ok(0)
}

enum ScanItem {
    Graph(Graph),
    Bad { line: usize, error: String },
}

fn cmd_scan(
    n: Option<usize>,
    min_n: Option<usize>,
    dedup: bool,
    input: Option<&str>,
    battery: Battery,
    s: &Sampling,
    cfg: &Config,
) -> Result<u8, CliError> {
    let items: Vec<ScanItem> = match (n, input) {
        (_, Some(path)) => input::read_file(path)?
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                match parse_graph6(l.trim().as_bytes())
                    .and_then(|g| g.require_connected().map(|_| g))
                {
                    Ok(g) => ScanItem::Graph(g),
                    Err(e) => ScanItem::Bad {
                        line: i + 1,
                        error: e.to_string(),
                    },
                }
            })
            .collect(),
        (Some(max), None) => {
            if max > MAX_ENUMERATION_N {
                return Err(blowup_core::Error::Capacity {
                    what: "built-in enumeration",
                    requested: max,
                    cap: MAX_ENUMERATION_N,
                }
                .into());
            }
            let lo = min_n.unwrap_or(max).max(1);
            let mut all = Vec::new();
            for order in lo..=max {
                all.extend(enumerate_connected_graphs(order, dedup)?.map(ScanItem::Graph));
            }
            all
        }
        (None, None) => return Err(CliError::Input("scan needs --n or --input".into())),
    };

    // graphs fan out; each report stays sequential inside
    let inner = Config {
        exec: Exec::Sequential,
        ..*cfg
    };
    let inner_sampling = s.with_exec(Exec::Sequential);
    let lines: Vec<(Value, bool, bool)> = par::map_slice(cfg.exec, &items, |item| match item {
        ScanItem::Bad { line, error } => (json!({ "line": line, "error": error }), false, true),
        ScanItem::Graph(g) => match battery::run(g, battery, &inner_sampling, &inner) {
            Ok(r) => {
                let passed = r.passed;
                (
                    serde_json::to_value(&r).expect("serializable"),
                    passed,
                    false,
                )
            }
            Err(e) => (
                json!({ "graph6": to_graph6(g).ok(), "error": e.to_string() }),
                false,
                true,
            ),
        },
    });
    let (mut passed, mut failed, mut errors) = (0usize, 0usize, 0usize);
    for (index, (v, ok, is_error)) in lines.into_iter().enumerate() {
        let mut line = serde_json::Map::new();
        line.insert("index".into(), json!(index));
        if let Value::Object(fields) = v {
            line.extend(fields);
        }
        println!("{}", Value::Object(line));
        match (ok, is_error) {
            (true, _) => passed += 1,
            (false, true) => errors += 1,
            (false, false) => failed += 1,
        }
    }
    println!(
        "{}",
        json!({ "summary": {
            "records": passed + failed + errors,
            "passed": passed,
            "failed": failed,
            "errors": errors,
            "seed": s.seed,
            "samples": s.count,
        }})
    );
    Ok(if failed > 0 {
        EXIT_VIOLATION
    } else if errors > 0 {
        2
    } else {
        0
    })
}

fn cmd_recover(path: Option<&str>, inline: Option<&str>, json: bool) -> Result<u8, CliError> {
    let text = match (path, inline) {
        (Some(p), _) => input::read_file(p)?,
        (None, Some(s)) => s.to_string(),
        (None, None) => return Err(CliError::Input("recover needs --input or --poly".into())),
    };
    let doc: Value =
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("invalid JSON: {e}")))?;
    let poly_doc = doc.get("polynomial").cloned().unwrap_or(doc);
    let p: MultiAffinePoly = serde_json::from_value(poly_doc)
        .map_err(|e| CliError::Input(format!("invalid polynomial: {e}")))?;
    let g = recover_graph(&p)?;
    let edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(u, v)| (u + 1, v + 1)).collect();
    if json {
        print_json(&json!({ "k": g.order(), "edges": edges, "graph6": to_graph6(&g).ok() }));
    } else {
        if let Ok(s) = to_graph6(&g) {
            println!("# graph6 {s}");
        }
        println!("n={} base=1", g.order());
        for (u, v) in edges {
            println!("{u} {v}");
        }
    }
    Ok(0)
}
