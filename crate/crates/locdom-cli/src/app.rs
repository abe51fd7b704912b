//! Subcommand grammar and dispatch. Exit codes: 0 success or pass,
//! 1 property false or theorem failure, 2 usage error.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use locdom::codes::{is_code, CheckForm, Code, CodeKind};
use locdom::constructions::{
    complement_gap, realize_ld_dld, realize_ld_sld, sperner_extremal, ConstructionClaim,
};
use locdom::families::{generate, GraphFamily, ThresholdStep};
use locdom::graph::Graph;
use locdom::graph6::{emit_graph6, parse_graph6, parse_graph6_file};
use locdom::harness::{
    check_graph, sweep_all_labeled, sweep_graphs, tree_sweep, verify_claims, SweepOptions,
    SweepReport, TreeSweepOptions,
};
use locdom::locate::{run_scenario, Scenario};
use locdom::solvers::{
    closed_form, minimum_code_with, ClosedFormFamily, ClosedFormQuery, SolverConfig, DEFAULT_CAP,
};

const EXIT_OK: u8 = 0;
const EXIT_PROPERTY_FALSE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "locdom",
    version,
    about = "Exact computation for locating-dominating, self-locating-dominating \
             and solid-locating-dominating codes in graphs",
    disable_help_subcommand = true
)]
struct Cli {
    /// Output format for machine consumption or human reading.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct GraphInput {
    /// A graph6 string or a path to a graph6 file (first record).
    graph: Option<String>,
    /// Generate the graph from a family instead.
    #[arg(long, value_parser = family_names())]
    family: Option<String>,
    /// Primary family size (path/cycle/star/complete/discrete/ladder
    /// length, or the left side of a complete bipartite graph).
    #[arg(long)]
    n: Option<usize>,
    /// Right side of a complete bipartite graph.
    #[arg(long)]
    m: Option<usize>,
    /// Threshold creation sequence over {i, u}, e.g. "iuu".
    #[arg(long)]
    seq: Option<String>,
}

fn family_names() -> Vec<&'static str> {
    vec![
        "path",
        "cycle",
        "star",
        "complete",
        "complete-bipartite",
        "discrete",
        "ladder",
        "threshold",
    ]
}

#[derive(Subcommand)]
enum Command {
    /// Check whether a vertex set is a code of the given kind.
    Verify {
        #[command(flatten)]
        graph: GraphInput,
        /// Comma-separated vertex list, e.g. 0,2,5.
        #[arg(long)]
        code: String,
        #[arg(long)]
        kind: String,
        /// Evaluate the definition or the characterization.
        #[arg(long, default_value = "definition")]
        form: String,
    },
    /// Compute the exact minimum code of the given kind.
    Solve {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        kind: String,
        /// Raise the exactness cap (default 24 vertices).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Compute the full parameter table and every theorem check.
    Params {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Emit a named construction as graph6 plus its claims.
    Construct {
        /// sperner-extremal K | complement-gap K | realize-ld-sld A B |
        /// realize-ld-dld A B
        name: String,
        args: Vec<u64>,
        /// Also solve for the claimed parameters and report mismatches.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Run every theorem check over a stream of graphs.
    Sweep {
        /// Path to a graph6 file (one record per line, # comments).
        source: Option<PathBuf>,
        /// Enumerate all labeled graphs on this many vertices instead.
        #[arg(long, value_name = "N", conflicts_with = "source")]
        all_graphs: Option<usize>,
        /// Enumerate all labeled trees up to this many vertices instead.
        #[arg(long, value_name = "N", conflicts_with_all = ["source", "all_graphs"])]
        trees: Option<usize>,
        /// Keep going after a failing check.
        #[arg(long)]
        keep_going: bool,
        /// Worker threads for the sweep.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Decode the fault scenario in a JSON file.
    Simulate {
        scenario: PathBuf,
    },
    /// Evaluate a known closed form, e.g. `closed-form ladder 5 SLD`.
    ClosedForm {
        /// path | cycle | ladder | complete | complete-product
        family: String,
        /// Family parameters followed by the code kind.
        args: Vec<String>,
    },
}

pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

enum CliError {
    Lib(locdom::Error),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<locdom::Error> for CliError {
    fn from(e: locdom::Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Lib(locdom::Error::Io(e))
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn resolve_graph(input: &GraphInput) -> CliResult<Graph> {
    if let Some(name) = &input.family {
        let n = || input.n.ok_or_else(|| usage(format!("--family {name} needs --n")));
        let family = match name.as_str() {
            "path" => GraphFamily::Path { n: n()? },
            "cycle" => GraphFamily::Cycle { n: n()? },
            "star" => GraphFamily::Star { n: n()? },
            "complete" => GraphFamily::Complete { n: n()? },
            "discrete" => GraphFamily::Discrete { n: n()? },
            "ladder" => GraphFamily::Ladder { n: n()? },
            "complete-bipartite" => GraphFamily::CompleteBipartite {
                m: input.m.ok_or_else(|| usage("complete-bipartite needs --m and --n"))?,
                n: n()?,
            },
            "threshold" => {
                let seq = input
                    .seq
                    .as_deref()
                    .ok_or_else(|| usage("threshold needs --seq, e.g. --seq iuu"))?;
                let steps: Result<Vec<ThresholdStep>, _> = seq
                    .chars()
                    .map(|c| ThresholdStep::from_str(&c.to_string()))
                    .collect();
                GraphFamily::Threshold { seq: steps? }
            }
            other => return Err(usage(format!("unknown family {other}"))),
        };
        return Ok(generate(&family)?);
    }
    let text = input
        .graph
        .as_deref()
        .ok_or_else(|| usage("give a graph6 string, a file path, or --family"))?;
    if Path::new(text).is_file() {
        let contents = std::fs::read_to_string(text)?;
        // graph6 records never contain spaces, so a spaced first line
        // marks the "n m" edge-list fixture format
        let edge_list = contents
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))
            .is_some_and(|l| l.contains(char::is_whitespace));
        if edge_list {
            return Ok(Graph::parse_edge_list(&contents)?);
        }
        let graphs = parse_graph6_file(&contents)?;
        graphs
            .into_iter()
            .next()
            .ok_or_else(|| usage(format!("{text} contains no graph6 records")))
    } else {
        Ok(parse_graph6(text)?)
    }
}

fn parse_code(text: &str) -> CliResult<Code> {
    let members: Result<Vec<usize>, _> = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect();
    let members = members.map_err(|_| usage(format!("--code {text:?} is not a vertex list")))?;
    if members.is_empty() {
        return Err(usage("--code must list at least one vertex"));
    }
    Ok(Code::new(members))
}

fn solver_config(cap: Option<usize>) -> SolverConfig {
    SolverConfig {
        cap: cap.unwrap_or(DEFAULT_CAP),
        extra_lower_bound: None,
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> CliResult<u8> {
    let format = cli.format;
    match cli.command {
        Command::Verify {
            graph,
            code,
            kind,
            form,
        } => {
            let g = resolve_graph(&graph)?;
            let code = parse_code(&code)?;
            let kind = CodeKind::from_str(&kind)?;
            let form = match form.as_str() {
                "definition" | "def" => CheckForm::Definition,
                "characterization" | "char" => CheckForm::Characterization,
                other => return Err(usage(format!("unknown form {other}"))),
            };
            let holds = is_code(&g, &code, kind, form)?;
            match format {
                Format::Json => {
                    let doc = json!({
                        "graph6": emit_graph6(&g)?,
                        "code": code.members(),
                        "kind": kind.as_str(),
                        "is_code": holds,
                    });
                    writeln!(out, "{doc}")?;
                }
                Format::Table => writeln!(out, "{holds}")?,
            }
            Ok(if holds { EXIT_OK } else { EXIT_PROPERTY_FALSE })
        }
        Command::Solve { graph, kind, cap } => {
            let g = resolve_graph(&graph)?;
            let kind = CodeKind::from_str(&kind)?;
            let result = minimum_code_with(&g, kind, &solver_config(cap))?;
            match format {
                Format::Json => {
                    let mut doc = serde_json::to_value(&result).expect("serializable result");
                    doc["kind"] = json!(kind.as_str());
                    writeln!(out, "{doc}")?;
                }
                Format::Table => {
                    writeln!(out, "kind: {kind}")?;
                    writeln!(out, "value: {}", result.value)?;
                    writeln!(out, "witness: {}", result.witness)?;
                    writeln!(out, "nodes_explored: {}", result.nodes_explored)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Params { graph, cap } => {
            let g = resolve_graph(&graph)?;
            let report = check_graph(&g, &solver_config(cap))?;
            let failures = report.failures().count();
            match format {
                Format::Json => {
                    writeln!(out, "{}", serde_json::to_string(&report).expect("serializable"))?
                }
                Format::Table => {
                    writeln!(out, "graph6: {}", report.graph6)?;
                    if let Some(p) = &report.params {
                        let girth =
                            p.girth.map_or("infinite".to_string(), |g| g.to_string());
                        writeln!(out, "n: {}  m: {}  max_degree: {}  girth: {girth}", p.n, p.m, p.max_degree)?;
                        writeln!(
                            out,
                            "gamma: {}  gamma_ld: {}  gamma_dld: {}  gamma_sld: {}  gamma_2: {}",
                            p.gamma, p.gamma_ld, p.gamma_dld, p.gamma_sld, p.gamma_2
                        )?;
                        writeln!(
                            out,
                            "beta: {}  beta_2: {}  dilworth: {}  forced: {}  threshold: {}  twin_free: {}",
                            p.beta, p.beta_2, p.dilworth, p.forced_count, p.threshold, p.twin_free
                        )?;
                        for check in &report.checks {
                            writeln!(out, "check {:<20} {:?}", check.id, check.status)?;
                        }
                    } else {
                        writeln!(out, "incomplete: order exceeds the solver cap")?;
                    }
                }
            }
            Ok(if failures == 0 { EXIT_OK } else { EXIT_PROPERTY_FALSE })
        }
        Command::Construct {
            name,
            args,
            verify,
            cap,
        } => {
            let claims = build_constructions(&name, &args)?;
            let mut all_ok = true;
            for construction in &claims {
                let mut doc = json!({
                    "name": construction.name,
                    "graph6": emit_graph6(&construction.graph)?,
                    "order": construction.graph.n(),
                    "claims": construction.claims,
                });
                if verify {
                    let checks = verify_claims(construction, &solver_config(cap))?;
                    all_ok &= checks.iter().all(|c| c.ok);
                    doc["verification"] = serde_json::to_value(&checks).expect("serializable");
                }
                match format {
                    Format::Json => writeln!(out, "{doc}")?,
                    Format::Table => {
                        writeln!(out, "{}", construction.name)?;
                        writeln!(out, "graph6: {}", emit_graph6(&construction.graph)?)?;
                        for claim in &construction.claims {
                            writeln!(out, "claim {:?} = {}", claim.parameter, claim.value)?;
                        }
                        if verify {
                            let checks = verify_claims(construction, &solver_config(cap))?;
                            for c in &checks {
                                writeln!(
                                    out,
                                    "verified {:?}: claimed {} actual {} {}",
                                    c.parameter,
                                    c.claimed,
                                    c.actual,
                                    if c.ok { "ok" } else { "MISMATCH" }
                                )?;
                            }
                            all_ok &= checks.iter().all(|c| c.ok);
                        }
                    }
                }
            }
            Ok(if all_ok { EXIT_OK } else { EXIT_PROPERTY_FALSE })
        }
        Command::Sweep {
            source,
            all_graphs,
            trees,
            keep_going,
            jobs,
            cap,
        } => {
            let opts = SweepOptions {
                keep_going,
                jobs,
                cap: cap.unwrap_or(DEFAULT_CAP),
            };
            if let Some(max_n) = trees {
                let report = tree_sweep(&TreeSweepOptions {
                    max_n,
                    ..TreeSweepOptions::default()
                })?;
                let failed = report.failed();
                match format {
                    Format::Json => {
                        writeln!(out, "{}", serde_json::to_string(&report).expect("serializable"))?
                    }
                    Format::Table => {
                        for level in &report.orders {
                            writeln!(
                                out,
                                "n={:<2} trees={:<12} solver_checked={}",
                                level.n, level.trees, level.solver_checked
                            )?;
                        }
                        for miss in &report.mismatches {
                            writeln!(out, "MISMATCH {miss}")?;
                        }
                    }
                }
                return Ok(if failed { EXIT_PROPERTY_FALSE } else { EXIT_OK });
            }
            let report = if let Some(n) = all_graphs {
                sweep_all_labeled(n, &opts)?
            } else {
                let path = source.ok_or_else(|| {
                    usage("give a graph6 file, --all-graphs N, or --trees N")
                })?;
                let graphs = parse_graph6_file(&std::fs::read_to_string(&path)?)?;
                sweep_graphs(&graphs, &opts)?
            };
            print_sweep_report(&report, format, out)?;
            Ok(if report.failed() { EXIT_PROPERTY_FALSE } else { EXIT_OK })
        }
        Command::Simulate { scenario } => {
            let text = std::fs::read_to_string(&scenario)?;
            let scenario: Scenario =
                serde_json::from_str(&text).map_err(locdom::Error::from)?;
            let outcome = run_scenario(&scenario)?;
            match format {
                Format::Json => {
                    writeln!(out, "{}", serde_json::to_string(&outcome).expect("serializable"))?
                }
                Format::Table => {
                    writeln!(out, "faults: {:?}", outcome.faults)?;
                    let levels: Vec<String> = outcome
                        .reports
                        .codewords
                        .iter()
                        .zip(&outcome.reports.reports)
                        .map(|(c, r)| format!("{c}:{}", r.level()))
                        .collect();
                    writeln!(out, "reports: {}", levels.join(" "))?;
                    writeln!(out, "outcome: {:?}", outcome.outcome)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::ClosedForm { family, args } => {
            let query = parse_closed_form(&family, &args)?;
            let value = closed_form(&query)?;
            match format {
                Format::Json => {
                    let doc = json!({
                        "query": query.to_string(),
                        "value": value,
                    });
                    writeln!(out, "{doc}")?;
                }
                Format::Table => writeln!(out, "{value}")?,
            }
            Ok(EXIT_OK)
        }
    }
}

fn build_constructions(name: &str, args: &[u64]) -> CliResult<Vec<ConstructionClaim>> {
    let one = || -> CliResult<u64> {
        match args {
            [k] => Ok(*k),
            _ => Err(usage(format!("{name} takes one integer argument"))),
        }
    };
    let two = || -> CliResult<(u64, u64)> {
        match args {
            [a, b] => Ok((*a, *b)),
            _ => Err(usage(format!("{name} takes two integer arguments"))),
        }
    };
    match name {
        "sperner-extremal" => Ok(vec![sperner_extremal(one()?)?]),
        "complement-gap" => {
            let (primal, dual) = complement_gap(one()?)?;
            Ok(vec![primal, dual])
        }
        "realize-ld-sld" => {
            let (a, b) = two()?;
            Ok(vec![realize_ld_sld(a, b)?])
        }
        "realize-ld-dld" => {
            let (a, b) = two()?;
            Ok(vec![realize_ld_dld(a, b)?])
        }
        other => Err(usage(format!(
            "unknown construction {other}; expected sperner-extremal, complement-gap, \
             realize-ld-sld or realize-ld-dld"
        ))),
    }
}

fn parse_closed_form(family: &str, args: &[String]) -> CliResult<ClosedFormQuery> {
    let (params, kind) = args.split_at(args.len().saturating_sub(1));
    let kind = kind
        .first()
        .ok_or_else(|| usage("closed-form needs a code kind as the last argument"))?;
    let kind = CodeKind::from_str(kind)?;
    let nums: Result<Vec<u64>, _> = params.iter().map(|p| p.parse()).collect();
    let nums = nums.map_err(|_| usage("closed-form parameters must be integers"))?;
    let family = match (family, nums.as_slice()) {
        ("path", [n]) => ClosedFormFamily::Path { n: *n },
        ("cycle", [t]) => ClosedFormFamily::Cycle { t: *t },
        ("ladder", [n]) => ClosedFormFamily::Ladder { n: *n },
        ("complete", [m]) => ClosedFormFamily::Complete { m: *m },
        ("complete-product", [m, n]) => ClosedFormFamily::CompleteProduct { m: *m, n: *n },
        _ => {
            return Err(usage(format!(
                "unknown closed form {family} with {} parameters",
                nums.len()
            )))
        }
    };
    Ok(ClosedFormQuery { family, kind })
}

fn print_sweep_report(
    report: &SweepReport,
    format: Format,
    out: &mut dyn Write,
) -> CliResult<()> {
    match format {
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string(report).expect("serializable"))?
        }
        Format::Table => {
            writeln!(out, "graphs checked: {}", report.graphs_checked)?;
            if report.incomplete > 0 {
                writeln!(out, "incomplete (over cap): {}", report.incomplete)?;
            }
            writeln!(out, "{:<22} {:>10} {:>8} {:>8}", "check", "pass", "fail", "n/a")?;
            for t in &report.totals {
                writeln!(
                    out,
                    "{:<22} {:>10} {:>8} {:>8}",
                    t.id, t.pass, t.fail, t.not_applicable
                )?;
            }
            for f in &report.failures {
                writeln!(out, "FAIL {} {} {}", f.graph6, f.check, f.detail)?;
            }
        }
    }
    Ok(())
}
