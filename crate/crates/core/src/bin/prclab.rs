//! Command-line front end. JSON (or graph6/CSV) on stdout, diagnostics on stderr.
//!
//! Exit codes: 0 success or exact value; 1 not a certificate, or claim
//! violations found; 2 value only bracketed within budget; 3 bad input or usage.

use clap::{Args, Parser, Subcommand, ValueEnum};
use prclab::bounds::{
    classify_extremal, evaluate_bounds, hamiltonian_complement_witness, sufficient_conditions,
    Solved,
};
use prclab::colouring::{verify, Certificate, EdgeColouring};
use prclab::config::{parse_determinism, resolve_layer, Layer, Settings};
use prclab::constructions::{
    clique_rc_colouring, cycle_colouring, gkt_colouring, hamiltonian_complement_colouring,
    spanning_star_colouring, wheel_colouring,
};
use prclab::graph::{
    maximum_clique, parse_edge_list, parse_graph6, write_edge_list, write_graph6, Family,
};
use prclab::random::RandomModel;
use prclab::solver::{chromatic_index, solve, Determinism, Parameter, SolveResult};
use prclab::sweep::{run_sweep, SweepJob, SweepSource};
use prclab::{Error, FamilySpec, Graph};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_FAIL: u8 = 1;
const EXIT_BRACKETED: u8 = 2;
const EXIT_INPUT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "prclab",
    version,
    about = "Exact prc, rc and chromatic index of small graphs"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Search node budget per solve.
    #[arg(long, global = true)]
    budget_nodes: Option<u64>,
    /// Wall-clock budget per solve, in seconds.
    #[arg(long, global = true)]
    budget_secs: Option<f64>,
    /// Largest palette the rainbow searches may use.
    #[arg(long, global = true)]
    colour_cap: Option<usize>,
    /// Seed for random sources (default 0x5eed2024).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// `sequential` (canonical certificates) or `parallel` (value only).
    #[arg(long, global = true, value_parser = parse_determinism_arg)]
    determinism: Option<Determinism>,
    /// Prune rainbow searches with the fresh-colour relaxation.
    #[arg(long, global = true)]
    rainbow_pruning: bool,
    /// TOML settings file (default: $PRCLAB_CONFIG).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

fn parse_determinism_arg(s: &str) -> Result<Determinism, String> {
    parse_determinism(s).map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Print a family member (or every member of a range) as graph6 or an edge list.
    Gen {
        /// Family spec, ranges allowed: `wheel:5`, `cycle:4..8`, `f8`.
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Compute one parameter exactly, or bracket it within budget.
    Solve {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value = "prc")]
        param: Parameter,
    },
    /// Check a certificate: properness, rainbow connectivity, palette.
    Verify {
        #[command(flatten)]
        input: GraphInput,
        /// Certificate JSON file (`-` for stdin).
        certificate: PathBuf,
    },
    /// Produce a colouring from one of the constructions.
    Color {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum)]
        method: Method,
    },
    /// Solve all three parameters and judge every claim on one graph.
    Bounds {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Solve and judge a batch of graphs.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Star,
    Hamcomp,
    Cycle,
    Wheel,
    Gkt,
    CliqueRc,
}

#[derive(Args)]
struct GraphInput {
    /// Family spec, graph6 string, or a file holding graph6 or an edge list (`-` for stdin).
    graph: String,
}

#[derive(Args)]
struct SweepArgs {
    /// graph6 file, one graph per line.
    #[arg(long, group = "source")]
    graph6_file: Option<PathBuf>,
    /// Bundled catalogue of connected graphs, orders `MIN..MAX` (max 7).
    #[arg(long, group = "source")]
    catalogue: Option<String>,
    /// Family grid spec; repeatable.
    #[arg(long, group = "source")]
    family: Vec<String>,
    /// Random model: `connected:P`, `diameter_two` or `min_degree:D`.
    #[arg(long, group = "source", requires = "order")]
    random: Option<RandomModel>,
    /// Number of random graphs.
    #[arg(long, default_value_t = 100)]
    count: usize,
    /// Orders for random graphs, `MIN..MAX`.
    #[arg(long)]
    order: Option<String>,
    /// Parameters to solve (comma separated).
    #[arg(long, value_delimiter = ',', default_value = "chi_prime,rc,prc")]
    param: Vec<Parameter>,
    /// Claim ids to judge (comma separated; default all).
    #[arg(long, value_delimiter = ',')]
    claims: Vec<String>,
    /// Cross-check solved values with the brute-force oracle where it fits.
    #[arg(long)]
    oracle: bool,
    /// Output directory for the journal and summaries.
    #[arg(long, default_value = "sweep-out")]
    out: PathBuf,
    /// Continue from an existing journal in the output directory.
    #[arg(long)]
    resume: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(cli: Cli) -> prclab::Result<u8> {
    let g = &cli.global;
    let cli_layer = Layer {
        node_budget: g.budget_nodes,
        time_budget_secs: g.budget_secs,
        colour_cap: g.colour_cap,
        seed: g.seed,
        jobs: g.jobs,
        determinism: g.determinism,
        rainbow_pruning: g.rainbow_pruning.then_some(true),
    };
    let mut layer = resolve_layer(&cli_layer, g.config.as_deref(), |k| std::env::var(k).ok())?;
    if matches!(cli.command, Command::Sweep(_)) && layer.determinism.is_none() {
        // Sweeps parallelise across graphs unless canonical output is asked for.
        layer.determinism = Some(Determinism::ParallelValueOnly);
    }
    let settings = Settings::from_layer(&layer)?;
    match cli.command {
        Command::Gen { spec, format } => cmd_gen(&spec, format),
        Command::Solve { input, param } => cmd_solve(&input, param, &settings),
        Command::Verify { input, certificate } => cmd_verify(&input, &certificate),
        Command::Color { input, method } => cmd_color(&input, method, &settings),
        Command::Bounds { input } => cmd_bounds(&input, &settings),
        Command::Sweep(args) => cmd_sweep(args, &settings),
    }
}

fn print_json(value: &impl serde::Serialize) -> prclab::Result<()> {
    print_text(&(serde_json::to_string_pretty(value)? + "\n"))
}

/// Writes to stdout; a closed pipe (`prclab ... | head`) is not an error.
fn print_text(text: &str) -> prclab::Result<()> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn read_source(path: &str) -> prclab::Result<String> {
    if path == "-" {
        Ok(std::io::read_to_string(std::io::stdin())?)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

/// Resolves a graph argument: a file or stdin first, then a family spec, then a graph6 string.
fn load_graph(input: &GraphInput) -> prclab::Result<(Graph, Option<FamilySpec>)> {
    let arg = input.graph.as_str();
    if arg == "-" || std::path::Path::new(arg).is_file() {
        let text = read_source(arg)?;
        let lines: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        if let [line] = lines.as_slice() {
            if let Ok(g) = parse_graph6(line.as_bytes()) {
                return Ok((g, None));
            }
        }
        let parsed = parse_edge_list(&text)?;
        if parsed.had_duplicates() {
            eprintln!("warning: {} repeated edge(s) collapsed", parsed.duplicates);
        }
        return Ok((parsed.graph, None));
    }
    // ':' never occurs in graph6, so anything with one is meant as a family spec.
    let tag = arg.split(':').next().unwrap_or("");
    if arg.contains(':') || Family::from_tag(tag).is_some() {
        let spec: FamilySpec = arg.parse()?;
        return Ok((spec.generate()?, Some(spec)));
    }
    Ok((parse_graph6(arg.as_bytes())?, None))
}

fn cmd_gen(spec: &str, format: Format) -> prclab::Result<u8> {
    let mut text = String::new();
    for spec in FamilySpec::expand_grid(spec)? {
        let g = spec.generate()?;
        match format {
            Format::Graph6 => text += &(write_graph6(&g)? + "\n"),
            Format::Edges => text += &write_edge_list(&g),
        }
    }
    print_text(&text)?;
    Ok(0)
}

fn solve_json(g: &Graph, r: &SolveResult) -> prclab::Result<serde_json::Value> {
    let (lower, upper) = r.bracket();
    Ok(json!({
        "graph6": write_graph6(g)?,
        "parameter": r.parameter,
        "value": r.value,
        "exact": r.exact,
        "lower": lower,
        "upper": upper,
        "certificate": r.certificate.to_certificate(g),
        "stats": r.stats,
    }))
}

fn cmd_solve(input: &GraphInput, param: Parameter, s: &Settings) -> prclab::Result<u8> {
    let (g, _) = load_graph(input)?;
    let r = solve(&g, param, &s.search)?;
    print_json(&solve_json(&g, &r)?)?;
    if r.exact {
        Ok(0)
    } else {
        let (lo, hi) = r.bracket();
        eprintln!("{param} not decided within budget: {lo} <= {param} <= {hi}");
        Ok(EXIT_BRACKETED)
    }
}

fn cmd_verify(input: &GraphInput, certificate: &std::path::Path) -> prclab::Result<u8> {
    let (g, _) = load_graph(input)?;
    let cert = Certificate::from_json(&read_source(&certificate.to_string_lossy())?)?;
    let c = cert.to_colouring(&g)?;
    let report = verify(&g, &c)?;
    print_json(&report)?;
    if report.is_prc_certificate {
        Ok(0)
    } else {
        if let Some((a, b)) = report.proper_violation {
            eprintln!("not proper: edges {a:?} and {b:?} share a vertex and a colour");
        }
        if let Some((u, v)) = report.unwitnessed_pair {
            eprintln!("not rainbow connected: no rainbow path between {u} and {v}");
        }
        Ok(EXIT_FAIL)
    }
}

fn family_params(
    spec: Option<&FamilySpec>,
    family: Family,
    method: &str,
) -> prclab::Result<Vec<usize>> {
    match spec {
        Some(s) if s.family == family => Ok(s.params.clone()),
        _ => Err(Error::Construction(format!(
            "--method {method} needs a `{}:...` family spec as its graph",
            family.tag()
        ))),
    }
}

fn cmd_color(input: &GraphInput, method: Method, s: &Settings) -> prclab::Result<u8> {
    let (g, spec) = load_graph(input)?;
    let (g, c): (Graph, EdgeColouring) = match method {
        Method::Star => {
            let c = spanning_star_colouring(&g, &s.search)?;
            (g, c)
        }
        Method::Hamcomp => {
            let (w, cycle) = hamiltonian_complement_witness(&g).ok_or_else(|| {
                Error::Construction(
                    "no vertex of maximum degree whose non-neighbourhood has a Hamiltonian cycle"
                        .into(),
                )
            })?;
            let base = chromatic_index(&g, &s.search)?;
            if !base.exact {
                return Err(Error::Construction(
                    "chromatic index not decided within budget".into(),
                ));
            }
            let c = hamiltonian_complement_colouring(&g, w, &cycle, &base.certificate)?;
            (g, c)
        }
        Method::Cycle => cycle_colouring(family_params(spec.as_ref(), Family::Cycle, "cycle")?[0])?,
        Method::Wheel => wheel_colouring(family_params(spec.as_ref(), Family::Wheel, "wheel")?[0])?,
        Method::Gkt => {
            let p = family_params(spec.as_ref(), Family::GKt, "gkt")?;
            gkt_colouring(p[0], p[1])?
        }
        Method::CliqueRc => {
            let clique = maximum_clique(&g);
            let c = clique_rc_colouring(&g, &clique)?;
            (g, c)
        }
    };
    let report = verify(&g, &c)?;
    eprintln!(
        "{} colours; proper: {}; rainbow connected: {}",
        c.palette(),
        report.is_proper,
        report.is_rainbow_connected
    );
    print_json(&c.to_certificate(&g))?;
    Ok(0)
}

fn cmd_bounds(input: &GraphInput, s: &Settings) -> prclab::Result<u8> {
    let (g, spec) = load_graph(input)?;
    let mut solved = Solved::default();
    let mut values = serde_json::Map::new();
    let mut inexact = false;
    for p in [Parameter::ChiPrime, Parameter::Rc, Parameter::Prc] {
        let r = solve(&g, p, &s.search)?;
        if r.exact {
            match p {
                Parameter::ChiPrime => solved.chi_prime = Some(r.value),
                Parameter::Rc => solved.rc = Some(r.value),
                Parameter::Prc => solved.prc = Some(r.value),
            }
        } else {
            inexact = true;
        }
        values.insert(p.tag().to_string(), solve_json(&g, &r)?);
    }
    let report = evaluate_bounds(&g, &solved, spec.as_ref())?;
    let violations: Vec<&str> = report.violations();
    print_json(&json!({
        "graph6": write_graph6(&g)?,
        "family": spec.map(|s| s.to_string()),
        "values": values,
        "claims": report.claims,
        "violations": violations,
        "extremal": classify_extremal(&g, solved.prc)?,
        "sufficient_conditions": sufficient_conditions(&g, solved.rc)?,
    }))?;
    if !violations.is_empty() {
        eprintln!("violated: {}", violations.join(", "));
        Ok(EXIT_FAIL)
    } else if inexact {
        Ok(EXIT_BRACKETED)
    } else {
        Ok(0)
    }
}

fn parse_range(text: &str, what: &str) -> prclab::Result<(usize, usize)> {
    let bad = || Error::Config(format!("{what}: expected N or MIN..MAX, got `{text}`"));
    let (a, b) = text.split_once("..").unwrap_or((text, text));
    let lo = a.trim().parse().map_err(|_| bad())?;
    let hi = b
        .trim_start_matches('=')
        .trim()
        .parse()
        .map_err(|_| bad())?;
    Ok((lo, hi))
}

fn cmd_sweep(args: SweepArgs, s: &Settings) -> prclab::Result<u8> {
    let source = if let Some(path) = args.graph6_file {
        SweepSource::Graph6File { path }
    } else if let Some(range) = &args.catalogue {
        let (min_order, max_order) = parse_range(range, "--catalogue")?;
        SweepSource::Catalogue {
            min_order,
            max_order,
        }
    } else if !args.family.is_empty() {
        SweepSource::FamilyGrid { specs: args.family }
    } else if let Some(model) = args.random {
        let (min_order, max_order) = parse_range(args.order.as_deref().unwrap_or(""), "--order")?;
        SweepSource::Random {
            model,
            count: args.count,
            min_order,
            max_order,
        }
    } else {
        return Err(Error::Config(
            "sweep needs a source: --graph6-file, --catalogue, --family or --random".into(),
        ));
    };
    let mut job = SweepJob::new(source, args.out);
    job.parameters = args.param;
    job.claims = args.claims;
    job.search = s.search.clone();
    job.oracle = args.oracle;
    job.seed = s.seed;
    job.jobs = s.jobs;
    job.resume = args.resume;
    let summary = run_sweep(&job)?;
    print_json(&summary)?;
    eprintln!(
        "{} graphs, {} malformed, {} errors, {} not exact, {} violations; outputs in {}",
        summary.processed,
        summary.malformed,
        summary.errors,
        summary.inexact,
        summary.violations.len(),
        job.out_dir.display()
    );
    Ok(if summary.violations.is_empty() {
        0
    } else {
        EXIT_FAIL
    })
}
