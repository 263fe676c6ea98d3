//! `alpha-extremal`: spectral radii, extremal families, bounds and the
//! exhaustive verification harnesses from the command line.
//!
//! Exit codes: 0 success, 1 a checked assertion failed, 2 invalid input or
//! arguments, 3 the input graph is disconnected.

mod alpha;
mod report;

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tricyclic_alpha::bounds::{inequality_chain, BoundsError, BoundsReport};
use tricyclic_alpha::extremal::{
    enumerate_tricyclic, verify_corollary_grid, verify_lemma_properties, verify_theorem_grid, EnumerationQuery,
    SearchError, SearchOptions, STRICT_MARGIN, TIE_WINDOW,
};
use tricyclic_alpha::families::{construct_family, FamilyId, FamilySpec};
use tricyclic_alpha::graph::{are_isomorphic, cycle_class, CycleClass, Graph, GraphError};
use tricyclic_alpha::spectra::{alpha_spectral_radius, SpectralError, RAYLEIGH_TOL, RESIDUAL_TOL};

use alpha::{parse_grid, Alpha};
use report::{sig17, RunReport, Text};

const DEFAULT_THEOREM_GRID: &str = "0.5,0.6,0.75,0.9";
const DEFAULT_INEQUALITY_GRID: &str = "0.5:0.95:0.05";
const BOUND_TOL: f64 = 1e-9;

#[derive(Parser)]
#[command(name = "alpha-extremal", version, about = "A_alpha spectral radius tools for tricyclic graphs")]
struct Cli {
    /// Print the JSON run report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for exhaustive searches; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spectral radius (and optionally the Perron vector) of a graph file.
    Spectral {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        alpha: Alpha,
        #[arg(long)]
        perron: bool,
        /// Also write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build T3, T4, T6 or T7 as an edge list.
    Construct {
        #[arg(long)]
        family: FamilyId,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Edge-list destination; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lower and upper bounds on the radius, checked against the solver.
    Bounds {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        alpha: Alpha,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one of the verification harnesses.
    Verify {
        mode: Mode,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// A single α; repeatable.
        #[arg(long)]
        alpha: Vec<Alpha>,
        /// α values as start:stop:step.
        #[arg(long)]
        alpha_grid: Option<String>,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        k_max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Stream every tricyclic graph of order n with k pendant vertices as
    /// JSON lines.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        class: Option<usize>,
        #[arg(long)]
        alpha: Vec<Alpha>,
        #[arg(long)]
        alpha_grid: Option<String>,
        /// JSON-lines destination; stdout when absent (the summary then goes
        /// to stderr).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Theorem,
    Corollary,
    Lemmas,
    Inequalities,
}

#[derive(Debug)]
enum CliError {
    Invalid(String),
    Disconnected(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Disconnected(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Invalid(m) | CliError::Disconnected(m) => f.write_str(m),
        }
    }
}

impl From<SpectralError> for CliError {
    fn from(e: SpectralError) -> Self {
        match e {
            SpectralError::Disconnected => CliError::Disconnected(e.to_string()),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::Disconnected => CliError::Disconnected(e.to_string()),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::Spectral(s) => s.into(),
            SearchError::Graph(g) => g.into(),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        match e {
            BoundsError::Spectral(s) => s.into(),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

/// A finished command: the report plus its human rendering.
struct Done {
    report: RunReport,
    text: String,
    /// Where the JSON report should also be written.
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let result = match cli.command {
        Command::Spectral { input, alpha, perron, out } => spectral(&input, &alpha, perron, out),
        Command::Construct { family, n, k, out } => construct(family, n, k, out, cli.json),
        Command::Bounds { input, alpha, out } => bounds(&input, &alpha, out),
        Command::Verify { mode, n, k, alpha, alpha_grid, trials, seed, k_max, out } => {
            let alphas = alpha_list(alpha, alpha_grid.as_deref());
            let opts = SearchOptions { jobs: cli.jobs };
            alphas.and_then(|alphas| match mode {
                Mode::Theorem => theorem(n, k, alphas, opts, out),
                Mode::Corollary => corollary(n, k, alphas, opts, out),
                Mode::Lemmas => lemmas(trials, seed, out),
                Mode::Inequalities => inequalities(k_max, alphas, alpha_grid.is_some(), out),
            })
        }
        Command::Enumerate { n, k, class, alpha, alpha_grid, out } => {
            alpha_list(alpha, alpha_grid.as_deref()).and_then(|alphas| enumerate(n, k, class, alphas, out))
        }
    };

    match result {
        Ok(mut done) => {
            done.report.wall_time_s = started.elapsed().as_secs_f64();
            let json = serde_json::to_string_pretty(&done.report).expect("reports serialize");
            if let Some(path) = &done.out {
                if let Err(e) = fs::write(path, format!("{json}\n")) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            let body = if cli.json { format!("{json}\n") } else { done.text };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = io::stdout().lock().write_all(body.as_bytes());
            if done.report.passed {
                ExitCode::SUCCESS
            } else {
                if let Some(c) = &done.report.counterexample {
                    eprintln!("counterexample:\n{c}");
                }
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

/// Explicit `--alpha` values, else the grid, else nothing.
fn alpha_list(explicit: Vec<Alpha>, grid: Option<&str>) -> Result<Vec<Alpha>, CliError> {
    match (explicit.is_empty(), grid) {
        (false, Some(_)) => Err(CliError::Invalid("give either --alpha or --alpha-grid, not both".into())),
        (false, None) => Ok(explicit),
        (true, Some(spec)) => parse_grid(spec).map_err(CliError::Invalid),
        (true, None) => Ok(Vec::new()),
    }
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
    let g = Graph::from_edge_list(&text).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
    if !g.is_connected() {
        return Err(CliError::Disconnected(format!("{}: graph is disconnected", path.display())));
    }
    Ok(g)
}

fn texts(alphas: &[Alpha]) -> Vec<&str> {
    alphas.iter().map(|a| a.text.as_str()).collect()
}

fn spectral(input: &Path, alpha: &Alpha, perron: bool, out: Option<PathBuf>) -> Result<Done, CliError> {
    let g = read_graph(input)?;
    let r = alpha_spectral_radius(&g, alpha.value)?;
    let mut report = RunReport::new(
        "spectral",
        json!({ "input": input.display().to_string(), "alpha": alpha.text, "perron": perron }),
    );
    report.results = json!({
        "order": g.order(),
        "size": g.size(),
        "radius": r.radius,
        "iterations": r.iterations,
        "residual": r.residual,
        "perron": perron.then(|| r.perron.clone()),
    });
    report.tolerances = json!({ "rayleigh_delta": RAYLEIGH_TOL, "residual": RESIDUAL_TOL });

    let mut text = Text::default();
    text.row("alpha", alpha).row("order", g.order()).row("size", g.size()).num("radius", r.radius);
    text.row("iterations", r.iterations).num("residual", r.residual);
    if perron {
        for (v, x) in r.perron.iter().enumerate() {
            text.num(&format!("perron[{v}]"), *x);
        }
    }
    Ok(Done { report, text: text.finish(), out })
}

fn construct(family: FamilyId, n: usize, k: usize, out: Option<PathBuf>, json_mode: bool) -> Result<Done, CliError> {
    let spec = FamilySpec::new(family, n, k).map_err(|e| CliError::Invalid(e.to_string()))?;
    let g = construct_family(&spec);
    let edge_list = g.to_edge_list();
    let class = cycle_class(&g)?;
    let mut report = RunReport::new(
        "construct",
        json!({ "family": family, "n": n, "k": k, "out": out.as_ref().map(|p| p.display().to_string()) }),
    );
    report.results = json!({
        "order": g.order(),
        "size": g.size(),
        "max_degree": g.max_degree(),
        "pendants": g.pendant_count(),
        "cycle_class": class,
        "edge_list": edge_list,
    });

    let mut text = Text::default();
    text.row("family", family).row("order", g.order()).row("size", g.size());
    text.row("max_degree", g.max_degree()).row("cycle_class", class);
    let text = match &out {
        Some(path) => {
            fs::write(path, &edge_list).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
            text.row("written", path.display());
            text.finish()
        }
        None => {
            // keep stdout a clean edge list; the summary goes to stderr
            if !json_mode {
                eprint!("{}", text.finish());
            }
            edge_list
        }
    };
    Ok(Done { report, text, out: None })
}

fn bounds(input: &Path, alpha: &Alpha, out: Option<PathBuf>) -> Result<Done, CliError> {
    let g = read_graph(input)?;
    let b = BoundsReport::compute(&g, alpha.value)?;
    let rho = alpha_spectral_radius(&g, alpha.value)?.radius;
    let holds = b.brackets(rho, BOUND_TOL);
    let mut report =
        RunReport::new("bounds", json!({ "input": input.display().to_string(), "alpha": alpha.text }));
    report.results = json!({ "bounds": b, "radius": rho, "sandwich_holds": holds });
    report.tolerances = json!({ "sandwich": BOUND_TOL, "residual": RESIDUAL_TOL });
    report.passed = holds;
    if !holds {
        report.counterexample = Some(g.to_edge_list());
    }

    let mut text = Text::default();
    text.row("alpha", alpha).num("lower_maxdeg", b.lower_maxdeg).num("radius", rho);
    text.num("upper_degree_mean", b.upper_degree_mean);
    match b.upper_sq {
        Some(sq) => text.num("upper_sq", sq),
        None => text.row("upper_sq", "undefined for alpha < 1/2"),
    };
    text.row("sandwich", if holds { "holds" } else { "VIOLATED" });
    Ok(Done { report, text: text.finish(), out })
}

fn theorem_inputs(
    n: Option<usize>,
    k: Option<usize>,
    alphas: Vec<Alpha>,
) -> Result<(usize, usize, Vec<Alpha>), CliError> {
    let (Some(n), Some(k)) = (n, k) else {
        return Err(CliError::Invalid("--n and --k are required".into()));
    };
    let alphas = if alphas.is_empty() {
        DEFAULT_THEOREM_GRID.split(',').map(|s| s.parse().expect("default grid is valid")).collect()
    } else {
        alphas
    };
    Ok((n, k, alphas))
}

fn theorem(
    n: Option<usize>,
    k: Option<usize>,
    alphas: Vec<Alpha>,
    opts: SearchOptions,
    out: Option<PathBuf>,
) -> Result<Done, CliError> {
    let (n, k, alphas) = theorem_inputs(n, k, alphas)?;
    let values: Vec<f64> = alphas.iter().map(|a| a.value).collect();
    let reports = verify_theorem_grid(n, k, &values, opts)?;

    let mut report =
        RunReport::new("verify theorem", json!({ "n": n, "k": k, "alphas": texts(&alphas), "jobs": opts.jobs }));
    report.tolerances = json!({ "tie_window": TIE_WINDOW, "strict_margin": STRICT_MARGIN, "residual": RESIDUAL_TOL });
    report.passed = reports.iter().all(|r| r.passed);
    report.counterexample = reports.iter().find(|r| !r.passed).map(|r| r.extremal.witness.clone());
    report.results = json!({ "reports": reports });

    let mut text = Text::default();
    for (a, r) in alphas.iter().zip(&reports) {
        let e = &r.extremal;
        text.raw(&format!(
            "alpha {:<6} {}  rho_max {}  classes {}  graphs {}  family order {}",
            a.text,
            if r.passed { "PASS" } else { "FAIL" },
            sig17(e.max_radius),
            e.maximizer_count,
            e.graphs_enumerated,
            if r.family_ordering_holds { "holds" } else { "VIOLATED" },
        ));
    }
    Ok(Done { report, text: text.finish(), out })
}

fn corollary(
    n: Option<usize>,
    k: Option<usize>,
    alphas: Vec<Alpha>,
    opts: SearchOptions,
    out: Option<PathBuf>,
) -> Result<Done, CliError> {
    let (n, k, alphas) = theorem_inputs(n, k, alphas)?;
    let values: Vec<f64> = alphas.iter().map(|a| a.value).collect();
    let reports = verify_corollary_grid(n, k, &values, opts)?;

    let mut report =
        RunReport::new("verify corollary", json!({ "n": n, "k": k, "alphas": texts(&alphas), "jobs": opts.jobs }));
    report.tolerances = json!({ "tie_window": TIE_WINDOW, "strict_margin": STRICT_MARGIN, "residual": RESIDUAL_TOL });
    report.passed = reports.iter().all(|r| r.passed);
    report.counterexample = reports.iter().find_map(|r| r.first_violation.clone());
    report.results = json!({ "reports": reports });

    let mut text = Text::default();
    for (a, r) in alphas.iter().zip(&reports) {
        text.raw(&format!(
            "alpha {:<6} {}  violations {}  flagged {}  min_gap {}  graphs {}",
            a.text,
            if r.passed { "PASS" } else { "FAIL" },
            r.violations,
            r.flagged,
            sig17(r.min_gap),
            r.graphs_checked,
        ));
    }
    Ok(Done { report, text: text.finish(), out })
}

fn lemmas(trials: usize, seed: u64, out: Option<PathBuf>) -> Result<Done, CliError> {
    let reports = verify_lemma_properties(trials, seed)?;
    let mut report = RunReport::new("verify lemmas", json!({ "trials": trials, "seed": seed }));
    report.seed = Some(seed);
    report.tolerances = json!({ "strict_margin": STRICT_MARGIN, "residual": RESIDUAL_TOL });
    report.passed = reports.iter().all(|r| r.passed());
    report.counterexample = reports.iter().find_map(|r| r.first_failure.as_ref().map(|f| f.before.clone()));
    report.results = json!({ "reports": reports });

    let mut text = Text::default();
    for r in &reports {
        text.raw(&format!(
            "{:<4} {}  trials {}  failures {}  skipped {}  exempt {}",
            r.lemma,
            if r.passed() { "PASS" } else { "FAIL" },
            r.trials,
            r.failures,
            r.skipped,
            r.exempt
        ));
    }
    text.row("seed", seed);
    Ok(Done { report, text: text.finish(), out })
}

fn inequalities(k_max: usize, alphas: Vec<Alpha>, from_grid: bool, out: Option<PathBuf>) -> Result<Done, CliError> {
    if k_max == 0 {
        return Err(CliError::Invalid("--k-max must be at least 1".into()));
    }
    let alphas = if alphas.is_empty() { parse_grid(DEFAULT_INEQUALITY_GRID).expect("valid default") } else { alphas };
    let mut checked = 0usize;
    let mut failures = 0usize;
    let mut first_failure = None;
    // smallest rhs - lhs per record name over the grid
    let mut slack: BTreeMap<&'static str, f64> = BTreeMap::new();
    for k in 1..=k_max {
        for a in &alphas {
            for r in inequality_chain(k, a.value)? {
                checked += 1;
                let s = slack.entry(r.name).or_insert(f64::INFINITY);
                *s = s.min(r.rhs - r.lhs);
                if !r.holds {
                    failures += 1;
                    first_failure.get_or_insert_with(|| {
                        format!("{} at k = {k}, alpha = {}: lhs {} >= rhs {}", r.name, a.text, sig17(r.lhs), sig17(r.rhs))
                    });
                }
            }
        }
    }

    let inputs = json!({
        "k_max": k_max,
        "alphas": texts(&alphas),
        "alpha_source": if from_grid { "grid" } else { "list" },
    });
    let mut report = RunReport::new("verify inequalities", inputs);
    report.tolerances = json!({ "comparison": "exact floating-point lhs < rhs" });
    report.passed = failures == 0;
    report.counterexample = first_failure.clone();
    report.results = json!({
        "records_checked": checked,
        "failures": failures,
        "first_failure": first_failure,
        "min_slack": slack,
    });

    let mut text = Text::default();
    text.row("records", checked).row("failures", failures);
    for (name, s) in &slack {
        text.num(&format!("min slack {name}"), *s);
    }
    Ok(Done { report, text: text.finish(), out })
}

fn enumerate(
    n: usize,
    k: usize,
    class: Option<usize>,
    alphas: Vec<Alpha>,
    out: Option<PathBuf>,
) -> Result<Done, CliError> {
    let mut q = EnumerationQuery::new(n, k);
    if let Some(c) = class {
        let c = CycleClass::new(c).ok_or_else(|| CliError::Invalid(format!("cycle class {c} is not 3, 4, 6 or 7")))?;
        q = q.with_class(c);
    }
    let stream = enumerate_tricyclic(&q)?;

    let sink: Box<dyn Write> = match &out {
        Some(path) => Box::new(
            fs::File::create(path).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?,
        ),
        None => Box::new(io::stdout().lock()),
    };
    let mut sink = BufWriter::new(sink);
    let io_err = |e: io::Error| CliError::Invalid(format!("write failed: {e}"));

    let mut per_class: BTreeMap<usize, u64> = BTreeMap::new();
    let mut best: Vec<Option<(f64, u64, Graph)>> = vec![None; alphas.len()];
    let mut total = 0u64;
    for g in stream {
        let c = cycle_class(&g)?.count();
        *per_class.entry(c).or_default() += 1;
        let mut radii = serde_json::Map::new();
        for (slot, a) in best.iter_mut().zip(&alphas) {
            let r = alpha_spectral_radius(&g, a.value)?.radius;
            radii.insert(a.text.clone(), json!(r));
            if slot.as_ref().map_or(true, |(b, _, _)| r > *b) {
                *slot = Some((r, total + 1, g.clone()));
            }
        }
        let line = json!({ "order": g.order(), "edges": g.edges(), "cycle_class": c, "pendants": g.pendant_count(), "radii": radii });
        writeln!(sink, "{line}").map_err(io_err)?;
        total += 1;
    }
    sink.flush().map_err(io_err)?;
    drop(sink);

    let target = FamilySpec::new(class.and_then(CycleClass::new).map_or(FamilyId::T3, FamilyId::for_class), n, k)
        .ok()
        .map(|spec| (spec.family(), construct_family(&spec)));
    let maxima: Vec<Value> = alphas
        .iter()
        .zip(&best)
        .filter_map(|(a, b)| {
            let (r, line, g) = b.as_ref()?;
            Some(json!({
                "alpha": a.text,
                "max_radius": r,
                "line": line,
                "edge_list": g.to_edge_list(),
                "target": target.as_ref().map(|(id, _)| id),
                "iso_to_target": target.as_ref().map(|(_, t)| are_isomorphic(g, t)),
            }))
        })
        .collect();

    let mut report = RunReport::new(
        "enumerate",
        json!({
            "n": n,
            "k": k,
            "class": class,
            "alphas": texts(&alphas),
            "out": out.as_ref().map(|p| p.display().to_string()),
        }),
    );
    report.tolerances = json!({ "residual": RESIDUAL_TOL });
    report.results = json!({ "total": total, "per_class": per_class, "maxima": maxima });

    let mut text = Text::default();
    text.row("graphs", total);
    for (c, count) in &per_class {
        text.row(&format!("class {c}"), count);
    }
    for m in &maxima {
        text.raw(&format!(
            "alpha {:<6} max {}  line {}  iso to target {}",
            m["alpha"].as_str().unwrap_or_default(),
            sig17(m["max_radius"].as_f64().unwrap_or(f64::NAN)),
            m["line"],
            m["iso_to_target"],
        ));
    }
    let text = text.finish();
    if out.is_none() {
        // stdout carries the JSON lines
        eprint!("{text}");
        return Ok(Done { report, text: String::new(), out: None });
    }
    Ok(Done { report, text, out: None })
}
