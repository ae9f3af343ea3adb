//! Workbench for independence numbers under excluded complete minors:
//! exact invariants, certified peeling, corpus verification, and a seeded
//! tightness search, with deterministic output throughout.

use clap::{Args, Parser, Subcommand, ValueEnum};
use etabound::exact::{compute_stats, hadwiger_number, ExactStats, LimitError, Limits};
use etabound::graph6::Graph6LineError;
use etabound::peeling::{
    bound_ceiling, guaranteed_bound, peel_independent_set, BaseSolver, BoundParams, PeelError,
    PeelingCertificate, ChosenCandidate,
};
use etabound::verify::{
    corpus_run, summary_csv, tightness_search, write_reports_jsonl, CorpusSource, CorpusSpec,
    FamilyKind, FamilySpec, Inequality, VerifyError,
};
use etabound::{Graph, Rational, VertexSet};
use serde::Serialize;
use std::fmt;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "etabound",
    version,
    about = "Exact solvers and certified constructions relating independence \
             number to the largest complete minor",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print alpha, omega, chi, and eta with witnesses for each input graph
    Compute(ComputeArgs),
    /// Peel dominating pairs to extract a certified independent set
    Peel(PeelArgs),
    /// Check the proven inequalities over a corpus of graphs
    Verify(VerifyArgs),
    /// Hunt for graphs where the strongest bound is tight
    Search(SearchArgs),
}

/// Size caps for the exponential solvers; graphs above a cap are rejected
/// (or skipped, where the subcommand says so) rather than ground through.
#[derive(Args)]
struct LimitArgs {
    /// Largest n for the independence/clique branch-and-bound
    #[arg(long, value_name = "N", default_value_t = Limits::default().max_alpha_exact, value_parser = positive)]
    limit_alpha: usize,
    /// Largest n for the brute-force independence cross-check
    #[arg(long, value_name = "N", default_value_t = Limits::default().max_alpha_brute, value_parser = positive)]
    limit_brute: usize,
    /// Largest n for the chromatic number search
    #[arg(long, value_name = "N", default_value_t = Limits::default().max_chromatic, value_parser = positive)]
    limit_chi: usize,
    /// Largest n for the complete-minor search
    #[arg(long, value_name = "N", default_value_t = Limits::default().max_minor, value_parser = positive)]
    limit_minor: usize,
}

impl LimitArgs {
    fn to_limits(&self) -> Limits {
        Limits {
            max_alpha_exact: self.limit_alpha,
            max_alpha_brute: self.limit_brute,
            max_chromatic: self.limit_chi,
            max_minor: self.limit_minor,
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    /// graph6 file, one graph per line ('#' comments allowed)
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Write one JSON record per graph (stats plus witnesses)
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Args)]
struct PeelArgs {
    /// graph6 file, one graph per line
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Excluded-minor threshold: peel while the graph may have eta > t
    #[arg(long, value_name = "T")]
    t: usize,
    /// Denominator parameter p >= t, as an integer or a fraction like 7/2
    /// (defaults to t)
    #[arg(long, value_name = "P")]
    p: Option<String>,
    /// Base solver for the residual graph
    #[arg(long, value_enum, default_value_t = BaseArg::T3)]
    base: BaseArg,
    /// Write one certificate JSON per graph
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum BaseArg {
    /// Greedy 3-coloring of a 2-degenerate residual (t = 3)
    T3,
    /// Exact maximum independent set on the residual
    Oracle,
}

impl From<BaseArg> for BaseSolver {
    fn from(arg: BaseArg) -> BaseSolver {
        match arg {
            BaseArg::T3 => BaseSolver::ThreeColor,
            BaseArg::Oracle => BaseSolver::Oracle,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// graph6 corpus file (exactly one of --in / --exhaustive-n)
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    /// Check every graph, up to isomorphism, on 1..=N vertices
    #[arg(long, value_name = "N")]
    exhaustive_n: Option<usize>,
    /// Comma-separated check names, or "all"
    #[arg(long, value_name = "LIST", default_value = "all")]
    checks: String,
    /// Drop disconnected graphs from the corpus
    #[arg(long)]
    connected_only: bool,
    /// Keep only graphs with eta >= this
    #[arg(long, value_name = "ETA")]
    eta_min: Option<usize>,
    /// Keep only graphs with eta <= this
    #[arg(long, value_name = "ETA")]
    eta_max: Option<usize>,
    /// Worker threads (output is identical for any value)
    #[arg(long, value_name = "N", default_value_t = 1, value_parser = positive)]
    jobs: usize,
    /// Write the per-graph reports as JSON lines
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Write the per-inequality summary as CSV
    #[arg(long, value_name = "FILE")]
    summary_out: Option<PathBuf>,
    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Args)]
struct SearchArgs {
    /// Family of starting graphs for the local search
    #[arg(long, value_enum, default_value_t = FamilyArg::Complete)]
    family: FamilyArg,
    /// Smallest family member
    #[arg(long, value_name = "N", default_value_t = 5)]
    n_min: usize,
    /// Largest family member
    #[arg(long, value_name = "N", default_value_t = 9)]
    n_max: usize,
    /// Edge probability for the gnp family
    #[arg(long, value_name = "P", default_value_t = 0.5)]
    p: f64,
    /// gnp samples per vertex count
    #[arg(long, value_name = "K", default_value_t = 4, value_parser = positive)]
    samples: usize,
    /// Solver evaluations to spend
    #[arg(long, value_name = "N")]
    budget: usize,
    /// Seed for every random choice the search makes
    #[arg(long, value_name = "SEED", default_value_t = 0)]
    seed: u64,
    /// How many best graphs to keep
    #[arg(long, value_name = "K", default_value_t = 10)]
    top: usize,
    /// Write the ranked hits as JSON lines
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Complete,
    Cycle,
    Path,
    Petersen,
    Gnp,
}

impl From<FamilyArg> for FamilyKind {
    fn from(arg: FamilyArg) -> FamilyKind {
        match arg {
            FamilyArg::Complete => FamilyKind::Complete,
            FamilyArg::Cycle => FamilyKind::Cycle,
            FamilyArg::Path => FamilyKind::Path,
            FamilyArg::Petersen => FamilyKind::Petersen,
            FamilyArg::Gnp => FamilyKind::Gnp,
        }
    }
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".to_string()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io { path: PathBuf, source: std::io::Error },
    Parse(Graph6LineError),
    Limit(LimitError),
    Peel(PeelError),
    BoundViolation { g6: String, size: usize, bound: i64 },
    Verify(VerifyError),
}

impl CliError {
    /// Stable contract: 0 ok, 1 usage, 2 parse, 3 limits, 4 bound
    /// violation, 5 solver bug.
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 1,
            CliError::Parse(_) => 2,
            CliError::Limit(_) => 3,
            CliError::Peel(e) => match e {
                PeelError::BadT(_) | PeelError::BadP { .. } => 1,
                PeelError::EtaBelowThreshold { .. }
                | PeelError::EmptyGraph
                | PeelError::NotTwoDegenerate { .. }
                | PeelError::BaseNotApplicable { .. }
                | PeelError::Limit(_) => 3,
                // peeling's internal construction broke: a solver bug
                PeelError::Dominating(_) => 5,
            },
            CliError::BoundViolation { .. } => 4,
            CliError::Verify(e) => match e {
                VerifyError::Io { .. } | VerifyError::InvalidCorpus(_) | VerifyError::Jobs(_) => 1,
                VerifyError::Parse(_) => 2,
                VerifyError::Limit(_) => 3,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Parse(e) => write!(f, "{e}"),
            CliError::Limit(e) => write!(f, "{e}"),
            CliError::Peel(e) => write!(f, "{e}"),
            CliError::BoundViolation { g6, size, bound } => write!(
                f,
                "BOUND VIOLATION on {g6}: returned set of size {size} is below \
                 the guaranteed {bound}; this is a bug in the solver"
            ),
            CliError::Verify(e) => write!(f, "{e}"),
        }
    }
}

impl From<LimitError> for CliError {
    fn from(e: LimitError) -> Self {
        CliError::Limit(e)
    }
}

impl From<PeelError> for CliError {
    fn from(e: PeelError) -> Self {
        CliError::Peel(e)
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        CliError::Verify(e)
    }
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render();
            if e.use_stderr() {
                eprint!("{rendered}");
                return 1;
            }
            print!("{rendered}");
            return 0;
        }
    };
    let outcome = match cli.command {
        Command::Compute(args) => cmd_compute(args),
        Command::Peel(args) => cmd_peel(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Search(args) => cmd_search(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

fn read_corpus(path: &Path) -> Result<Vec<(String, Graph)>, CliError> {
    let content = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    etabound::graph6::parse_graph6_lines(&content).map_err(CliError::Parse)
}

fn write_file(path: &Path, content: &[u8]) -> Result<(), CliError> {
    std::fs::write(path, content).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn fmt_set(s: &VertexSet) -> String {
    let inner: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}

#[derive(Serialize)]
struct ComputeRecord {
    g6: String,
    #[serde(flatten)]
    stats: ExactStats,
}

fn cmd_compute(args: ComputeArgs) -> Result<i32, CliError> {
    let limits = args.limits.to_limits();
    let mut records = Vec::new();
    for (g6, g) in read_corpus(&args.input)? {
        let stats = compute_stats(&g, &limits)?;
        println!(
            "{g6}: n={} alpha={} omega={} chi={} eta={}",
            g.n(),
            stats.alpha,
            stats.omega,
            stats.chi,
            stats.eta
        );
        println!("  independent set  {}", fmt_set(&stats.alpha_witness));
        println!("  clique           {}", fmt_set(&stats.omega_witness));
        let coloring: Vec<String> = stats.chi_witness.iter().map(|c| c.to_string()).collect();
        println!("  coloring         [{}]", coloring.join(", "));
        let branch_sets: Vec<String> = stats
            .eta_witness
            .branch_sets
            .iter()
            .map(fmt_set)
            .collect();
        println!("  minor model      {}", branch_sets.join(" "));
        records.push(ComputeRecord { g6, stats });
    }
    if let Some(path) = &args.out {
        let mut buffer = Vec::new();
        for record in &records {
            serde_json::to_writer(&mut buffer, record).expect("in-memory write");
            buffer.push(b'\n');
        }
        write_file(path, &buffer)?;
    }
    Ok(0)
}

fn parse_ratio(text: &str) -> Result<Rational, CliError> {
    let bad = |detail: &str| CliError::Usage(format!("--p {text}: {detail}"));
    let (numer, denom) = match text.split_once('/') {
        Some((a, b)) => (a, b),
        None => (text, "1"),
    };
    let numer: i64 = numer.trim().parse().map_err(|_| bad("not a number"))?;
    let denom: i64 = denom.trim().parse().map_err(|_| bad("not a number"))?;
    if denom <= 0 {
        return Err(bad("denominator must be positive"));
    }
    Ok(Rational::new(numer, denom))
}

fn cmd_peel(args: PeelArgs) -> Result<i32, CliError> {
    let limits = args.limits.to_limits();
    let p = match &args.p {
        Some(text) => parse_ratio(text)?,
        None => Rational::from_integer(args.t as i64),
    };
    let params = BoundParams::new(args.t, p)?;
    let base: BaseSolver = args.base.into();
    if base == BaseSolver::ThreeColor && args.t != 3 {
        return Err(CliError::Usage(
            "--base t3 is the t = 3 construction and does not justify bounds for other \
             thresholds; pass --t 3 or use --base oracle"
                .to_string(),
        ));
    }
    let mut certificates: Vec<PeelingCertificate> = Vec::new();
    for (g6, g) in read_corpus(&args.input)? {
        let (set, cert) = peel_independent_set(&g, &params, base, &limits)?;
        let chosen = match cert.chosen {
            ChosenCandidate::Level(i) => format!("level {i}"),
            ChosenCandidate::Base => "base".to_string(),
        };
        let solver = match cert.base_solver {
            BaseSolver::ThreeColor => "t3",
            BaseSolver::Oracle => "oracle",
        };
        if g.n() <= limits.max_minor {
            let (eta, _) = hadwiger_number(&g, &limits)?;
            if eta >= params.t() {
                let bound = bound_ceiling(guaranteed_bound(g.n(), eta, &params)?);
                if (set.len() as i64) < bound {
                    return Err(CliError::BoundViolation {
                        g6,
                        size: set.len(),
                        bound,
                    });
                }
                println!(
                    "{g6}: |s|={} bound={bound} eta={eta} levels={} base={solver} from={chosen}",
                    set.len(),
                    cert.levels.len()
                );
            } else {
                println!(
                    "{g6}: |s|={} (eta={eta} below t={}, no bound) levels={} base={solver} from={chosen}",
                    set.len(),
                    params.t(),
                    cert.levels.len()
                );
            }
        } else {
            println!(
                "{g6}: |s|={} (eta not computed: n exceeds --limit-minor) levels={} base={solver} from={chosen}",
                set.len(),
                cert.levels.len()
            );
        }
        println!("  s = {}", fmt_set(&set));
        certificates.push(cert);
    }
    if let Some(path) = &args.out {
        let mut buffer = Vec::new();
        for cert in &certificates {
            serde_json::to_writer(&mut buffer, cert).expect("in-memory write");
            buffer.push(b'\n');
        }
        write_file(path, &buffer)?;
    }
    Ok(0)
}

fn parse_checks(text: &str) -> Result<Vec<Inequality>, CliError> {
    if text.trim() == "all" {
        return Ok(Inequality::ALL.to_vec());
    }
    let mut checks = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        let check = Inequality::from_name(token).ok_or_else(|| {
            let valid: Vec<&str> = Inequality::ALL.iter().map(|i| i.name()).collect();
            CliError::Usage(format!(
                "unknown check '{token}'; valid: all, {}",
                valid.join(", ")
            ))
        })?;
        if !checks.contains(&check) {
            checks.push(check);
        }
    }
    Ok(checks)
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, CliError> {
    let checks = parse_checks(&args.checks)?;
    let source = match (&args.input, args.exhaustive_n) {
        (Some(path), None) => CorpusSource::File(path.clone()),
        (None, Some(n)) => CorpusSource::Exhaustive { n_max: n },
        _ => {
            return Err(CliError::Usage(
                "pass exactly one corpus source: --in FILE or --exhaustive-n N".to_string(),
            ))
        }
    };
    let spec = CorpusSpec {
        source,
        connected_only: args.connected_only,
        eta_min: args.eta_min,
        eta_max: args.eta_max,
    };
    let run = corpus_run(&spec, &checks, &args.limits.to_limits(), args.jobs)?;
    println!(
        "graphs: {} expanded, {} checked, {} filtered, {} skipped over limits",
        run.summary.total, run.summary.checked, run.summary.filtered, run.summary.skipped_limit
    );
    for row in &run.summary.checks {
        match (row.min_slack, &row.argmin_g6) {
            (Some(slack), Some(g6)) => println!(
                "  {:<14} applicable {:>7}  pass {:>7}  fail {:>5}  min slack {slack} at {g6}",
                row.inequality, row.applicable, row.pass, row.fail
            ),
            _ => println!("  {:<14} applicable       0", row.inequality),
        }
    }
    if let Some(path) = &args.out {
        let mut buffer = Vec::new();
        write_reports_jsonl(&mut buffer, &run.reports).expect("in-memory write");
        write_file(path, &buffer)?;
    }
    if let Some(path) = &args.summary_out {
        write_file(path, summary_csv(&run.summary).as_bytes())?;
    }
    if run.summary.solver_bug {
        let failures: usize = run.summary.checks.iter().map(|r| r.fail).sum();
        eprintln!(
            "SOLVER-BUG: {failures} applicable check(s) failed; these inequalities are \
             proven, so an exact solver is wrong"
        );
        return Ok(5);
    }
    Ok(0)
}

fn cmd_search(args: SearchArgs) -> Result<i32, CliError> {
    let family = FamilySpec {
        kind: args.family.into(),
        n_min: args.n_min,
        n_max: args.n_max,
        samples_per_n: args.samples,
        p: args.p,
        seed: args.seed,
    };
    let hits = tightness_search(
        &family,
        args.budget,
        args.seed,
        args.top,
        &args.limits.to_limits(),
    )?;
    if hits.is_empty() {
        println!("no graphs with eta >= 5 found within the budget");
    }
    for (rank, hit) in hits.iter().enumerate() {
        println!("{:>3}. slack {:>4}  {}", rank + 1, hit.slack, hit.g6);
    }
    if let Some(path) = &args.out {
        let mut buffer = Vec::new();
        for hit in &hits {
            serde_json::to_writer(&mut buffer, hit).expect("in-memory write");
            buffer.push(b'\n');
        }
        write_file(path, &buffer)?;
    }
    Ok(0)
}
