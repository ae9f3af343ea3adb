//! Machine-checking of independence/minor inequalities over graph corpora.
//!
//! Seven inequalities relate n, the independence number α, the clique
//! number ω, and the Hadwiger number η. Each is evaluated in exact integer
//! arithmetic with its applicability hypothesis recorded, never silently
//! assumed. All of them are theorems on their stated domains, so a failure
//! on any corpus graph indicts the exact solvers — the harness flags it as
//! a solver bug rather than celebrating a "counterexample".

use crate::enumerate;
use crate::exact::{compute_stats, ExactStats, LimitError, Limits};
use crate::generate;
use crate::graph::Graph;
use crate::graph6::{parse_graph6_lines, write_graph6, Graph6LineError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::io;
use std::path::PathBuf;
use thiserror::Error;

/// The checked inequalities. Names index CLI flags, report records, and
/// summary rows; they describe the α-side shape of each bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Inequality {
    /// α·η ≥ n — always applicable.
    AlphaEta,
    /// (2α−1)·η ≥ n — always applicable.
    TwoAlphaMinusOne,
    /// (2α−1)·η ≥ n + ω — needs α ≥ 2 (any complete graph violates it).
    TwoAlphaMinusOneOmega,
    /// (4α−3)·η ≥ 2n — needs α ≥ 3.
    FourAlphaMinusThree,
    /// (2α−2)·η ≥ n — needs α ≥ 3.
    TwoAlphaMinusTwo,
    /// (2η−3)(2α−1) ≥ 2n−3 — needs η ≥ 3.
    T3,
    /// (2η−5)(2α−1) ≥ 2n−5 — needs η ≥ 5.
    T5,
}

impl Inequality {
    pub const ALL: [Inequality; 7] = [
        Inequality::AlphaEta,
        Inequality::TwoAlphaMinusOne,
        Inequality::TwoAlphaMinusOneOmega,
        Inequality::FourAlphaMinusThree,
        Inequality::TwoAlphaMinusTwo,
        Inequality::T3,
        Inequality::T5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Inequality::AlphaEta => "alpha-eta",
            Inequality::TwoAlphaMinusOne => "2alpha-1",
            Inequality::TwoAlphaMinusOneOmega => "2alpha-1-omega",
            Inequality::FourAlphaMinusThree => "4alpha-3",
            Inequality::TwoAlphaMinusTwo => "2alpha-2",
            Inequality::T3 => "t3",
            Inequality::T5 => "t5",
        }
    }

    pub fn from_name(name: &str) -> Option<Inequality> {
        Inequality::ALL.into_iter().find(|i| i.name() == name)
    }

    /// Evaluates this inequality on exact invariants. `pass` is the raw
    /// `lhs >= rhs` verdict; only `applicable` records carry any weight.
    pub fn evaluate(self, n: usize, alpha: usize, omega: usize, eta: usize) -> InequalityCheck {
        let (n, a, w, h) = (n as i64, alpha as i64, omega as i64, eta as i64);
        let (applicable, lhs, rhs) = match self {
            Inequality::AlphaEta => (true, a * h, n),
            Inequality::TwoAlphaMinusOne => (true, (2 * a - 1) * h, n),
            Inequality::TwoAlphaMinusOneOmega => (alpha >= 2, (2 * a - 1) * h, n + w),
            Inequality::FourAlphaMinusThree => (alpha >= 3, (4 * a - 3) * h, 2 * n),
            Inequality::TwoAlphaMinusTwo => (alpha >= 3, (2 * a - 2) * h, n),
            Inequality::T3 => (eta >= 3, (2 * h - 3) * (2 * a - 1), 2 * n - 3),
            Inequality::T5 => (eta >= 5, (2 * h - 5) * (2 * a - 1), 2 * n - 5),
        };
        InequalityCheck {
            name: self.name().to_string(),
            applicable,
            lhs,
            rhs,
            pass: lhs >= rhs,
            slack: lhs - rhs,
        }
    }
}

/// One evaluated inequality on one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityCheck {
    pub name: String,
    pub applicable: bool,
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
    pub slack: i64,
}

/// Everything the harness records about one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub g6: String,
    pub n: usize,
    pub alpha: usize,
    pub omega: usize,
    pub chi: usize,
    pub eta: usize,
    pub checks: Vec<InequalityCheck>,
}

fn report_for(g6: String, g: &Graph, stats: &ExactStats, checks: &[Inequality]) -> BoundReport {
    BoundReport {
        g6,
        n: g.n(),
        alpha: stats.alpha,
        omega: stats.omega,
        chi: stats.chi,
        eta: stats.eta,
        checks: checks
            .iter()
            .map(|i| i.evaluate(g.n(), stats.alpha, stats.omega, stats.eta))
            .collect(),
    }
}

/// Evaluates the strongest bound alone: (2η−5)(2α−1) ≥ 2n−5 for η ≥ 5.
pub fn check_t5(g: &Graph, limits: &Limits) -> Result<InequalityCheck, LimitError> {
    let stats = compute_stats(g, limits)?;
    Ok(Inequality::T5.evaluate(g.n(), stats.alpha, stats.omega, stats.eta))
}

/// Evaluates all seven inequalities on one graph.
pub fn check_inequalities(g: &Graph, limits: &Limits) -> Result<BoundReport, LimitError> {
    check_selected(g, &Inequality::ALL, limits)
}

pub fn check_selected(
    g: &Graph,
    checks: &[Inequality],
    limits: &Limits,
) -> Result<BoundReport, LimitError> {
    let stats = compute_stats(g, limits)?;
    let g6 = write_graph6(g).unwrap_or_else(|_| format!("<n={}>", g.n()));
    Ok(report_for(g6, g, &stats, checks))
}

/// Graph families the corpus generator and the tightness search share.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Complete,
    Cycle,
    Path,
    Petersen,
    Gnp,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n_min: usize,
    pub n_max: usize,
    /// G(n, p) samples drawn per vertex count; ignored by the fixed families.
    pub samples_per_n: usize,
    /// Edge probability for G(n, p); ignored by the fixed families.
    pub p: f64,
    /// Base seed; sample i of the expansion uses `seed + i`.
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum CorpusSource {
    /// A graph6 file, one graph per line.
    File(PathBuf),
    Family(FamilySpec),
    /// All graphs (up to isomorphism) on 1..=n_max vertices.
    Exhaustive { n_max: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusSpec {
    pub source: CorpusSource,
    pub connected_only: bool,
    pub eta_min: Option<usize>,
    pub eta_max: Option<usize>,
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error(transparent)]
    Parse(#[from] Graph6LineError),
    #[error("invalid corpus: {0}")]
    InvalidCorpus(String),
    #[error(transparent)]
    Limit(#[from] LimitError),
    #[error("worker pool: {0}")]
    Jobs(String),
}

/// Per-inequality aggregation over a corpus run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub inequality: String,
    pub applicable: usize,
    pub pass: usize,
    pub fail: usize,
    pub min_slack: Option<i64>,
    /// First corpus graph attaining `min_slack` among applicable records.
    pub argmin_g6: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub total: usize,
    pub checked: usize,
    pub skipped_limit: usize,
    pub filtered: usize,
    pub checks: Vec<CheckSummary>,
    /// An applicable record failed. The inequalities are theorems, so this
    /// means the exact solvers disagree with mathematics: a bug.
    pub solver_bug: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusRun {
    pub reports: Vec<BoundReport>,
    pub summary: CorpusSummary,
}

/// Expands a corpus source to `(graph6 id, graph)` pairs. Deterministic:
/// file order, family order (ascending n, then sample index), or canonical
/// enumeration order.
pub fn expand_corpus(source: &CorpusSource) -> Result<Vec<(String, Graph)>, VerifyError> {
    match source {
        CorpusSource::File(path) => {
            let content = std::fs::read_to_string(path).map_err(|source| VerifyError::Io {
                path: path.clone(),
                source,
            })?;
            Ok(parse_graph6_lines(&content)?)
        }
        CorpusSource::Family(family) => expand_family(family),
        CorpusSource::Exhaustive { n_max } => {
            if !(1..=enumerate::MAX_ENUM_N).contains(n_max) {
                return Err(VerifyError::InvalidCorpus(format!(
                    "exhaustive enumeration supports 1..={}, got {n_max}",
                    enumerate::MAX_ENUM_N
                )));
            }
            let mut out = Vec::new();
            for n in 1..=*n_max {
                for code in enumerate::all_graph_codes(n) {
                    let g = enumerate::code_to_graph(n, code);
                    let g6 = write_graph6(&g).expect("enumerated graphs are small");
                    out.push((g6, g));
                }
            }
            Ok(out)
        }
    }
}

fn expand_family(family: &FamilySpec) -> Result<Vec<(String, Graph)>, VerifyError> {
    if family.n_min > family.n_max {
        return Err(VerifyError::InvalidCorpus(format!(
            "family range {}..={} is empty",
            family.n_min, family.n_max
        )));
    }
    if family.n_max > 62 {
        return Err(VerifyError::InvalidCorpus(
            "family graphs above 62 vertices have no graph6 id".to_string(),
        ));
    }
    let mut graphs = Vec::new();
    match family.kind {
        FamilyKind::Petersen => graphs.push(generate::petersen()),
        FamilyKind::Complete => {
            graphs.extend((family.n_min..=family.n_max).map(generate::complete));
        }
        FamilyKind::Path => {
            graphs.extend((family.n_min..=family.n_max).map(generate::path));
        }
        FamilyKind::Cycle => {
            for n in family.n_min..=family.n_max {
                graphs.push(
                    generate::cycle(n)
                        .map_err(|e| VerifyError::InvalidCorpus(e.to_string()))?,
                );
            }
        }
        FamilyKind::Gnp => {
            if family.samples_per_n == 0 {
                return Err(VerifyError::InvalidCorpus(
                    "gnp family needs samples_per_n >= 1".to_string(),
                ));
            }
            let mut counter = 0u64;
            for n in family.n_min..=family.n_max {
                for _ in 0..family.samples_per_n {
                    let g = generate::gnp(n, family.p, family.seed.wrapping_add(counter))
                        .map_err(|e| VerifyError::InvalidCorpus(e.to_string()))?;
                    counter += 1;
                    graphs.push(g);
                }
            }
        }
    }
    Ok(graphs
        .into_iter()
        .map(|g| {
            let g6 = write_graph6(&g).expect("n <= 62 enforced above");
            (g6, g)
        })
        .collect())
}

enum Outcome {
    Report(Box<BoundReport>),
    Filtered,
    SkippedLimit,
}

/// Runs the selected checks over a corpus. Graphs beyond the solver limits
/// are skipped and counted; results are merged in corpus order, so the
/// output is identical for any worker count.
pub fn corpus_run(
    spec: &CorpusSpec,
    checks: &[Inequality],
    limits: &Limits,
    jobs: usize,
) -> Result<CorpusRun, VerifyError> {
    let items = expand_corpus(&spec.source)?;
    let evaluate = |(g6, g): &(String, Graph)| -> Outcome {
        if spec.connected_only && !g.is_connected() {
            return Outcome::Filtered;
        }
        let stats = match compute_stats(g, limits) {
            Ok(stats) => stats,
            Err(LimitError { .. }) => return Outcome::SkippedLimit,
        };
        if spec.eta_min.is_some_and(|lo| stats.eta < lo)
            || spec.eta_max.is_some_and(|hi| stats.eta > hi)
        {
            return Outcome::Filtered;
        }
        Outcome::Report(Box::new(report_for(g6.clone(), g, &stats, checks)))
    };
    let outcomes: Vec<Outcome> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| VerifyError::Jobs(e.to_string()))?;
        pool.install(|| items.par_iter().map(evaluate).collect())
    } else {
        items.iter().map(evaluate).collect()
    };

    let mut reports = Vec::new();
    let mut skipped_limit = 0;
    let mut filtered = 0;
    for outcome in outcomes {
        match outcome {
            Outcome::Report(r) => reports.push(*r),
            Outcome::Filtered => filtered += 1,
            Outcome::SkippedLimit => skipped_limit += 1,
        }
    }
    let summary = summarize(&items.len(), skipped_limit, filtered, checks, &reports);
    Ok(CorpusRun { reports, summary })
}

fn summarize(
    total: &usize,
    skipped_limit: usize,
    filtered: usize,
    checks: &[Inequality],
    reports: &[BoundReport],
) -> CorpusSummary {
    let mut rows = Vec::with_capacity(checks.len());
    let mut solver_bug = false;
    for inequality in checks {
        let name = inequality.name();
        let mut row = CheckSummary {
            inequality: name.to_string(),
            applicable: 0,
            pass: 0,
            fail: 0,
            min_slack: None,
            argmin_g6: None,
        };
        for report in reports {
            let Some(check) = report.checks.iter().find(|c| c.name == name) else {
                continue;
            };
            if !check.applicable {
                continue;
            }
            row.applicable += 1;
            if check.pass {
                row.pass += 1;
            } else {
                row.fail += 1;
                solver_bug = true;
            }
            if row.min_slack.is_none_or(|m| check.slack < m) {
                row.min_slack = Some(check.slack);
                row.argmin_g6 = Some(report.g6.clone());
            }
        }
        rows.push(row);
    }
    CorpusSummary {
        total: *total,
        checked: reports.len(),
        skipped_limit,
        filtered,
        checks: rows,
        solver_bug,
    }
}

/// One report per line, as JSON.
pub fn write_reports_jsonl<W: io::Write>(mut w: W, reports: &[BoundReport]) -> io::Result<()> {
    for report in reports {
        serde_json::to_writer(&mut w, report)?;
        writeln!(w)?;
    }
    Ok(())
}

/// The summary as CSV. graph6 ids never contain commas or quotes (the
/// alphabet is bytes 63–126), so no escaping is needed.
pub fn summary_csv(summary: &CorpusSummary) -> String {
    let mut out = String::from("inequality,applicable_count,pass_count,min_slack,argmin_g6\n");
    for row in &summary.checks {
        let min_slack = row.min_slack.map(|s| s.to_string()).unwrap_or_default();
        let argmin = row.argmin_g6.clone().unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            row.inequality, row.applicable, row.pass, min_slack, argmin
        ));
    }
    out
}

/// A near-tight instance located by [`tightness_search`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHit {
    pub g6: String,
    pub slack: i64,
}

/// Random-restart local search for graphs where the strongest bound is
/// tight: walks the family's graphs by single-edge toggles, minimizing the
/// `t5` slack among graphs with η ≥ 5, spending exactly `budget` solver
/// evaluations. Deterministic for a fixed seed; returns the `top` best
/// distinct hits, best first.
pub fn tightness_search(
    family: &FamilySpec,
    budget: usize,
    seed: u64,
    top: usize,
    limits: &Limits,
) -> Result<Vec<SearchHit>, VerifyError> {
    const STEPS_PER_RESTART: usize = 48;
    /// Walk score for graphs outside the η ≥ 5 region: worse than any real
    /// slack, so the walk drifts until the region is reached.
    const OFF_TARGET: i64 = i64::MAX / 2;

    let starts = expand_corpus(&CorpusSource::Family(family.clone()))?;
    if starts.is_empty() {
        return Err(VerifyError::InvalidCorpus("family expands to no graphs".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: BTreeSet<(i64, String)> = BTreeSet::new();
    let mut evals = 0usize;

    let score = |g: &Graph,
                     best: &mut BTreeSet<(i64, String)>,
                     evals: &mut usize|
     -> Result<i64, VerifyError> {
        *evals += 1;
        let stats = compute_stats(g, limits)?;
        if stats.eta < 5 {
            return Ok(OFF_TARGET);
        }
        let check = Inequality::T5.evaluate(g.n(), stats.alpha, stats.omega, stats.eta);
        debug_assert!(check.applicable);
        if let Ok(g6) = write_graph6(g) {
            best.insert((check.slack, g6));
            while best.len() > top {
                let last = best.last().cloned().expect("nonempty");
                best.remove(&last);
            }
        }
        Ok(check.slack)
    };

    'search: for restart in 0.. {
        if evals >= budget {
            break;
        }
        let mut current = starts[restart % starts.len()].1.clone();
        let mut current_slack = score(&current, &mut best, &mut evals)?;
        for _ in 0..STEPS_PER_RESTART {
            if evals >= budget {
                break 'search;
            }
            let n = current.n();
            if n < 2 {
                break;
            }
            let (u, v) = loop {
                let u = rng.random_range(0..n);
                let v = rng.random_range(0..n);
                if u != v {
                    break (u.min(v), u.max(v));
                }
            };
            let mut candidate = current.clone();
            if candidate.has_edge(u, v) {
                candidate.remove_edge(u, v).expect("edge exists");
            } else {
                candidate.add_edge(u, v).expect("u != v, in range");
            }
            let candidate_slack = score(&candidate, &mut best, &mut evals)?;
            if candidate_slack <= current_slack {
                current = candidate;
                current_slack = candidate_slack;
            }
        }
    }

    Ok(best
        .into_iter()
        .map(|(slack, g6)| SearchHit { g6, slack })
        .collect())
}
