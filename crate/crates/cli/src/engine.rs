//! Check evaluation, parallel corpus verification and random scans.

use rand::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;
use serde::Serialize;
use sqsum_core::bounds::{self, BoundsError, Check, FamilyParams, Outcome, Verdict, VerdictContext};
use sqsum_core::graph::{generate, GeneratorSpec};
use sqsum_core::{Analysis, AnalysisOptions};

use crate::corpus::Entry;
use crate::report::{sig12, CheckRow, CheckSummary, CorpusSummary, GraphRecord};
use crate::CliError;

/// Which checks to run and the parameters the family-level ones need.
#[derive(Debug, Clone)]
pub struct CheckConfig {
    pub checks: Vec<Check>,
    pub family: Option<FamilyParams>,
    /// Exponent for `thm14`.
    pub k: u32,
    pub options: AnalysisOptions,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            checks: Check::ALL.to_vec(),
            family: None,
            k: 1,
            options: AnalysisOptions::default(),
        }
    }
}

fn context(a: &Analysis) -> VerdictContext {
    VerdictContext {
        m: a.m(),
        t: a.t(),
        omega: Some(a.omega()),
        ..Default::default()
    }
}

/// Turns a precondition error into a not-applicable verdict; anything else
/// is an operational failure.
fn or_not_applicable(check: Check, a: &Analysis, r: Result<Verdict, BoundsError>) -> Result<Verdict, CliError> {
    match r {
        Ok(v) => Ok(v),
        Err(e @ (BoundsError::NoEdges | BoundsError::CompleteGraph | BoundsError::TooFewEdges(_))) => {
            Ok(Verdict::not_applicable(check, e.to_string(), context(a)))
        }
        Err(e) => Err(CliError::Operational(format!("{check}: {e}"))),
    }
}

pub fn evaluate(a: &Analysis, cfg: &CheckConfig) -> Result<Vec<Verdict>, CliError> {
    let no_family = |check| Verdict::not_applicable(check, "no family parameters (--family or --c/--eps)", context(a));
    let mut out = Vec::new();
    for &check in &cfg.checks {
        match check {
            Check::T11 => out.push(or_not_applicable(check, a, bounds::check_theorem_1_1(a))?),
            Check::Bn => out.push(or_not_applicable(check, a, bounds::check_conjecture_bn(a))?),
            Check::General => out.push(or_not_applicable(check, a, bounds::check_conjecture_general(a))?),
            Check::Lemma22 => match bounds::check_lemma22(a) {
                Ok(vs) => out.extend(vs),
                Err(e) => out.push(or_not_applicable(check, a, Err(e))?),
            },
            Check::Thm14 => out.push(match &cfg.family {
                Some(fp) => or_not_applicable(check, a, bounds::check_theorem14(a, fp, cfg.k))?,
                None => no_family(check),
            }),
            Check::Thm31 => out.push(or_not_applicable(check, a, bounds::check_theorem31(a))?),
            Check::Thm16 => out.push(match &cfg.family {
                Some(fp) => or_not_applicable(check, a, bounds::check_theorem16(a, fp))?,
                None => no_family(check),
            }),
        }
    }
    Ok(out)
}

/// Analysis, verdicts and per-check rows for one graph.
#[derive(Debug, Clone)]
pub struct GraphResult {
    pub record: GraphRecord,
    pub rows: Vec<CheckRow>,
}

impl GraphResult {
    pub fn failed(&self) -> bool {
        self.rows.iter().any(|r| r.outcome == Outcome::Fails)
    }
}

pub fn run_graph(entry: &Entry, cfg: &CheckConfig) -> Result<GraphResult, CliError> {
    analyze_and_check(entry, cfg).map(|(_, r)| r)
}

pub fn analyze_and_check(entry: &Entry, cfg: &CheckConfig) -> Result<(Analysis, GraphResult), CliError> {
    let a = Analysis::with_options(&entry.graph, cfg.options)
        .map_err(|e| CliError::Operational(format!("{}: {e}", entry.graph6)))?;
    let verdicts = evaluate(&a, cfg)?;
    let rows = cfg.checks.iter().map(|&c| CheckRow::collapse(c, &verdicts)).collect();
    let result = GraphResult {
        record: GraphRecord::new(&a, verdicts),
        rows,
    };
    Ok((a, result))
}

/// Maps `f` over `items` on `workers` threads, keeping input order.
pub fn par_map<T: Sync, R: Send>(
    items: &[T],
    workers: usize,
    f: impl Fn(&T) -> R + Sync + Send,
) -> Result<Vec<R>, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| CliError::Operational(format!("worker pool: {e}")))?;
    Ok(pool.install(|| items.par_iter().map(f).collect()))
}

/// Per-graph results in corpus order plus the merged summary.
pub struct Verification {
    pub results: Vec<GraphResult>,
    pub summary: CorpusSummary,
}

pub fn verify(
    corpus_name: &str,
    entries: &[Entry],
    cfg: &CheckConfig,
    workers: usize,
) -> Result<Verification, CliError> {
    let results = par_map(entries, workers, |e| run_graph(e, cfg))?
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;

    let mut checks: Vec<CheckSummary> = cfg.checks.iter().map(|&c| CheckSummary::new(c)).collect();
    let mut violations = Vec::new();
    let mut proven_violation = false;
    for r in &results {
        for (summary, row) in checks.iter_mut().zip(&r.rows) {
            summary.add(row, &r.record.graph6);
            proven_violation |= row.outcome == Outcome::Fails && row.check.is_proven();
        }
        if r.failed() {
            violations.push(r.record.clone());
        }
    }
    for s in &mut checks {
        s.min_margin = s.min_margin.map(sig12);
    }
    let summary = CorpusSummary {
        corpus: corpus_name.to_string(),
        graphs: entries.len(),
        checks,
        violations,
        proven_violation,
    };
    Ok(Verification { results, summary })
}

pub const CSV_HEADER: [&str; 12] = [
    "graph6", "n", "m", "t", "omega", "nplus", "lambda1", "lambda2", "Lell", "check", "holds", "margin",
];

/// One row per graph and check, in corpus order. `holds` is `true`,
/// `false` or `na`.
pub fn write_csv(results: &[GraphResult], out: &mut dyn std::io::Write) -> Result<(), CliError> {
    let io = |e: csv::Error| CliError::Operational(format!("writing CSV: {e}"));
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER).map_err(io)?;
    let float = |x: Option<f64>| x.map(|v| sig12(v).to_string()).unwrap_or_default();
    for r in results {
        let rec = &r.record;
        for row in &r.rows {
            let holds = match row.outcome {
                Outcome::Holds => "true",
                Outcome::Fails => "false",
                Outcome::NotApplicable => "na",
            };
            w.write_record([
                rec.graph6.clone(),
                rec.n.to_string(),
                rec.m.to_string(),
                rec.t.to_string(),
                rec.omega.to_string(),
                rec.inertia.n_plus.to_string(),
                float(Some(rec.lambda1)),
                float(Some(rec.lambda2)),
                float(rec.lambda_ell),
                row.check.to_string(),
                holds.to_string(),
                float(row.margin),
            ])
            .map_err(io)?;
        }
    }
    w.flush()
        .map_err(|e| CliError::Operational(format!("writing CSV: {e}")))
}

/// Edge probabilities cycled through by `scan`.
pub const SCAN_P_GRID: [f64; 19] = [
    0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5, 0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95,
];

pub const SCAN_TOP: usize = 10;

#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub n: usize,
    pub budget: u64,
    pub seed: u64,
    pub objective: Check,
    pub checks: CheckConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanHit {
    pub graph6: String,
    pub m: usize,
    pub t: u64,
    pub omega: usize,
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanReport {
    pub n: usize,
    pub budget: u64,
    pub seed: u64,
    pub objective: Check,
    /// Distinct labeled graphs among the samples.
    pub distinct: usize,
    pub applicable: usize,
    /// Tightest nonnegative margins, smallest first.
    pub top: Vec<ScanHit>,
    /// Full records of graphs whose margin is below `-slack`.
    pub violations: Vec<GraphRecord>,
}

/// The `i`-th sample of a scan.
pub fn scan_spec(n: usize, seeds: &[u64], i: usize) -> GeneratorSpec {
    GeneratorSpec::Gnp {
        n,
        p: SCAN_P_GRID[i % SCAN_P_GRID.len()],
        seed: seeds[i],
    }
}

/// Samples `budget` gnp graphs across `SCAN_P_GRID` and ranks the tightest
/// margins of the objective. Margins within slack count as zero, so only a
/// margin below `-slack` is reported as a violation.
pub fn scan(cfg: &ScanConfig, workers: usize) -> Result<ScanReport, CliError> {
    if cfg.n == 0 || cfg.n > 64 {
        return Err(CliError::Usage(format!("scan needs 1 <= n <= 64, got {}", cfg.n)));
    }
    if cfg.budget == 0 {
        return Err(CliError::Usage("scan needs budget >= 1".into()));
    }
    let mut rng = SplitMix64::seed_from_u64(cfg.seed);
    let seeds: Vec<u64> = (0..cfg.budget).map(|_| rng.next_u64()).collect();

    let mut entries: Vec<Entry> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for i in 0..seeds.len() {
        let g = generate(&scan_spec(cfg.n, &seeds, i)).map_err(|e| CliError::Operational(e.to_string()))?;
        let entry = Entry::new(g)?;
        if seen.insert(entry.graph6.clone()) {
            entries.push(entry);
        }
    }

    let checks = CheckConfig {
        checks: vec![cfg.objective],
        ..cfg.checks.clone()
    };
    let results = par_map(&entries, workers, |e| run_graph(e, &checks))?
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;

    let mut hits = Vec::new();
    let mut violations = Vec::new();
    let mut applicable = 0;
    for r in &results {
        let row = &r.rows[0];
        let Some(margin) = row.margin else { continue };
        applicable += 1;
        if margin < 0.0 {
            violations.push(r.record.clone());
            continue;
        }
        hits.push(ScanHit {
            graph6: r.record.graph6.clone(),
            m: r.record.m,
            t: r.record.t,
            omega: r.record.omega,
            margin: sig12(margin),
        });
    }
    hits.sort_by(|a, b| a.margin.total_cmp(&b.margin).then_with(|| a.graph6.cmp(&b.graph6)));
    hits.truncate(SCAN_TOP);

    Ok(ScanReport {
        n: cfg.n,
        budget: cfg.budget,
        seed: cfg.seed,
        objective: cfg.objective,
        distinct: entries.len(),
        applicable,
        top: hits,
        violations,
    })
}
