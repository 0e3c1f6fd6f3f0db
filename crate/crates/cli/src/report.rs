//! Serializable per-graph records and corpus summaries.

use serde::Serialize;
use sqsum_core::bounds::{slack_for, Check, Outcome, Verdict};
use sqsum_core::graph::encode_graph6;
use sqsum_core::Analysis;

/// Rounds to 12 significant digits, the precision of every float the CLI
/// writes.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    if !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("scientific notation parses")
}

pub fn format_float(x: f64) -> String {
    sig12(x).to_string()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InertiaRecord {
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TriangleRecord {
    pub intersection: u64,
    pub neighborhood: u64,
    pub trace: u64,
    pub trace_residual: f64,
}

/// Everything needed to reproduce the verdicts on one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub t: u64,
    pub omega: usize,
    pub omega_exact: bool,
    pub inertia: InertiaRecord,
    pub lambda1: f64,
    pub lambda2: f64,
    pub s1: f64,
    pub s2: f64,
    pub ell: usize,
    /// `Λ_ℓ`; absent for edgeless graphs.
    pub lambda_ell: Option<f64>,
    pub triangles: TriangleRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eigenvalues: Option<Vec<f64>>,
    pub verdicts: Vec<Verdict>,
}

impl GraphRecord {
    pub fn new(a: &Analysis, verdicts: Vec<Verdict>) -> Self {
        let s = &a.spectrum;
        let square_sum = |k: usize| {
            if k <= s.len() {
                s.square_sum(k).expect("k within spectrum")
            } else {
                0.0
            }
        };
        let lambda_ell = (a.m() > 0).then(|| {
            let ell = a.ell().max(1);
            s.lambda_ratio(ell, a.m()).expect("ℓ within spectrum")
        });
        GraphRecord {
            graph6: encode_graph6(&a.graph).expect("analysed graphs fit graph6"),
            n: a.n(),
            m: a.m(),
            t: a.t(),
            omega: a.omega(),
            omega_exact: a.clique.exact,
            inertia: InertiaRecord {
                n_plus: a.inertia.n_plus,
                n_zero: a.inertia.n_zero,
                n_minus: a.inertia.n_minus,
            },
            lambda1: sig12(a.lambda(1)),
            lambda2: sig12(a.lambda(2)),
            s1: sig12(square_sum(1)),
            s2: sig12(square_sum(2)),
            ell: a.ell(),
            lambda_ell: lambda_ell.map(sig12),
            triangles: TriangleRecord {
                intersection: a.triangles.by_intersection,
                neighborhood: a.triangles.by_neighborhood,
                trace: a.triangles.by_trace,
                trace_residual: sig12(a.triangles.trace_residual),
            },
            eigenvalues: None,
            verdicts: verdicts.into_iter().map(round_verdict).collect(),
        }
    }

    pub fn with_eigenvalues(mut self, a: &Analysis) -> Self {
        self.eigenvalues = Some(a.spectrum.values().iter().copied().map(sig12).collect());
        self
    }
}

fn round_verdict(mut v: Verdict) -> Verdict {
    v.lhs = v.lhs.map(sig12);
    v.rhs = v.rhs.map(sig12);
    v.margin = v.margin.map(sig12);
    v
}

/// One check collapsed to a single outcome per graph. Checks reported at
/// several `k` collapse to their worst `k`: any failure fails, and the
/// margin is the smallest applicable one.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckRow {
    pub check: Check,
    pub outcome: Outcome,
    /// Smallest margin, with anything within the verdict slack of zero
    /// snapped to exactly zero.
    pub margin: Option<f64>,
}

impl CheckRow {
    pub fn collapse(check: Check, verdicts: &[Verdict]) -> Self {
        let mine = || verdicts.iter().filter(|v| v.check == check);
        let outcome = if mine().any(Verdict::fails) {
            Outcome::Fails
        } else if mine().any(Verdict::holds) {
            Outcome::Holds
        } else {
            Outcome::NotApplicable
        };
        let margin = mine()
            .filter_map(|v| Some((v.margin?, slack_for(v.rhs?))))
            .map(|(margin, slack)| if margin.abs() <= slack { 0.0 } else { margin })
            .min_by(f64::total_cmp);
        CheckRow { check, outcome, margin }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckSummary {
    pub check: Check,
    pub holds: usize,
    pub fails: usize,
    pub not_applicable: usize,
    pub min_margin: Option<f64>,
    /// Graph attaining `min_margin`; ties go to the lexicographically
    /// smallest graph6 string.
    pub witness: Option<String>,
}

impl CheckSummary {
    pub fn new(check: Check) -> Self {
        CheckSummary {
            check,
            holds: 0,
            fails: 0,
            not_applicable: 0,
            min_margin: None,
            witness: None,
        }
    }

    pub fn total(&self) -> usize {
        self.holds + self.fails + self.not_applicable
    }

    pub fn add(&mut self, row: &CheckRow, graph6: &str) {
        match row.outcome {
            Outcome::Holds => self.holds += 1,
            Outcome::Fails => self.fails += 1,
            Outcome::NotApplicable => self.not_applicable += 1,
        }
        let Some(margin) = row.margin else { return };
        let better = match (&self.min_margin, &self.witness) {
            (Some(best), Some(w)) => (margin, graph6) < (*best, w.as_str()),
            _ => true,
        };
        if better {
            self.min_margin = Some(margin);
            self.witness = Some(graph6.to_string());
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusSummary {
    pub corpus: String,
    pub graphs: usize,
    pub checks: Vec<CheckSummary>,
    /// Full records of every graph with at least one failing check.
    pub violations: Vec<GraphRecord>,
    /// A failure of a proven inequality, which can only be a bug.
    pub proven_violation: bool,
}

impl CorpusSummary {
    pub fn has_violation(&self) -> bool {
        !self.violations.is_empty()
    }
}
