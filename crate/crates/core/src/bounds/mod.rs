//! Bound functions, edge thresholds and inequality predicates on the
//! square sums `s_k` of the largest adjacency eigenvalues.
//!
//! Every `check_*` function returns a [`Verdict`]. Graphs outside a
//! statement's hypotheses (edgeless, complete, too few edges) are errors;
//! family hypotheses that a concrete graph may or may not meet (triangle
//! budget, edge threshold, `ω >= 3`) yield a not-applicable verdict.

mod corollary;
mod verdict;

pub use corollary::{corollary_class, CorollaryClass, CorollaryTag};
pub use verdict::{slack_for, Check, Outcome, Verdict, VerdictContext, VERDICT_SLACK};

use serde::Serialize;
use thiserror::Error;

use crate::analysis::{Analysis, INERTIA_PROBE_SCALE};
use crate::counting::triangles_within_budget;

/// Rounded-up constant in the edge threshold `(2.2 c ω^{2k})^{1/ε}` of the
/// improved square-sum bound.
pub const EDGE_THRESHOLD_FACTOR: f64 = 2.2;

/// Rounded-up constant in the conjecture edge threshold `(10.06 c √ω)^{1/ε}`.
pub const CONJECTURE_THRESHOLD_FACTOR: f64 = 10.06;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error("clique number must be at least {min}, got {got}")]
    CliqueTooSmall { min: usize, got: usize },
    #[error("graph has no edges")]
    NoEdges,
    #[error("statement excludes complete graphs")]
    CompleteGraph,
    #[error("statement needs m >= 2, got {0}")]
    TooFewEdges(usize),
    #[error("square sum {s_k} exceeds 2m = {two_m}")]
    SquareSumTooLarge { s_k: f64, two_m: f64 },
    #[error("exponent k must be at least 1")]
    InvalidExponent,
    #[error("family parameters need 0 < ε <= 1.5 and c > 0, got ε = {epsilon}, c = {c}")]
    InvalidFamily { epsilon: f64, c: f64 },
    #[error("{0}")]
    InvalidClass(String),
}

/// `(ε, c)` describing the family of graphs with `t(G) <= c m^{1.5-ε}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FamilyParams {
    pub epsilon: f64,
    pub c: f64,
}

impl FamilyParams {
    pub fn new(epsilon: f64, c: f64) -> Result<Self, BoundsError> {
        if !(epsilon > 0.0 && epsilon <= 1.5 && c > 0.0 && c.is_finite()) {
            return Err(BoundsError::InvalidFamily { epsilon, c });
        }
        Ok(FamilyParams { epsilon, c })
    }

    /// Largest triangle count allowed at `m` edges.
    pub fn triangle_budget(&self, m: usize) -> f64 {
        self.c * (m as f64).powf(1.5 - self.epsilon)
    }
}

/// `2(1 - 1/ω)`.
pub fn turan_bound(omega: usize) -> Result<f64, BoundsError> {
    if omega < 2 {
        return Err(BoundsError::CliqueTooSmall { min: 2, got: omega });
    }
    Ok(2.0 * (1.0 - 1.0 / omega as f64))
}

/// `s_k^{3/2} / √k − (2m − s_k)^{3/2}`, a lower bound on `6t`.
///
/// `s_k` may exceed `2m` by rounding; anything beyond the verdict slack is
/// rejected.
pub fn lemma22_lower_bound(s_k: f64, m: usize, k: usize) -> Result<f64, BoundsError> {
    if k == 0 {
        return Err(BoundsError::InvalidExponent);
    }
    let two_m = 2.0 * m as f64;
    if s_k > two_m + slack_for(two_m) || s_k < 0.0 {
        return Err(BoundsError::SquareSumTooLarge { s_k, two_m });
    }
    let rest = (two_m - s_k).max(0.0);
    Ok(s_k.powf(1.5) / (k as f64).sqrt() - rest.powf(1.5))
}

/// `2(ω^{1/3} / (1 + ω^{1/3}) + ω^{-k})`.
pub fn thm14_bound(omega: usize, k: u32) -> Result<f64, BoundsError> {
    if omega < 3 {
        return Err(BoundsError::CliqueTooSmall { min: 3, got: omega });
    }
    if k == 0 {
        return Err(BoundsError::InvalidExponent);
    }
    let w = omega as f64;
    let cbrt = w.cbrt();
    Ok(2.0 * (cbrt / (1.0 + cbrt) + w.powi(-(k as i32))))
}

/// `(2.2 c ω^{2k})^{1/ε}`.
pub fn thm14_threshold(fp: &FamilyParams, omega: usize, k: u32) -> f64 {
    (EDGE_THRESHOLD_FACTOR * fp.c * (omega as f64).powi(2 * k as i32)).powf(1.0 / fp.epsilon)
}

/// `(10.06 c √ω)^{1/ε}`: edge count beyond which the generalized
/// conjecture holds throughout the family.
pub fn remark24_threshold(fp: &FamilyParams, omega: usize) -> Result<f64, BoundsError> {
    if omega < 3 {
        return Err(BoundsError::CliqueTooSmall { min: 3, got: omega });
    }
    Ok((CONJECTURE_THRESHOLD_FACTOR * fp.c * (omega as f64).sqrt()).powf(1.0 / fp.epsilon))
}

/// `6 / 2^{3/2}`, the exact constant that `EDGE_THRESHOLD_FACTOR` rounds up.
pub fn edge_threshold_factor_exact() -> f64 {
    6.0 / 2f64.powf(1.5)
}

/// `6 / (2^{3/2} (2√2 − √3) / (3√3))`, the exact constant that
/// `CONJECTURE_THRESHOLD_FACTOR` rounds up.
pub fn conjecture_threshold_factor_exact() -> f64 {
    let gap = (2.0 * 2f64.sqrt() - 3f64.sqrt()) / (3.0 * 3f64.sqrt());
    6.0 / (2f64.powf(1.5) * gap)
}

/// `m + (3t)^{2/3}`.
pub fn thm31_bound(m: usize, t: u64) -> Result<f64, BoundsError> {
    if m < 2 {
        return Err(BoundsError::TooFewEdges(m));
    }
    Ok(m as f64 + (3.0 * t as f64).powf(2.0 / 3.0))
}

/// `1 + (3c)^{2/3} m^{-2ε/3}`: the triangle-count bound on `Λ_2` with the
/// family budget substituted for `t`.
pub fn thm16_bound(m: usize, fp: &FamilyParams) -> Result<f64, BoundsError> {
    if m < 2 {
        return Err(BoundsError::TooFewEdges(m));
    }
    Ok(1.0 + (3.0 * fp.c).powf(2.0 / 3.0) * (m as f64).powf(-2.0 * fp.epsilon / 3.0))
}

fn context(a: &Analysis) -> VerdictContext {
    VerdictContext {
        m: a.m(),
        t: a.t(),
        omega: Some(a.omega()),
        ..Default::default()
    }
}

fn clique_warning(a: &Analysis) -> Option<String> {
    (!a.clique.exact).then(|| format!("ω is a lower bound ({}): clique search hit its node budget", a.omega()))
}

fn require_edges(a: &Analysis) -> Result<(), BoundsError> {
    if a.m() == 0 {
        Err(BoundsError::NoEdges)
    } else {
        Ok(())
    }
}

fn lambda_ratio(a: &Analysis, k: usize) -> f64 {
    a.spectrum
        .lambda_ratio(k, a.m())
        .expect("prefix within spectrum and m >= 1")
}

/// `Λ_1 <= 2(1 - 1/ω)`.
///
/// With an inexact ω the right-hand side underestimates the true one: a
/// pass still stands (with a warning), a failure is inconclusive and is
/// reported as not applicable.
pub fn check_theorem_1_1(a: &Analysis) -> Result<Verdict, BoundsError> {
    require_edges(a)?;
    let mut ctx = context(a);
    ctx.k = Some(1);
    let v = Verdict::compare(
        Check::T11,
        lambda_ratio(a, 1),
        turan_bound(a.omega())?,
        false,
        ctx.clone(),
    );
    Ok(match clique_warning(a) {
        Some(w) if v.holds() => v.with_warning(w),
        Some(w) => Verdict::not_applicable(Check::T11, w, ctx),
        None => v,
    })
}

/// `Λ_2 <= 2(1 - 1/ω)` for graphs other than `K_n`.
pub fn check_conjecture_bn(a: &Analysis) -> Result<Verdict, BoundsError> {
    require_edges(a)?;
    if a.graph.is_complete() {
        return Err(BoundsError::CompleteGraph);
    }
    let mut ctx = context(a);
    ctx.k = Some(2);
    if let Some(w) = clique_warning(a) {
        return Ok(Verdict::not_applicable(Check::Bn, w, ctx));
    }
    Ok(Verdict::compare(
        Check::Bn,
        lambda_ratio(a, 2),
        turan_bound(a.omega())?,
        false,
        ctx,
    ))
}

/// `Λ_ℓ <= 2(1 - 1/ω)` with `ℓ = min(n⁺, ω)`.
///
/// When `n⁺` differs under a widened zero tolerance the verdict warns and
/// reports the alternative `ℓ` and `Λ_ℓ`.
pub fn check_conjecture_general(a: &Analysis) -> Result<Verdict, BoundsError> {
    require_edges(a)?;
    let ell = a.ell();
    let mut ctx = context(a);
    ctx.ell = Some(ell);
    ctx.k = Some(ell);
    if let Some(w) = clique_warning(a) {
        return Ok(Verdict::not_applicable(Check::General, w, ctx));
    }
    let v = Verdict::compare(
        Check::General,
        lambda_ratio(a, ell),
        turan_bound(a.omega())?,
        false,
        ctx,
    );
    Ok(with_inertia_warning(a, v))
}

fn with_inertia_warning(a: &Analysis, v: Verdict) -> Verdict {
    if a.inertia_is_stable() {
        return v;
    }
    let alt_ell = a.inertia_probe.n_plus.min(a.omega()).max(1);
    let alt = lambda_ratio(a, alt_ell);
    v.with_warning(format!(
        "n+ is {} at zero_tol but {} at {}x zero_tol; alternative ell = {}, Lambda_ell = {:.12}",
        a.inertia.n_plus, a.inertia_probe.n_plus, INERTIA_PROBE_SCALE, alt_ell, alt
    ))
}

/// `6t >= lemma22_lower_bound(s_k, m, k)` for every `1 <= k <= n⁺`.
pub fn check_lemma22(a: &Analysis) -> Result<Vec<Verdict>, BoundsError> {
    require_edges(a)?;
    let six_t = 6.0 * a.t() as f64;
    (1..=a.inertia.n_plus)
        .map(|k| {
            let s_k = a.spectrum.square_sum(k).expect("k within spectrum");
            let mut ctx = context(a);
            ctx.k = Some(k);
            Ok(Verdict::compare(
                Check::Lemma22,
                lemma22_lower_bound(s_k, a.m(), k)?,
                six_t,
                false,
                ctx,
            ))
        })
        .collect()
}

/// `Λ_ℓ < thm14_bound(ω, k)` for graphs with `ω >= 3` inside the family's
/// triangle budget and at or above the edge threshold.
pub fn check_theorem14(a: &Analysis, fp: &FamilyParams, k: u32) -> Result<Verdict, BoundsError> {
    if k == 0 {
        return Err(BoundsError::InvalidExponent);
    }
    let ell = a.ell();
    let mut ctx = context(a);
    ctx.ell = Some(ell);
    ctx.k = Some(k as usize);
    let omega = a.omega();
    if let Some(w) = clique_warning(a) {
        return Ok(Verdict::not_applicable(Check::Thm14, w, ctx));
    }
    if omega < 3 {
        return Ok(Verdict::not_applicable(Check::Thm14, format!("ω = {omega} < 3"), ctx));
    }
    if !triangles_within_budget(a.t(), a.m(), fp) {
        return Ok(Verdict::not_applicable(
            Check::Thm14,
            format!("t = {} exceeds budget {:.6}", a.t(), fp.triangle_budget(a.m())),
            ctx,
        ));
    }
    let threshold = thm14_threshold(fp, omega, k);
    if (a.m() as f64) < threshold {
        return Ok(Verdict::not_applicable(
            Check::Thm14,
            format!("m = {} below edge threshold {:.6}", a.m(), threshold),
            ctx,
        ));
    }
    let v = Verdict::compare(Check::Thm14, lambda_ratio(a, ell), thm14_bound(omega, k)?, true, ctx);
    Ok(with_inertia_warning(a, v))
}

/// `λ_1² + λ_2² <= m + (3t)^{2/3}`, required strict when `t > 0`.
pub fn check_theorem31(a: &Analysis) -> Result<Verdict, BoundsError> {
    let rhs = thm31_bound(a.m(), a.t())?;
    let lhs = a.lambda(1).powi(2) + a.lambda(2).powi(2);
    let mut ctx = context(a);
    ctx.k = Some(2);
    Ok(Verdict::compare(Check::Thm31, lhs, rhs, a.t() > 0, ctx))
}

/// `Λ_2 <= thm16_bound(m, fp)` for graphs inside the triangle budget.
pub fn check_theorem16(a: &Analysis, fp: &FamilyParams) -> Result<Verdict, BoundsError> {
    let rhs = thm16_bound(a.m(), fp)?;
    let mut ctx = context(a);
    ctx.k = Some(2);
    if !triangles_within_budget(a.t(), a.m(), fp) {
        return Ok(Verdict::not_applicable(
            Check::Thm16,
            format!("t = {} exceeds budget {:.6}", a.t(), fp.triangle_budget(a.m())),
            ctx,
        ));
    }
    Ok(Verdict::compare(Check::Thm16, lambda_ratio(a, 2), rhs, false, ctx))
}
