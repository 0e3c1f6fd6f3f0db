use std::fmt;
use std::str::FromStr;

use serde::Serialize;

/// Relative slack for every inequality comparison.
pub const VERDICT_SLACK: f64 = 1e-9;

pub fn slack_for(rhs: f64) -> f64 {
    VERDICT_SLACK * rhs.abs().max(1.0)
}

/// The inequality checks a corpus can be verified against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    /// `Λ_1 <= 2(1 - 1/ω)`.
    T11,
    /// `Λ_2 <= 2(1 - 1/ω)` for non-complete graphs.
    Bn,
    /// `Λ_ℓ <= 2(1 - 1/ω)` with `ℓ = min(n⁺, ω)`.
    General,
    /// `6t >= s_k^{3/2}/√k − (2m − s_k)^{3/2}` for every `k <= n⁺`.
    Lemma22,
    /// `Λ_ℓ < 2(ω^{1/3}/(1+ω^{1/3}) + ω^{-k})` above the edge threshold.
    Thm14,
    /// `λ_1² + λ_2² <= m + (3t)^{2/3}`, strict when `t > 0`.
    Thm31,
    /// `Λ_2 <= 1 + (3c)^{2/3} m^{-2ε/3}` inside the triangle budget.
    Thm16,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::T11,
        Check::Bn,
        Check::General,
        Check::Lemma22,
        Check::Thm14,
        Check::Thm31,
        Check::Thm16,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::T11 => "t11",
            Check::Bn => "bn",
            Check::General => "general",
            Check::Lemma22 => "lemma22",
            Check::Thm14 => "thm14",
            Check::Thm31 => "thm31",
            Check::Thm16 => "thm16",
        }
    }

    /// Whether a failure means the implementation is wrong rather than a
    /// conjecture being refuted.
    pub fn is_proven(self) -> bool {
        !matches!(self, Check::Bn | Check::General)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Check::ALL.into_iter().find(|c| c.name() == s.trim()).ok_or_else(|| {
            format!("unknown check {s:?} (expected one of t11, bn, general, lemma22, thm14, thm31, thm16)")
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Holds,
    Fails,
    NotApplicable,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Holds => "holds",
            Outcome::Fails => "fails",
            Outcome::NotApplicable => "not_applicable",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct VerdictContext {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub m: usize,
    pub t: u64,
}

/// Outcome of one inequality `lhs <= rhs` (or `lhs < rhs` when strict).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub check: Check,
    pub outcome: Outcome,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    /// `rhs - lhs`.
    pub margin: Option<f64>,
    pub strict: bool,
    pub context: VerdictContext,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl Verdict {
    /// Evaluates `lhs <= rhs` within `slack_for(rhs)`; when `strict`, the
    /// margin must exceed the slack instead.
    pub fn compare(check: Check, lhs: f64, rhs: f64, strict: bool, context: VerdictContext) -> Self {
        let margin = rhs - lhs;
        let slack = slack_for(rhs);
        let ok = if strict { margin > slack } else { margin >= -slack };
        Verdict {
            check,
            outcome: if ok { Outcome::Holds } else { Outcome::Fails },
            lhs: Some(lhs),
            rhs: Some(rhs),
            margin: Some(margin),
            strict,
            context,
            warnings: Vec::new(),
            reason: None,
        }
    }

    pub fn not_applicable(check: Check, reason: impl Into<String>, context: VerdictContext) -> Self {
        Verdict {
            check,
            outcome: Outcome::NotApplicable,
            lhs: None,
            rhs: None,
            margin: None,
            strict: false,
            context,
            warnings: Vec::new(),
            reason: Some(reason.into()),
        }
    }

    pub fn with_warning(mut self, warning: impl Into<String>) -> Self {
        self.warnings.push(warning.into());
        self
    }

    pub fn holds(&self) -> bool {
        self.outcome == Outcome::Holds
    }

    pub fn fails(&self) -> bool {
        self.outcome == Outcome::Fails
    }

    pub fn is_applicable(&self) -> bool {
        self.outcome != Outcome::NotApplicable
    }
}
