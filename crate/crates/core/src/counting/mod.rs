//! Exact triangle counts and clique numbers.
//!
//! Triangles are counted three independent ways so each can serve as an
//! oracle for the others: edge-wise neighborhood intersection (the value
//! used downstream), per-vertex induced neighborhood edges, and the cube
//! trace of the spectrum.

mod clique;

pub use clique::{clique_number, clique_number_with_budget, degeneracy_order, CliqueResult, DEFAULT_NODE_BUDGET};

use serde::Serialize;
use thiserror::Error;

use crate::bounds::FamilyParams;
use crate::graph::{iter_bits, Graph};
use crate::spectral::Spectrum;

/// Largest acceptable distance between `Σλ³/6` and the nearest integer.
pub const TRACE_RESIDUAL_LIMIT: f64 = 0.01;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CountingError {
    #[error("neighborhood edge sum {0} is not divisible by 6")]
    Inconsistent(u64),
    #[error("cube trace {value} is {residual} away from an integer triangle count")]
    TraceResidual { value: f64, residual: f64 },
    #[error("graph has no vertices")]
    NoVertices,
}

/// `Σ_{uv ∈ E} |N(u) ∩ N(v)| / 3`.
pub fn triangles_by_intersection(g: &Graph) -> u64 {
    let total: u64 = g.edges().map(|(u, v)| g.common_neighbors(u, v) as u64).sum();
    total / 3
}

/// `(1/3) Σ_v m(G[N(v)])`, counting the edges inside each neighborhood.
pub fn triangles_by_neighborhood(g: &Graph) -> Result<u64, CountingError> {
    let mut doubled = 0u64;
    for v in 0..g.n() {
        let nbhd = g.row(v);
        // each edge inside N(v) is seen from both of its endpoints
        for u in iter_bits(nbhd) {
            doubled += crate::graph::and_count(g.row(u), nbhd) as u64;
        }
    }
    if !doubled.is_multiple_of(6) {
        return Err(CountingError::Inconsistent(doubled));
    }
    Ok(doubled / 6)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TraceCount {
    pub count: u64,
    /// `|Σλ³/6 − count|` before rounding.
    pub residual: f64,
}

/// Rounds `Σλ³ / 6` to the nearest integer.
pub fn triangles_by_trace(s: &Spectrum) -> Result<TraceCount, CountingError> {
    let value = s.power_sum(3) / 6.0;
    let rounded = value.round().max(0.0);
    let residual = (value - rounded).abs();
    if residual > TRACE_RESIDUAL_LIMIT {
        return Err(CountingError::TraceResidual { value, residual });
    }
    Ok(TraceCount {
        count: rounded as u64,
        residual,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TriangleReport {
    pub by_intersection: u64,
    pub by_neighborhood: u64,
    pub by_trace: u64,
    pub trace_residual: f64,
    pub agree: bool,
}

pub fn triangle_report(g: &Graph, s: &Spectrum) -> Result<TriangleReport, CountingError> {
    let by_intersection = triangles_by_intersection(g);
    let by_neighborhood = triangles_by_neighborhood(g)?;
    let trace = triangles_by_trace(s)?;
    Ok(TriangleReport {
        by_intersection,
        by_neighborhood,
        by_trace: trace.count,
        trace_residual: trace.residual,
        agree: by_intersection == by_neighborhood && by_neighborhood == trace.count,
    })
}

/// Whether `t(G) <= c * m^(1.5 - ε)`.
pub fn triangle_budget_ok(g: &Graph, fp: &FamilyParams) -> bool {
    triangles_within_budget(triangles_by_intersection(g), g.m(), fp)
}

pub(crate) fn triangles_within_budget(t: u64, m: usize, fp: &FamilyParams) -> bool {
    t as f64 <= fp.triangle_budget(m)
}
