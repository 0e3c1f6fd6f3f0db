//! Per-graph bundle of every invariant the inequality checks consume, so a
//! corpus sweep solves each spectrum and clique problem once.

use serde::Serialize;

use crate::counting::{self, CliqueResult, CountingError, TriangleReport};
use crate::graph::Graph;
use crate::spectral::{self, Inertia, SpectralError, Spectrum};

/// Factor applied to the zero tolerance for the inertia sensitivity probe.
pub const INERTIA_PROBE_SCALE: f64 = 10.0;

#[derive(Debug, thiserror::Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Counting(#[from] CountingError),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalysisOptions {
    /// Multiplies the default zero tolerance.
    pub zero_tol_scale: f64,
    pub clique_budget: u64,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            zero_tol_scale: 1.0,
            clique_budget: counting::DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Analysis {
    #[serde(skip)]
    pub graph: Graph,
    pub spectrum: Spectrum,
    pub inertia: Inertia,
    /// Inertia with the zero tolerance widened by `INERTIA_PROBE_SCALE`.
    pub inertia_probe: Inertia,
    pub triangles: TriangleReport,
    pub clique: CliqueResult,
}

impl Analysis {
    pub fn new(graph: &Graph) -> Result<Self, AnalysisError> {
        Self::with_options(graph, AnalysisOptions::default())
    }

    pub fn with_options(graph: &Graph, opts: AnalysisOptions) -> Result<Self, AnalysisError> {
        let spectrum = spectral::eigenvalues(graph)?.with_zero_tol_scale(opts.zero_tol_scale);
        let inertia = spectrum.inertia();
        let inertia_probe = spectrum.inertia_at(spectrum.zero_tol() * INERTIA_PROBE_SCALE);
        let triangles = counting::triangle_report(graph, &spectrum)?;
        let clique = counting::clique_number_with_budget(graph, opts.clique_budget)?;
        Ok(Analysis {
            graph: graph.clone(),
            spectrum,
            inertia,
            inertia_probe,
            triangles,
            clique,
        })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }

    /// Exact triangle count (intersection method).
    pub fn t(&self) -> u64 {
        self.triangles.by_intersection
    }

    pub fn omega(&self) -> usize {
        self.clique.size
    }

    /// `ℓ = min(n⁺, ω)`.
    pub fn ell(&self) -> usize {
        self.inertia.n_plus.min(self.omega())
    }

    pub fn inertia_is_stable(&self) -> bool {
        self.inertia.n_plus == self.inertia_probe.n_plus
    }

    /// `λ_i`, or 0 beyond the end of the spectrum.
    pub fn lambda(&self, i: usize) -> f64 {
        self.spectrum.values().get(i - 1).copied().unwrap_or(0.0)
    }
}
