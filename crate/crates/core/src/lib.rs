//! Adjacency spectra, exact triangle and clique counts, and numeric checks
//! of inequalities on the square sums of the largest eigenvalues of a graph.
//!
//! The usual flow is [`graph`] → [`Analysis`] → a `check_*` function from
//! [`bounds`], which returns a [`bounds::Verdict`].

pub mod analysis;
pub mod bounds;
pub mod counting;
pub mod graph;
pub mod spectral;

pub use analysis::{Analysis, AnalysisError, AnalysisOptions};
pub use graph::{Graph, GraphError};
