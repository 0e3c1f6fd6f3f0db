//! Adjacency spectra and the eigenvalue statistics derived from them.

mod jacobi;
mod norms;

pub use jacobi::{jacobi_eigenvalues, JACOBI_MAX_SWEEPS, JACOBI_TOLERANCE};
pub use norms::{is_weakly_majorized, p_norm, MAJORIZATION_SLACK};

use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

/// Graphs up to this order are solved with Jacobi rotations; larger ones
/// use Householder tridiagonalization with implicit QR.
pub const JACOBI_MAX_ORDER: usize = 64;

/// Relative factor in `zero_tol = n * ZERO_TOL_FACTOR * max(1, λ_1)`.
pub const ZERO_TOL_FACTOR: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("graph has no vertices")]
    NoVertices,
    #[error("prefix length {k} outside 1..={n}")]
    PrefixOutOfRange { k: usize, n: usize },
    #[error("ratio undefined for a graph without edges")]
    NoEdges,
    #[error("p-norm needs p >= 1, got {0}")]
    InvalidNorm(f64),
}

/// Eigenvalues sorted non-increasing, plus the tolerance used to call an
/// eigenvalue zero.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    values: Vec<f64>,
    zero_tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
}

impl Inertia {
    pub fn total(&self) -> usize {
        self.n_plus + self.n_zero + self.n_minus
    }
}

/// Spectrum of the adjacency matrix of `g`.
pub fn eigenvalues(g: &Graph) -> Result<Spectrum, SpectralError> {
    let n = g.n();
    if n == 0 {
        return Err(SpectralError::NoVertices);
    }
    let values = if n <= JACOBI_MAX_ORDER {
        jacobi_eigenvalues(g.adjacency_matrix(), n)?
    } else {
        tridiagonal_qr_eigenvalues(g.adjacency_matrix(), n)?
    };
    Ok(Spectrum::from_values(values))
}

/// Eigenvalues via nalgebra's symmetric tridiagonal QR.
pub fn tridiagonal_qr_eigenvalues(a: Vec<f64>, n: usize) -> Result<Vec<f64>, SpectralError> {
    let matrix = DMatrix::from_row_slice(n, n, &a);
    SymmetricEigen::try_new(matrix, f64::EPSILON, 0)
        .map(|eig| eig.eigenvalues.iter().copied().collect())
        .ok_or(SpectralError::NoConvergence { sweeps: 0 })
}

impl Spectrum {
    /// Sorts `values` and derives the default zero tolerance.
    pub fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        let largest = values.first().copied().unwrap_or(0.0);
        let zero_tol = values.len() as f64 * ZERO_TOL_FACTOR * largest.max(1.0);
        Spectrum { values, zero_tol }
    }

    /// Same eigenvalues with the zero tolerance multiplied by `scale`.
    pub fn with_zero_tol_scale(mut self, scale: f64) -> Self {
        self.zero_tol *= scale;
        self
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn zero_tol(&self) -> f64 {
        self.zero_tol
    }

    /// `λ_i` with 1-based `i`.
    pub fn lambda(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    pub fn inertia(&self) -> Inertia {
        self.inertia_at(self.zero_tol)
    }

    pub fn inertia_at(&self, tol: f64) -> Inertia {
        let n_plus = self.values.iter().filter(|&&x| x > tol).count();
        let n_minus = self.values.iter().filter(|&&x| x < -tol).count();
        Inertia {
            n_plus,
            n_zero: self.values.len() - n_plus - n_minus,
            n_minus,
        }
    }

    /// `s_k`: sum of squares of the `k` largest eigenvalues.
    pub fn square_sum(&self, k: usize) -> Result<f64, SpectralError> {
        self.check_prefix(k)?;
        Ok(self.values[..k].iter().map(|x| x * x).sum())
    }

    /// `Λ_k = s_k / m`.
    pub fn lambda_ratio(&self, k: usize, m: usize) -> Result<f64, SpectralError> {
        if m == 0 {
            return Err(SpectralError::NoEdges);
        }
        Ok(self.square_sum(k)? / m as f64)
    }

    /// Signed power sum `Σ λ_i^p`.
    pub fn power_sum(&self, p: u32) -> f64 {
        self.values.iter().map(|x| x.powi(p as i32)).sum()
    }

    fn check_prefix(&self, k: usize) -> Result<(), SpectralError> {
        if k == 0 || k > self.values.len() {
            return Err(SpectralError::PrefixOutOfRange {
                k,
                n: self.values.len(),
            });
        }
        Ok(())
    }
}
