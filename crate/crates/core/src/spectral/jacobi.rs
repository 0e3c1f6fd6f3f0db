//! Cyclic Jacobi eigenvalue iteration for dense real symmetric matrices.

use super::SpectralError;

/// Relative off-diagonal threshold, scaled by the Frobenius norm.
pub const JACOBI_TOLERANCE: f64 = 1e-12;
pub const JACOBI_MAX_SWEEPS: usize = 64;

/// Eigenvalues (unsorted) of the symmetric row-major `n x n` matrix `a`.
///
/// Each sweep annihilates every off-diagonal pair once in row order. The
/// iteration stops once every off-diagonal entry is below
/// `JACOBI_TOLERANCE * ||A||_F`.
pub fn jacobi_eigenvalues(mut a: Vec<f64>, n: usize) -> Result<Vec<f64>, SpectralError> {
    assert_eq!(a.len(), n * n, "matrix must be n x n");
    let frob = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = JACOBI_TOLERANCE * frob;

    for _ in 0..JACOBI_MAX_SWEEPS {
        let off = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[p * n + q].abs())
            .fold(0.0, f64::max);
        if off <= threshold {
            return Ok((0..n).map(|i| a[i * n + i]).collect());
        }

        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_rp = c * arp - s * arq;
                    let new_rq = s * arp + c * arq;
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
            }
        }
    }
    Err(SpectralError::NoConvergence {
        sweeps: JACOBI_MAX_SWEEPS,
    })
}
