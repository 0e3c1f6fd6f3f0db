use super::SpectralError;

/// Absolute slack on each prefix-sum comparison in `is_weakly_majorized`.
pub const MAJORIZATION_SLACK: f64 = 1e-12;

/// `(Σ |x_i|^p)^(1/p)`; zero for an empty vector.
pub fn p_norm(x: &[f64], p: f64) -> Result<f64, SpectralError> {
    if p.is_nan() || p < 1.0 {
        return Err(SpectralError::InvalidNorm(p));
    }
    if x.is_empty() {
        return Ok(0.0);
    }
    // scale by the largest magnitude so large p does not overflow
    let scale = x.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    if scale == 0.0 {
        return Ok(0.0);
    }
    let sum: f64 = x.iter().map(|v| (v.abs() / scale).powf(p)).sum();
    Ok(scale * sum.powf(1.0 / p))
}

/// Whether `y ≺_w x`: every prefix sum of `y` sorted non-increasing is at
/// most the matching prefix sum of `x` sorted non-increasing. The shorter
/// vector is padded with zeros.
pub fn is_weakly_majorized(y: &[f64], x: &[f64]) -> bool {
    let len = x.len().max(y.len());
    let sorted = |v: &[f64]| {
        let mut out = v.to_vec();
        out.resize(len, 0.0);
        out.sort_by(|a, b| b.total_cmp(a));
        out
    };
    let (ys, xs) = (sorted(y), sorted(x));
    let (mut sy, mut sx) = (0.0, 0.0);
    for (a, b) in ys.iter().zip(&xs) {
        sy += a;
        sx += b;
        if sy > sx + MAJORIZATION_SLACK {
            return false;
        }
    }
    true
}
