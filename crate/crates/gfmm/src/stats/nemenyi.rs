//! Nemenyi critical difference for post-hoc rank comparison.

use super::special::studentized_range_quantile;
use super::StatError;

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Standard critical values q_alpha for the Nemenyi test at alpha = 0.05
/// and 0.10, for 2..=10 methods: the upper quantiles of the studentized
/// range with infinite degrees of freedom, divided by sqrt(2).
const Q_05: [f64; 9] = [1.960, 2.343, 2.569, 2.728, 2.850, 2.949, 3.031, 3.102, 3.164];
const Q_10: [f64; 9] = [1.645, 2.052, 2.291, 2.459, 2.589, 2.693, 2.780, 2.855, 2.920];

/// q_alpha for m methods. The bundled table covers m <= 10; larger m fall
/// back to computing the same quantile from the distribution itself.
pub fn nemenyi_q(m: usize, alpha: f64) -> Result<f64, StatError> {
    assert!(m >= 2);
    let table: &[f64] = if (alpha - 0.05).abs() < 1e-9 {
        &Q_05
    } else if (alpha - 0.10).abs() < 1e-9 {
        &Q_10
    } else {
        return Err(StatError::UnsupportedAlpha(alpha));
    };
    Ok(match table.get(m - 2) {
        Some(&q) => q,
        None => studentized_range_quantile(alpha, m) / SQRT_2,
    })
}

/// Critical difference: mean-rank gaps at or above this are significant.
/// CD = q_alpha * sqrt(M(M+1) / (6N)).
pub fn nemenyi_cd(m: usize, n: usize, alpha: f64) -> Result<f64, StatError> {
    assert!(n >= 1);
    let q = nemenyi_q(m, alpha)?;
    let m_f = m as f64;
    Ok(q * (m_f * (m_f + 1.0) / (6.0 * n as f64)).sqrt())
}
