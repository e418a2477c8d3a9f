//! Friedman rank test with the F-distribution correction.

use super::special::f_quantile;
use super::{RankTable, StatError};

#[derive(Debug, Clone, PartialEq)]
pub struct TestResult {
    pub n_datasets: usize,
    pub n_methods: usize,
    pub mean_ranks: Vec<f64>,
    pub chi2_f: f64,
    pub f_f: f64,
    /// Degrees of freedom of the corrected statistic.
    pub df: (usize, usize),
    pub alpha: f64,
    pub critical: f64,
    /// True when the corrected statistic exceeds the critical value.
    pub reject: bool,
}

/// Tests whether the M methods perform equally over the N datasets.
///
/// chi2_F = 12N / (M(M+1)) * (sum R_j^2 - M(M+1)^2 / 4) over the mean
/// ranks R_j, corrected to F_F = (N-1) chi2_F / (N(M-1) - chi2_F), which
/// follows an F distribution with (M-1, (M-1)(N-1)) degrees of freedom.
/// The null hypothesis is rejected when F_F exceeds the critical value.
pub fn friedman(ranks: &RankTable, alpha: f64) -> Result<TestResult, StatError> {
    let n = ranks.n_datasets();
    let m = ranks.n_methods();
    assert!(n >= 2 && m >= 2, "the test needs at least a 2x2 rank table");

    let mean_ranks = ranks.mean_ranks();
    let sum_sq: f64 = mean_ranks.iter().map(|r| r * r).sum();
    let m_f = m as f64;
    let n_f = n as f64;
    let chi2_f = 12.0 * n_f / (m_f * (m_f + 1.0)) * (sum_sq - m_f * (m_f + 1.0).powi(2) / 4.0);

    // chi2_F reaches N(M-1) when every dataset ranks the methods
    // identically without ties; the correction is undefined there
    let denom = n_f * (m_f - 1.0) - chi2_f;
    if denom <= 0.0 {
        return Err(StatError::DegenerateRanks);
    }
    let f_f = (n_f - 1.0) * chi2_f / denom;

    let df = (m - 1, (m - 1) * (n - 1));
    let critical = f_quantile(df.0 as f64, df.1 as f64, 1.0 - alpha);
    Ok(TestResult {
        n_datasets: n,
        n_methods: m,
        mean_ranks,
        chi2_f,
        f_f,
        df,
        alpha,
        critical,
        reject: f_f > critical,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::rank_methods;

    #[test]
    fn hand_computed_three_by_three() {
        let ranks = RankTable::new(vec![
            vec![1.0, 2.0, 3.0],
            vec![1.0, 2.0, 3.0],
            vec![2.0, 1.0, 3.0],
        ]);
        let r = friedman(&ranks, 0.05).unwrap();
        assert!((r.chi2_f - 14.0 / 3.0).abs() < 1e-12);
        assert!((r.f_f - 7.0).abs() < 1e-12);
        assert_eq!(r.df, (2, 4));
        // F(2, 4) upper 5% point is 6.9443
        assert!((r.critical - 6.9443).abs() < 1e-3);
        assert!(r.reject);
    }

    #[test]
    fn identical_columns_give_zero_statistics_and_no_rejection() {
        let scores = vec![vec![0.5, 0.5, 0.5], vec![0.7, 0.7, 0.7]];
        let ranks = rank_methods(&scores, true);
        let r = friedman(&ranks, 0.05).unwrap();
        assert_eq!(r.chi2_f, 0.0);
        assert_eq!(r.f_f, 0.0);
        assert!(!r.reject);
    }

    #[test]
    fn unanimous_untied_rankings_are_degenerate() {
        let ranks = RankTable::new(vec![vec![1.0, 2.0, 3.0]; 4]);
        assert!(matches!(
            friedman(&ranks, 0.05),
            Err(StatError::DegenerateRanks)
        ));
    }

    #[test]
    fn critical_values_follow_the_table_shape() {
        // df grow with N, so the critical value shrinks
        let small = RankTable::new(vec![vec![1.0, 2.0, 3.0], vec![2.0, 1.0, 3.0]]);
        let mut rows = vec![vec![1.0, 2.0, 3.0], vec![2.0, 1.0, 3.0]];
        rows.extend(vec![vec![1.5, 1.5, 3.0]; 6]);
        let big = RankTable::new(rows);
        let a = friedman(&small, 0.05).unwrap();
        let b = friedman(&big, 0.05).unwrap();
        assert!(b.critical < a.critical);
    }
}
