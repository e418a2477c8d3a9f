//! Per-dataset ranking of method scores with mid-rank ties.

/// N datasets by M methods matrix of ranks; rank 1 is best.
#[derive(Debug, Clone, PartialEq)]
pub struct RankTable {
    ranks: Vec<Vec<f64>>,
}

impl RankTable {
    pub fn new(ranks: Vec<Vec<f64>>) -> RankTable {
        assert!(!ranks.is_empty());
        let m = ranks[0].len();
        assert!(ranks.iter().all(|r| r.len() == m));
        RankTable { ranks }
    }

    pub fn n_datasets(&self) -> usize {
        self.ranks.len()
    }

    pub fn n_methods(&self) -> usize {
        self.ranks[0].len()
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.ranks
    }

    pub fn mean_ranks(&self) -> Vec<f64> {
        let n = self.n_datasets() as f64;
        let mut means = vec![0.0; self.n_methods()];
        for row in &self.ranks {
            for (m, r) in means.iter_mut().zip(row) {
                *m += r / n;
            }
        }
        means
    }
}

/// Ranks one row of scores; equal scores share the mean of the positions
/// they occupy.
fn rank_row(scores: &[f64], higher_better: bool) -> Vec<f64> {
    let m = scores.len();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| {
        if higher_better {
            scores[b].total_cmp(&scores[a])
        } else {
            scores[a].total_cmp(&scores[b])
        }
    });
    let mut ranks = vec![0.0; m];
    let mut i = 0;
    while i < m {
        let mut j = i;
        while j + 1 < m && scores[order[j + 1]] == scores[order[i]] {
            j += 1;
        }
        // positions i..=j are tied; mid-rank is their average (1-based)
        let mid = (i + j) as f64 / 2.0 + 1.0;
        for &col in &order[i..=j] {
            ranks[col] = mid;
        }
        i = j + 1;
    }
    ranks
}

/// Ranks an N-dataset by M-method score table row by row.
pub fn rank_methods(scores: &[Vec<f64>], higher_better: bool) -> RankTable {
    RankTable::new(
        scores
            .iter()
            .map(|row| rank_row(row, higher_better))
            .collect(),
    )
}
