//! Cross-validated evaluation of the toolkit on bundled datasets.
//!
//! The pieces compose in one direction: a flat key=value config describes a
//! grid of settings, the fold splitter carves each dataset into repeated
//! k-fold partitions, the pipeline evaluates one grid cell on one fold, and
//! the runner aggregates cell results into report rows. The reference module
//! carries previously published-quality results so the reproduce command can
//! print fresh numbers next to them.

use thiserror::Error;

use crate::data::{DataError, SchemaError};
use crate::encode::EncodeError;
use crate::hybrid::HybridError;
use crate::stats::StatError;

pub mod config;
pub mod pipeline;
pub mod reference;
pub mod reproduce;
pub mod runner;
pub mod synth;

pub use reference::{DatasetInfo, DATASETS, MIXED_DATASETS};

/// Failure anywhere in the evaluation stack.
#[derive(Debug, Error)]
pub enum ExperimentError {
    /// A requested dataset has no csv/schema pair under the data directory.
    /// Most of the corpus is fetched, not bundled; see tools/fetch_data.py.
    #[error("dataset `{0}` not found in the data directory; fetch it with tools/fetch_data.py")]
    MissingDataset(String),
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },
    /// Wraps a failure with the grid coordinates that produced it.
    #[error("{dataset} / {method} (theta {theta}): {source}")]
    Cell {
        dataset: String,
        method: String,
        theta: f64,
        #[source]
        source: Box<ExperimentError>,
    },
    #[error(transparent)]
    Data(#[from] DataError),
    #[error(transparent)]
    Schema(#[from] SchemaError),
    #[error(transparent)]
    Encode(#[from] EncodeError),
    #[error(transparent)]
    Hybrid(#[from] HybridError),
    #[error(transparent)]
    Stats(#[from] StatError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl ExperimentError {
    /// Attaches grid coordinates to an error bubbling out of one cell.
    pub fn in_cell(self, dataset: &str, method: &str, theta: f64) -> ExperimentError {
        ExperimentError::Cell {
            dataset: dataset.to_string(),
            method: method.to_string(),
            theta,
            source: Box::new(self),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::reference::*;
    use crate::stats::{friedman, rank_methods};

    #[test]
    fn roster_matches_grid_dimensions() {
        assert_eq!(DATASETS.len(), 14);
        assert_eq!(MIXED_DATASETS.len(), 11);
        for info in &DATASETS {
            let mixed = info.n_numeric > 0 && info.n_categorical > 0;
            assert_eq!(MIXED_DATASETS.contains(&info.name), mixed, "{}", info.name);
        }
    }

    #[test]
    fn numeric_only_column_is_absent_exactly_for_pure_categorical_datasets() {
        for grid in [&CBA_IOL, &CBA_ONLN, &CBA_AGGLO2] {
            for (info, rows) in DATASETS.iter().zip(grid.iter()) {
                for row in rows {
                    assert_eq!(row[0].is_none(), info.n_numeric == 0, "{}", info.name);
                    assert!(row[1..].iter().all(Option::is_some), "{}", info.name);
                }
            }
        }
    }

    #[test]
    fn best_method_mean_ranks_match_their_rank_rows() {
        for table in &BEST_METHOD_TABLES {
            for col in 0..8 {
                let mean: f64 =
                    table.ranks.iter().map(|r| r[col]).sum::<f64>() / table.ranks.len() as f64;
                assert!(
                    (mean - table.mean_ranks[col]).abs() < 5e-4,
                    "theta {} col {col}: {mean} vs {}",
                    table.theta,
                    table.mean_ranks[col],
                );
            }
            for row in &table.ranks {
                let sum: f64 = row.iter().sum();
                assert!((sum - 36.0).abs() < 1e-9, "rank row must sum to 36: {row:?}");
            }
        }
    }

    #[test]
    fn stacked_mean_ranks_reproduce_from_the_cba_grid() {
        for (t, expected) in STACKED_MEAN_RANKS.iter().enumerate() {
            let rows: Vec<Vec<f64>> = STACKED_CBA.iter().map(|d| d[t].to_vec()).collect();
            let ranks = rank_methods(&rows, true);
            for (got, want) in ranks.mean_ranks().iter().zip(expected) {
                assert!((got - want).abs() < 5e-4, "theta index {t}: {got} vs {want}");
            }
        }
    }

    #[test]
    fn friedman_on_stacked_grid_matches_quoted_statistic() {
        let rows: Vec<Vec<f64>> = STACKED_CBA.iter().map(|d| d[1].to_vec()).collect();
        let result = friedman(&rank_methods(&rows, true), 0.05).unwrap();
        let quoted = FRIEDMAN_REFS
            .iter()
            .find(|r| r.family == "stacked" && r.theta == 0.7)
            .unwrap();
        assert!(
            (result.f_f - quoted.f_f).abs() < 5e-3,
            "{} vs {}",
            result.f_f,
            quoted.f_f,
        );
        assert!((result.critical - quoted.critical).abs() < 1e-3);
        assert!(result.reject);
    }

    #[test]
    fn mixed_rows_cover_every_dataset_with_the_right_theta_span() {
        for rows in [&MIXED_CBA, &MIXED_BOXES] {
            for info in &DATASETS {
                let mine: Vec<_> = rows.iter().filter(|r| r.dataset == info.name).collect();
                if info.n_numeric == 0 {
                    assert_eq!(mine.len(), 1, "{}", info.name);
                    assert!(mine[0].theta.is_none());
                } else {
                    assert_eq!(mine.len(), 3, "{}", info.name);
                    let thetas: Vec<f64> = mine.iter().map(|r| r.theta.unwrap()).collect();
                    assert_eq!(thetas, THETAS);
                }
            }
        }
    }

    #[test]
    fn synthetic_grid_spot_values() {
        // one-hot on the two-valued synthetic set fires the secondary
        // criterion 366 times under IOL at theta 0.7
        let cell = &SYNTHETIC[1][0][0][1];
        assert_eq!(cell.secondary_total, 366.0);
        assert_eq!(cell.secondary_correct, 198.0);
        assert_eq!(cell.boxes, 6.0);
        for theta in &SYNTHETIC {
            for dataset in theta {
                for learner in dataset {
                    for cell in learner {
                        assert!(cell.accuracy > 0.0 && cell.accuracy <= 1.0);
                        assert!(cell.secondary_correct <= cell.secondary_total);
                        assert!(cell.boxes >= 2.0);
                    }
                }
            }
        }
    }
}
