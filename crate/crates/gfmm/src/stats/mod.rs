//! Evaluation statistics: class-balanced accuracy, rank tables, the
//! Friedman/Nemenyi testing chain and critical difference diagrams.

pub mod cba;
pub mod cd_diagram;
pub mod friedman;
pub mod nemenyi;
pub mod rank;
pub mod special;

pub use cba::{cba, ConfusionMatrix};
pub use cd_diagram::{emit_cd_diagram, render_cd_svg, render_cd_text};
pub use friedman::{friedman, TestResult};
pub use nemenyi::{nemenyi_cd, nemenyi_q};
pub use rank::{rank_methods, RankTable};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum StatError {
    #[error("confusion matrix holds no predictions")]
    EmptyMatrix,
    #[error("rank table is unanimous; the corrected statistic is undefined")]
    DegenerateRanks,
    #[error("no critical values for alpha = {0}; supported: 0.05, 0.10")]
    UnsupportedAlpha(f64),
}
