//! Hyperbox geometry and trained-model types shared by every learner.

pub mod geometry;
pub mod model;

pub use geometry::{
    contract, membership, overlap_test, ramp, OverlapCase, OverlapDim, OverlapOutcome,
};
pub use model::{
    predict_cardinality, predict_manhattan, BoundPair, CatPayload, GfmmModel, Hyperbox,
    ModelIoError, ModelKind, Prediction, TieBreak,
};
