//! Data handling: schemas, mixed-attribute tables, normalization, CV splits
//! and the synthetic benchmark generator.

mod dataset;
mod folds;
mod matrix;
mod normalize;
mod schema;
mod synthetic;

pub use dataset::{load_csv, load_csv_test, CatValue, DataError, Dataset, UnseenRecord};
pub use folds::{complement, cv_splits};
pub use matrix::{IntervalMatrix, NumMatrix};
pub use normalize::Normalizer;
pub use schema::{ColumnSpec, FeatureKind, FeatureSchema, SchemaError};
pub use synthetic::{generate_synthetic, generate_synthetic_with, MixtureParams, SyntheticVariant};
