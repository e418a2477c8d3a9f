//! General fuzzy min-max classification for mixed numeric and categorical
//! data: hyperbox learners, categorical encoders, tree hybrids and the rank
//! statistics used to compare them.

pub mod data;
pub mod encode;
pub mod experiment;
pub mod hybrid;
pub mod hyperbox;
pub mod learn;
pub mod mixed;
pub mod stats;
pub mod tree;
