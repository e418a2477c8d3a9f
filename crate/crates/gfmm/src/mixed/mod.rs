//! Mixed-attribute learning: categorical value distances and the two
//! mixed-attribute hyperbox learners.

pub mod catdist;
pub mod m1;
pub mod m2;

pub use catdist::{CatDistTable, DimTable};
pub use m1::{cat_dim_overlaps, membership_m1, train_m1, train_m1_traced, M1Config};
pub use m2::{beta_from_fraction, membership_m2, train_m2, train_m2_traced, M2Config};
