//! Synthetic two-class benchmark generator.
//!
//! Each class draws its two numeric features from an equal-weight mixture of
//! two isotropic Gaussians (the classic two-class overlap benchmark layout),
//! and one categorical feature uniformly from a fixed value set. The two
//! stock variants differ only in categorical cardinality: 2 or 10 values.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use super::dataset::Dataset;
use super::schema::FeatureSchema;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SyntheticVariant {
    /// Two categorical values.
    TwoValueCat,
    /// Ten categorical values.
    TenValueCat,
}

impl SyntheticVariant {
    pub fn name(self) -> &'static str {
        match self {
            SyntheticVariant::TwoValueCat => "synthetic_1",
            SyntheticVariant::TenValueCat => "synthetic_2",
        }
    }
}

/// Generator settings; the defaults are the standard benchmark values.
#[derive(Debug, Clone, PartialEq)]
pub struct MixtureParams {
    /// Component means, `centers[class][component] = [x1, x2]`.
    pub centers: [[[f64; 2]; 2]; 2],
    /// Shared isotropic component variance.
    pub variance: f64,
    pub train_per_class: usize,
    pub test_per_class: usize,
    pub cat_values: usize,
}

impl MixtureParams {
    pub fn for_variant(variant: SyntheticVariant) -> MixtureParams {
        MixtureParams {
            centers: [
                [[-0.3, 0.7], [0.4, 0.7]],
                [[-0.7, 0.3], [0.3, 0.3]],
            ],
            variance: 0.03,
            train_per_class: 125,
            test_per_class: 500,
            cat_values: match variant {
                SyntheticVariant::TwoValueCat => 2,
                SyntheticVariant::TenValueCat => 10,
            },
        }
    }
}

/// Draws `(train, test)` datasets. Byte-identical output for equal inputs.
pub fn generate_synthetic(variant: SyntheticVariant, seed: u64) -> (Dataset, Dataset) {
    generate_synthetic_with(&MixtureParams::for_variant(variant), seed)
}

pub fn generate_synthetic_with(params: &MixtureParams, seed: u64) -> (Dataset, Dataset) {
    assert!(params.cat_values >= 1);
    let domain: Vec<String> = (1..=params.cat_values).map(|i| format!("v{i}")).collect();
    let schema = FeatureSchema::parse(&format!(
        "class = class\nx1 = numeric\nx2 = numeric\nx3 = categorical({})\n",
        domain.join(", ")
    ))
    .expect("static schema");

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sigma = params.variance.sqrt();
    let draw_split = |per_class: usize, rng: &mut ChaCha8Rng| {
        let mut numeric = Vec::with_capacity(per_class * 2);
        let mut categorical = Vec::with_capacity(per_class * 2);
        let mut classes = Vec::with_capacity(per_class * 2);
        for class in 0..2usize {
            for _ in 0..per_class {
                let component = rng.random_range(0..2usize);
                let [cx, cy] = params.centers[class][component];
                let x1 = Normal::new(cx, sigma).unwrap().sample(rng);
                let x2 = Normal::new(cy, sigma).unwrap().sample(rng);
                let cat = rng.random_range(0..params.cat_values);
                numeric.push(vec![x1, x2]);
                categorical.push(vec![domain[cat].clone()]);
                classes.push(format!("{}", class + 1));
            }
        }
        (numeric, categorical, classes)
    };

    let (tr_num, tr_cat, tr_cls) = draw_split(params.train_per_class, &mut rng);
    let (te_num, te_cat, te_cls) = draw_split(params.test_per_class, &mut rng);
    let train = Dataset::from_rows(schema.clone(), &tr_num, &tr_cat, &tr_cls);
    let test = Dataset::from_rows(schema, &te_num, &te_cat, &te_cls);
    (train, test)
}
