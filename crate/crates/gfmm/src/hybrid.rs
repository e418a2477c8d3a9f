//! Two-level stacking of a numeric-feature hyperbox model and a
//! categorical-feature decision tree.
//!
//! Both schemes train the level-1 models on disjoint feature subsets and a
//! level-2 tree on their two predicted labels. The train-only scheme
//! re-applies the level-1 models to their own training rows; the
//! train-valid scheme holds out a stratified half of the training data and
//! builds the level-2 table from predictions on that half.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::data::{CatValue, Dataset, IntervalMatrix};
use crate::hyperbox::GfmmModel;
use crate::learn::{train, Algorithm, LearnerConfig};
use crate::tree::{train_tree, DecisionTree, TreeTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StackScheme {
    /// Level 2 learns from level-1 predictions on the full training set.
    TrainOnly,
    /// Level 2 learns from level-1 predictions on a held-out half.
    TrainValid,
}

impl StackScheme {
    pub fn parse(s: &str) -> Option<StackScheme> {
        match s {
            "A" | "a" | "train-only" => Some(StackScheme::TrainOnly),
            "B" | "b" | "train-valid" => Some(StackScheme::TrainValid),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct HybridConfig {
    pub algorithm: Algorithm,
    pub learner: LearnerConfig,
    pub max_depth: usize,
    /// Seed for the stratified half split of the train-valid scheme.
    pub seed: u64,
}

impl HybridConfig {
    pub fn new(algorithm: Algorithm, theta: f64) -> HybridConfig {
        HybridConfig {
            algorithm,
            learner: LearnerConfig::new(theta),
            max_depth: 10,
            seed: 0,
        }
    }
}

#[derive(Debug, Error)]
pub enum HybridError {
    #[error("stacked training needs at least one numeric feature")]
    NoNumericFeatures,
    #[error("stacked training needs at least one categorical feature")]
    NoCategoricalFeatures,
}

#[derive(Debug, Clone)]
pub struct StackedModel {
    gfmm: GfmmModel,
    cat_tree: DecisionTree,
    level2: DecisionTree,
    pub scheme: StackScheme,
}

fn numeric_intervals(ds: &Dataset, rows: &[usize]) -> IntervalMatrix {
    let n = ds.n_numeric();
    let mut lo = Vec::with_capacity(rows.len() * n);
    let mut hi = Vec::with_capacity(rows.len() * n);
    for &r in rows {
        lo.extend_from_slice(ds.numeric_lo(r));
        hi.extend_from_slice(ds.numeric_hi(r));
    }
    IntervalMatrix::new(rows.len(), n, lo, hi)
}

fn categorical_table(ds: &Dataset, rows: &[usize]) -> TreeTable {
    let mut t = TreeTable::new(0, ds.domains().len());
    for &r in rows {
        t.push_row(&[], ds.categorical_row(r));
    }
    t
}

fn pick_labels(ds: &Dataset, rows: &[usize]) -> Vec<u32> {
    rows.iter().map(|&r| ds.labels()[r]).collect()
}

/// Level-2 training table: the two level-1 predicted labels per row, read
/// as categorical features.
fn level2_table(
    gfmm: &GfmmModel,
    cat_tree: &DecisionTree,
    ds: &Dataset,
    rows: &[usize],
) -> TreeTable {
    let mut t = TreeTable::new(0, 2);
    for &r in rows {
        let g = gfmm.predict(ds.numeric_lo(r), ds.numeric_hi(r), &[]).class;
        let c = cat_tree.predict(&[], ds.categorical_row(r));
        t.push_row(&[], &[Some(g), Some(c)]);
    }
    t
}

/// Splits row indices into two halves of equal size (within one row), with
/// each class divided as evenly as possible. Odd classes donate their
/// spare row to alternating halves so the overall sizes stay balanced.
pub fn stratified_half_split(labels: &[u32], n_classes: usize, seed: u64) -> (Vec<usize>, Vec<usize>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut first = Vec::new();
    let mut second = Vec::new();
    let mut spare_to_first = true;
    for class in 0..n_classes as u32 {
        let mut members: Vec<usize> = (0..labels.len()).filter(|&i| labels[i] == class).collect();
        members.shuffle(&mut rng);
        let mut half = members.len() / 2;
        if members.len() % 2 == 1 {
            if spare_to_first {
                half += 1;
            }
            spare_to_first = !spare_to_first;
        }
        first.extend_from_slice(&members[..half]);
        second.extend_from_slice(&members[half..]);
    }
    first.sort_unstable();
    second.sort_unstable();
    (first, second)
}

pub fn train_stacked(train_data: &Dataset, cfg: &HybridConfig, scheme: StackScheme) -> Result<StackedModel, HybridError> {
    match scheme {
        StackScheme::TrainOnly => train_stacked_a(train_data, cfg),
        StackScheme::TrainValid => train_stacked_b(train_data, cfg),
    }
}

pub fn train_stacked_a(train_data: &Dataset, cfg: &HybridConfig) -> Result<StackedModel, HybridError> {
    check_features(train_data)?;
    let rows: Vec<usize> = (0..train_data.n_rows()).collect();
    let (gfmm, cat_tree) = train_level1(train_data, &rows, cfg);
    let t2 = level2_table(&gfmm, &cat_tree, train_data, &rows);
    let level2 = train_tree(&t2, &pick_labels(train_data, &rows), train_data.n_classes(), cfg.max_depth);
    Ok(StackedModel {
        gfmm,
        cat_tree,
        level2,
        scheme: StackScheme::TrainOnly,
    })
}

pub fn train_stacked_b(train_data: &Dataset, cfg: &HybridConfig) -> Result<StackedModel, HybridError> {
    check_features(train_data)?;
    let (fit_rows, valid_rows) =
        stratified_half_split(train_data.labels(), train_data.n_classes(), cfg.seed);
    let (gfmm, cat_tree) = train_level1(train_data, &fit_rows, cfg);
    let t2 = level2_table(&gfmm, &cat_tree, train_data, &valid_rows);
    let level2 = train_tree(
        &t2,
        &pick_labels(train_data, &valid_rows),
        train_data.n_classes(),
        cfg.max_depth,
    );
    Ok(StackedModel {
        gfmm,
        cat_tree,
        level2,
        scheme: StackScheme::TrainValid,
    })
}

fn check_features(ds: &Dataset) -> Result<(), HybridError> {
    if ds.n_numeric() == 0 {
        return Err(HybridError::NoNumericFeatures);
    }
    if ds.domains().is_empty() {
        return Err(HybridError::NoCategoricalFeatures);
    }
    Ok(())
}

fn train_level1(ds: &Dataset, rows: &[usize], cfg: &HybridConfig) -> (GfmmModel, DecisionTree) {
    let x = numeric_intervals(ds, rows);
    let labels = pick_labels(ds, rows);
    let gfmm = train(cfg.algorithm, &x, &labels, &cfg.learner);
    let cat_tree = train_tree(&categorical_table(ds, rows), &labels, ds.n_classes(), cfg.max_depth);
    (gfmm, cat_tree)
}

impl StackedModel {
    /// Numeric part through the hyperbox model, categorical part through
    /// the tree, both predicted labels through the level-2 tree.
    pub fn predict(&self, xl: &[f64], xu: &[f64], cat: &[CatValue]) -> u32 {
        let g = self.gfmm.predict(xl, xu, &[]).class;
        let c = self.cat_tree.predict(&[], cat);
        self.level2.predict(&[], &[Some(g), Some(c)])
    }

    pub fn gfmm(&self) -> &GfmmModel {
        &self.gfmm
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::FeatureSchema;

    /// Numeric and categorical parts each determine the class on their own,
    /// so the level-1 models agree on every training row.
    fn agreement_dataset() -> Dataset {
        let schema =
            FeatureSchema::parse("class = y\nx = numeric\nc = categorical(p, q)\n").unwrap();
        let numeric = vec![
            vec![0.1],
            vec![0.15],
            vec![0.2],
            vec![0.8],
            vec![0.85],
            vec![0.9],
        ];
        let cats: Vec<Vec<String>> = ["p", "p", "p", "q", "q", "q"]
            .iter()
            .map(|s| vec![s.to_string()])
            .collect();
        let labels: Vec<String> = ["a", "a", "a", "b", "b", "b"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        Dataset::from_rows(schema, &numeric, &cats, &labels)
    }

    #[test]
    fn agreeing_level1_models_carry_their_class_through_level2() {
        let ds = agreement_dataset();
        let cfg = HybridConfig::new(Algorithm::Iol, 0.3);
        let model = train_stacked_a(&ds, &cfg).unwrap();
        for r in 0..ds.n_rows() {
            let got = model.predict(ds.numeric_lo(r), ds.numeric_hi(r), ds.categorical_row(r));
            assert_eq!(got, ds.labels()[r]);
        }
    }

    #[test]
    fn interval_numeric_input_is_accepted() {
        let ds = agreement_dataset();
        let cfg = HybridConfig::new(Algorithm::Iol, 0.3);
        let model = train_stacked_a(&ds, &cfg).unwrap();
        assert_eq!(model.predict(&[0.08], &[0.12], &[Some(0)]), 0);
    }

    #[test]
    fn feature_preconditions_are_enforced() {
        let schema = FeatureSchema::parse("class = y\nx = numeric\n").unwrap();
        let no_cat = Dataset::from_rows(
            schema,
            &[vec![0.1], vec![0.9]],
            &[vec![], vec![]],
            &["a".into(), "b".into()],
        );
        let cfg = HybridConfig::new(Algorithm::Onln, 0.5);
        assert!(matches!(
            train_stacked_a(&no_cat, &cfg),
            Err(HybridError::NoCategoricalFeatures)
        ));

        let schema = FeatureSchema::parse("class = y\nc = categorical(p, q)\n").unwrap();
        let no_num = Dataset::from_rows(
            schema,
            &[vec![], vec![]],
            &[vec!["p".into()], vec!["q".into()]],
            &["a".into(), "b".into()],
        );
        assert!(matches!(
            train_stacked_b(&no_num, &cfg),
            Err(HybridError::NoNumericFeatures)
        ));
    }

    #[test]
    fn half_split_is_stratified_and_balanced() {
        // 7 of class 0, 5 of class 1, 4 of class 2
        let labels: Vec<u32> = [vec![0u32; 7], vec![1; 5], vec![2; 4]].concat();
        for seed in 0..20 {
            let (a, b) = stratified_half_split(&labels, 3, seed);
            assert!(a.len().abs_diff(b.len()) <= 1);
            assert_eq!(a.len() + b.len(), 16);
            for class in 0..3u32 {
                let ca = a.iter().filter(|&&i| labels[i] == class).count();
                let cb = b.iter().filter(|&&i| labels[i] == class).count();
                assert!(ca.abs_diff(cb) <= 1, "class {class} split {ca}/{cb}");
            }
            let mut all = [a, b].concat();
            all.sort_unstable();
            assert_eq!(all, (0..16).collect::<Vec<_>>());
        }
    }

    #[test]
    fn train_valid_scheme_is_deterministic_under_a_fixed_seed() {
        let ds = agreement_dataset();
        let mut cfg = HybridConfig::new(Algorithm::Onln, 0.3);
        cfg.seed = 7;
        let m1 = train_stacked_b(&ds, &cfg).unwrap();
        let m2 = train_stacked_b(&ds, &cfg).unwrap();
        for r in 0..ds.n_rows() {
            assert_eq!(
                m1.predict(ds.numeric_lo(r), ds.numeric_hi(r), ds.categorical_row(r)),
                m2.predict(ds.numeric_lo(r), ds.numeric_hi(r), ds.categorical_row(r))
            );
        }
    }
}
