//! Categorical-to-numeric encoders with strict fit/transform separation.
//!
//! `fit` sees training rows only; `transform` encodes any conforming rows.
//! Two encoders are phase-dependent by construction: leave-one-out removes
//! the row's own target in the train phase, and catboost conditions each
//! row on the rows before it. Everything else encodes a value identically
//! in both phases. Outputs are raw formula values; rescaling into [0, 1]
//! is a separate explicit stage ([`EncodedMatrix::fit_rescaler`]) so the
//! formulas stay directly inspectable.

use std::fmt;

use thiserror::Error;

use crate::data::{CatValue, Dataset, Normalizer, NumMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EncoderKind {
    Label,
    OneHot,
    Sum,
    Helmert,
    Target,
    JamesStein,
    Loo,
    CatBoost,
}

impl EncoderKind {
    pub const ALL: [EncoderKind; 8] = [
        EncoderKind::Label,
        EncoderKind::OneHot,
        EncoderKind::Sum,
        EncoderKind::Helmert,
        EncoderKind::Target,
        EncoderKind::JamesStein,
        EncoderKind::Loo,
        EncoderKind::CatBoost,
    ];

    pub fn parse(s: &str) -> Option<EncoderKind> {
        match s {
            "label" => Some(EncoderKind::Label),
            "onehot" | "one-hot" => Some(EncoderKind::OneHot),
            "sum" => Some(EncoderKind::Sum),
            "helmert" => Some(EncoderKind::Helmert),
            "target" => Some(EncoderKind::Target),
            "jamesstein" | "james-stein" => Some(EncoderKind::JamesStein),
            "loo" | "leave-one-out" => Some(EncoderKind::Loo),
            "catboost" => Some(EncoderKind::CatBoost),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            EncoderKind::Label => "label",
            EncoderKind::OneHot => "onehot",
            EncoderKind::Sum => "sum",
            EncoderKind::Helmert => "helmert",
            EncoderKind::Target => "target",
            EncoderKind::JamesStein => "jamesstein",
            EncoderKind::Loo => "loo",
            EncoderKind::CatBoost => "catboost",
        }
    }

    fn class_statistic(self) -> bool {
        matches!(
            self,
            EncoderKind::Target | EncoderKind::JamesStein | EncoderKind::Loo | EncoderKind::CatBoost
        )
    }
}

impl fmt::Display for EncoderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Train,
    Test,
}

/// Smoothing settings for the class-statistic encoders.
#[derive(Debug, Clone, PartialEq)]
pub struct EncoderParams {
    /// Target encoding: sample count at which the posterior and the prior
    /// weigh equally.
    pub target_m: f64,
    /// Target encoding: transition steepness.
    pub target_z: f64,
    /// CatBoost encoding: weight of the global prior.
    pub catboost_z: f64,
}

impl Default for EncoderParams {
    fn default() -> Self {
        EncoderParams {
            target_m: 1.0,
            target_z: 1.0,
            catboost_z: 1.0,
        }
    }
}

#[derive(Debug, Error)]
pub enum EncodeError {
    #[error("categorical feature {0} has no values in the training rows")]
    EmptyDomain(usize),
    #[error("class statistics need at least one labelled training row")]
    MissingLabels,
}

/// Numeric expansion of the categorical columns, with per-column
/// provenance back to the source feature.
#[derive(Debug, Clone, PartialEq)]
pub struct EncodedMatrix {
    pub data: NumMatrix,
    /// `(source categorical feature, component index)` per output column.
    pub provenance: Vec<(usize, usize)>,
}

impl EncodedMatrix {
    /// Fits the shared min-max rescaler on this (training) matrix.
    pub fn fit_rescaler(&self) -> Normalizer {
        Normalizer::fit(&self.data)
    }

    pub fn rescale(&mut self, norm: &Normalizer) {
        norm.transform(&mut self.data);
    }
}

#[derive(Debug, Clone)]
struct FeatureFit {
    /// Training-order code per domain value; `None` = never seen in fit.
    code: Vec<Option<usize>>,
    n_seen: usize,
    /// Per training code: occurrence count.
    count: Vec<usize>,
    /// Per training code and class: occurrence count, row-major.
    class_count: Vec<usize>,
    /// Per training code: sum of the integer class targets.
    target_sum: Vec<f64>,
    /// Fitted value sequence; only kept for the order-dependent encoder.
    fit_values: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct FittedEncoder {
    kind: EncoderKind,
    params: EncoderParams,
    n_classes: usize,
    n_rows: usize,
    class_total: Vec<usize>,
    target_mean: f64,
    /// Integer class target per fitted row; only kept for catboost.
    fit_targets: Vec<f64>,
    features: Vec<FeatureFit>,
}

/// Derives all per-value state from the training rows.
pub fn fit(
    kind: EncoderKind,
    train: &Dataset,
    params: &EncoderParams,
) -> Result<FittedEncoder, EncodeError> {
    let n_rows = train.n_rows();
    if kind.class_statistic() && n_rows == 0 {
        return Err(EncodeError::MissingLabels);
    }
    let n_classes = train.n_classes();
    let targets: Vec<f64> = train
        .labels()
        .iter()
        .map(|&l| train.class_codes()[l as usize] as f64)
        .collect();
    let target_mean = if n_rows == 0 {
        0.0
    } else {
        targets.iter().sum::<f64>() / n_rows as f64
    };
    let mut class_total = vec![0usize; n_classes];
    for &l in train.labels() {
        class_total[l as usize] += 1;
    }

    let mut features = Vec::with_capacity(train.domains().len());
    for j in 0..train.domains().len() {
        let mut code: Vec<Option<usize>> = vec![None; train.domains()[j].len()];
        let mut n_seen = 0usize;
        let mut count = Vec::new();
        let mut class_count = Vec::new();
        let mut target_sum = Vec::new();
        let mut fit_values = Vec::new();
        for i in 0..n_rows {
            let v = train.categorical_row(i)[j]
                .expect("training categorical values must be concrete");
            let slot = match code[v as usize] {
                Some(c) => c,
                None => {
                    code[v as usize] = Some(n_seen);
                    count.push(0);
                    class_count.resize(class_count.len() + n_classes, 0);
                    target_sum.push(0.0);
                    n_seen += 1;
                    n_seen - 1
                }
            };
            count[slot] += 1;
            class_count[slot * n_classes + train.labels()[i] as usize] += 1;
            target_sum[slot] += targets[i];
            if kind == EncoderKind::CatBoost {
                fit_values.push(v);
            }
        }
        if n_seen == 0 {
            return Err(EncodeError::EmptyDomain(j));
        }
        features.push(FeatureFit {
            code,
            n_seen,
            count,
            class_count,
            target_sum,
            fit_values,
        });
    }

    Ok(FittedEncoder {
        kind,
        params: params.clone(),
        n_classes,
        n_rows,
        class_total,
        target_mean,
        fit_targets: if kind == EncoderKind::CatBoost {
            targets
        } else {
            Vec::new()
        },
        features,
    })
}

impl FittedEncoder {
    pub fn kind(&self) -> EncoderKind {
        self.kind
    }

    fn feature_arity(&self, f: &FeatureFit) -> usize {
        match self.kind {
            EncoderKind::Label | EncoderKind::Loo | EncoderKind::CatBoost => 1,
            EncoderKind::OneHot => f.n_seen,
            EncoderKind::Sum | EncoderKind::Helmert => f.n_seen - 1,
            EncoderKind::Target | EncoderKind::JamesStein => {
                if self.n_classes == 2 {
                    1
                } else {
                    self.n_classes
                }
            }
        }
    }

    pub fn n_output_cols(&self) -> usize {
        self.features.iter().map(|f| self.feature_arity(f)).sum()
    }

    /// Encodes the categorical columns of `data`. Unseen values follow the
    /// per-encoder fallback and are logged per occurrence.
    pub fn transform(&self, data: &Dataset, phase: Phase) -> EncodedMatrix {
        assert_eq!(
            data.domains().len(),
            self.features.len(),
            "categorical arity mismatch"
        );
        if self.kind == EncoderKind::CatBoost && phase == Phase::Train {
            assert_eq!(
                data.n_rows(),
                self.n_rows,
                "train-phase transform must replay the fitted rows"
            );
        }
        let mut provenance = Vec::with_capacity(self.n_output_cols());
        for (j, f) in self.features.iter().enumerate() {
            for comp in 0..self.feature_arity(f) {
                provenance.push((j, comp));
            }
        }
        // running per-value history for the order-dependent train phase
        let mut prefix: Vec<Vec<(f64, usize)>> = self
            .features
            .iter()
            .map(|f| vec![(0.0, 0); f.n_seen])
            .collect();
        let mut rows_out = Vec::with_capacity(data.n_rows());
        for i in 0..data.n_rows() {
            let mut out = Vec::with_capacity(provenance.len());
            for (j, f) in self.features.iter().enumerate() {
                let value = data.categorical_row(i)[j];
                self.encode_value(j, f, value, i, data, phase, &mut prefix[j], &mut out);
            }
            rows_out.push(out);
        }
        EncodedMatrix {
            data: NumMatrix::from_rows(&rows_out),
            provenance,
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn encode_value(
        &self,
        j: usize,
        f: &FeatureFit,
        value: CatValue,
        row: usize,
        data: &Dataset,
        phase: Phase,
        prefix: &mut [(f64, usize)],
        out: &mut Vec<f64>,
    ) {
        let slot = value.and_then(|v| f.code.get(v as usize).copied().flatten());
        match self.kind {
            EncoderKind::Label => match slot {
                Some(c) => out.push(c as f64),
                None => {
                    self.log_unseen(j, value);
                    out.push(f.n_seen as f64);
                }
            },
            EncoderKind::OneHot => {
                let start = out.len();
                out.resize(start + f.n_seen, 0.0);
                match slot {
                    Some(c) => out[start + c] = 1.0,
                    None => self.log_unseen(j, value),
                }
            }
            EncoderKind::Sum => {
                let cols = f.n_seen - 1;
                let start = out.len();
                out.resize(start + cols, 0.0);
                match slot {
                    // the last training value is the reference value
                    Some(c) if c == cols => out[start..].fill(-1.0),
                    Some(c) => out[start + c] = 1.0,
                    None => self.log_unseen(j, value),
                }
            }
            EncoderKind::Helmert => {
                let cols = f.n_seen - 1;
                let start = out.len();
                out.resize(start + cols, 0.0);
                match slot {
                    Some(0) => out[start..].fill(-1.0),
                    Some(c) => {
                        out[start + c - 1] = c as f64;
                        out[start + c..].fill(-1.0);
                    }
                    None => self.log_unseen(j, value),
                }
            }
            EncoderKind::Target => {
                if slot.is_none() {
                    self.log_unseen(j, value);
                }
                for class in self.stat_classes() {
                    out.push(self.target_component(f, slot, class));
                }
            }
            EncoderKind::JamesStein => {
                if slot.is_none() {
                    self.log_unseen(j, value);
                }
                for class in self.stat_classes() {
                    out.push(self.james_stein_component(f, slot, class));
                }
            }
            EncoderKind::Loo => {
                let v = match slot {
                    None => {
                        self.log_unseen(j, value);
                        self.target_mean
                    }
                    Some(c) => match phase {
                        Phase::Test => f.target_sum[c] / f.count[c] as f64,
                        Phase::Train => {
                            if f.count[c] <= 1 {
                                log::debug!(
                                    "loo encoder: singleton value on feature {j}; \
                                     using the global target mean"
                                );
                                self.target_mean
                            } else {
                                let own =
                                    data.class_codes()[data.labels()[row] as usize] as f64;
                                (f.target_sum[c] - own) / (f.count[c] - 1) as f64
                            }
                        }
                    },
                };
                out.push(v);
            }
            EncoderKind::CatBoost => {
                let z = self.params.catboost_z;
                let p = self.target_mean;
                let v = match phase {
                    Phase::Test => match slot {
                        Some(c) => (f.target_sum[c] + z * p) / (f.count[c] as f64 + z),
                        None => {
                            self.log_unseen(j, value);
                            p
                        }
                    },
                    Phase::Train => {
                        let stored = f.fit_values[row];
                        assert_eq!(
                            value,
                            Some(stored),
                            "train-phase transform must replay the fitted rows"
                        );
                        let c = f.code[stored as usize].expect("fitted value has a slot");
                        let (sum, count) = prefix[c];
                        let enc = (sum + z * p) / (count as f64 + z);
                        prefix[c] = (sum + self.fit_targets[row], count + 1);
                        enc
                    }
                };
                out.push(v);
            }
        }
    }

    /// Column classes for the class-statistic expansions: binary tasks use
    /// a single positive-class column, otherwise one column per class.
    fn stat_classes(&self) -> std::ops::Range<usize> {
        if self.n_classes == 2 {
            1..2
        } else {
            0..self.n_classes
        }
    }

    fn target_component(&self, f: &FeatureFit, slot: Option<usize>, class: usize) -> f64 {
        let prior = self.class_total[class] as f64 / self.n_rows as f64;
        let Some(c) = slot else { return prior };
        let nk = f.count[c] as f64;
        let posterior = f.class_count[c * self.n_classes + class] as f64 / nk;
        let lambda =
            1.0 / (1.0 + (-(nk - self.params.target_m) / self.params.target_z).exp());
        lambda * posterior + (1.0 - lambda) * prior
    }

    fn james_stein_component(&self, f: &FeatureFit, slot: Option<usize>, class: usize) -> f64 {
        let p_pos = self.class_total[class] as f64 / self.n_rows as f64;
        let Some(c) = slot else { return p_pos };
        let nk = f.count[c] as f64;
        let p_k = f.class_count[c * self.n_classes + class] as f64 / nk;
        let group_var = p_k * (1.0 - p_k) / nk;
        let pop_var = p_pos * (1.0 - p_pos) / self.n_rows as f64;
        let den = group_var + pop_var;
        // both variances zero: degenerate estimator, keep the prior
        let b = if den == 0.0 { 1.0 } else { group_var / den };
        (1.0 - b) * p_k + b * p_pos
    }

    fn log_unseen(&self, j: usize, value: CatValue) {
        log::debug!(
            "{} encoder: unseen value {value:?} on categorical feature {j}; applying the fallback",
            self.kind
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::FeatureSchema;

    fn ds(schema: &str, cats: &[Vec<&str>], labels: &[&str]) -> Dataset {
        let schema = FeatureSchema::parse(schema).unwrap();
        let numeric = vec![Vec::new(); labels.len()];
        let cat_rows: Vec<Vec<String>> = cats
            .iter()
            .map(|r| r.iter().map(|s| s.to_string()).collect())
            .collect();
        let class: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        Dataset::from_rows(schema, &numeric, &cat_rows, &class)
    }

    fn col(m: &EncodedMatrix, row: usize) -> Vec<f64> {
        m.data.row(row).to_vec()
    }

    #[test]
    fn label_codes_follow_first_appearance_and_unseen_gets_next_integer() {
        // pinned domain order differs from appearance order on purpose
        let schema = "class = y\na = categorical(blue, green, red, grey)\n";
        let train = ds(
            schema,
            &[vec!["red"], vec!["green"], vec!["blue"], vec!["green"]],
            &["0", "1", "0", "1"],
        );
        let enc = fit(EncoderKind::Label, &train, &EncoderParams::default()).unwrap();
        let m = enc.transform(&train, Phase::Train);
        assert_eq!(m.data.col(0), vec![0.0, 1.0, 2.0, 1.0]);

        let test = ds(schema, &[vec!["grey"]], &["0"]);
        let t = enc.transform(&test, Phase::Test);
        assert_eq!(col(&t, 0), vec![3.0]);
    }

    #[test]
    fn one_hot_sum_and_helmert_vectors() {
        let schema = "class = y\na = categorical(v1, v2, v3, v4)\n";
        let train = ds(
            schema,
            &[vec!["v1"], vec!["v2"], vec!["v3"]],
            &["0", "1", "0"],
        );
        let unseen = ds(schema, &[vec!["v4"]], &["0"]);

        let onehot = fit(EncoderKind::OneHot, &train, &EncoderParams::default()).unwrap();
        let m = onehot.transform(&train, Phase::Train);
        assert_eq!(col(&m, 1), vec![0.0, 1.0, 0.0]);
        assert_eq!(col(&onehot.transform(&unseen, Phase::Test), 0), vec![0.0; 3]);

        let sum = fit(EncoderKind::Sum, &train, &EncoderParams::default()).unwrap();
        let m = sum.transform(&train, Phase::Train);
        assert_eq!(col(&m, 0), vec![1.0, 0.0]);
        assert_eq!(col(&m, 1), vec![0.0, 1.0]);
        assert_eq!(col(&m, 2), vec![-1.0, -1.0]);
        assert_eq!(col(&sum.transform(&unseen, Phase::Test), 0), vec![0.0; 2]);

        let helmert = fit(EncoderKind::Helmert, &train, &EncoderParams::default()).unwrap();
        let m = helmert.transform(&train, Phase::Train);
        assert_eq!(col(&m, 0), vec![-1.0, -1.0]);
        assert_eq!(col(&m, 1), vec![1.0, -1.0]);
        assert_eq!(col(&m, 2), vec![0.0, 2.0]);
        assert_eq!(col(&helmert.transform(&unseen, Phase::Test), 0), vec![0.0; 2]);
    }

    #[test]
    fn target_encoding_hand_example() {
        // value a: N_k = 4 with 3 positives; N = 10 with N_1 = 5
        let schema = "class = y\na = categorical(a, b, x)\n";
        let mut cats = vec![vec!["a"]; 4];
        cats.extend(vec![vec!["b"]; 6]);
        let labels = ["1", "1", "1", "0", "1", "1", "0", "0", "0", "0"];
        let train = ds(schema, &cats, &labels);
        // class "1" appears first, so the positive class (code 1) is "0";
        // flip the expectation accordingly: positives for code 1 are the
        // "0"-labelled rows
        let enc = fit(EncoderKind::Target, &train, &EncoderParams::default()).unwrap();
        let m = enc.transform(&train, Phase::Train);
        let lambda = 1.0 / (1.0 + (-3.0f64).exp());
        let expect_a = lambda * 0.25 + (1.0 - lambda) * 0.5;
        assert!((m.data.get(0, 0) - expect_a).abs() < 1e-12);

        // unseen value falls back to the prior
        let test = ds(schema, &[vec!["x"]], &["1"]);
        let t = enc.transform(&test, Phase::Test);
        assert!((t.data.get(0, 0) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn james_stein_fixed_point_when_group_matches_population() {
        let schema = "class = y\na = categorical(a, b)\n";
        let train = ds(
            schema,
            &[vec!["a"], vec!["a"], vec!["b"], vec!["b"]],
            &["1", "0", "1", "0"],
        );
        let enc = fit(EncoderKind::JamesStein, &train, &EncoderParams::default()).unwrap();
        let m = enc.transform(&train, Phase::Train);
        for row in 0..4 {
            assert!((m.data.get(row, 0) - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn loo_hand_examples_and_singleton_fallback() {
        let schema = "class = y\na = categorical(a, b)\n";
        let train = ds(
            schema,
            &[vec!["a"], vec!["a"], vec!["a"], vec!["b"]],
            &["1", "0", "1", "1"],
        );
        let enc = fit(EncoderKind::Loo, &train, &EncoderParams::default()).unwrap();
        let m = enc.transform(&train, Phase::Train);
        assert!((m.data.get(0, 0) - 0.5).abs() < 1e-15);
        assert!((m.data.get(1, 0) - 1.0).abs() < 1e-15);
        // value b occurs once: global target mean 3/4
        assert!((m.data.get(3, 0) - 0.75).abs() < 1e-15);

        let t = enc.transform(&train, Phase::Test);
        assert!((t.data.get(0, 0) - 2.0 / 3.0).abs() < 1e-15);
        assert!((t.data.get(3, 0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn catboost_prefix_and_totals() {
        let schema = "class = y\na = categorical(a, b)\n";
        let train = ds(
            schema,
            &[vec!["a"], vec!["a"], vec!["b"], vec!["a"]],
            &["1", "0", "1", "1"],
        );
        let enc = fit(EncoderKind::CatBoost, &train, &EncoderParams::default()).unwrap();
        let m = enc.transform(&train, Phase::Train);
        let p = 0.75;
        // first occurrence of any value encodes to p
        assert!((m.data.get(0, 0) - p).abs() < 1e-15);
        assert!((m.data.get(2, 0) - p).abs() < 1e-15);
        // later occurrences fold in the prefix targets
        assert!((m.data.get(1, 0) - (1.0 + p) / 2.0).abs() < 1e-15);
        assert!((m.data.get(3, 0) - (1.0 + p) / 3.0).abs() < 1e-15);

        let t = enc.transform(&train, Phase::Test);
        assert!((t.data.get(0, 0) - (2.0 + p) / 4.0).abs() < 1e-15);
        assert!((t.data.get(2, 0) - (1.0 + p) / 2.0).abs() < 1e-15);
    }

    #[test]
    fn catboost_train_depends_on_order_while_test_depends_on_totals() {
        let schema = "class = y\na = categorical(a, b)\n";
        let fwd = ds(
            schema,
            &[vec!["a"], vec!["a"], vec!["b"]],
            &["1", "0", "1"],
        );
        let rev = ds(
            schema,
            &[vec!["a"], vec!["a"], vec!["b"]],
            &["0", "1", "1"],
        );
        let params = EncoderParams::default();
        let enc_f = fit(EncoderKind::CatBoost, &fwd, &params).unwrap();
        let enc_r = fit(EncoderKind::CatBoost, &rev, &params).unwrap();
        let train_f = enc_f.transform(&fwd, Phase::Train);
        let train_r = enc_r.transform(&rev, Phase::Train);
        assert_ne!(train_f.data.row(1), train_r.data.row(1));
        // totals agree, so the test phase is order-independent
        let probe = ds(schema, &[vec!["a"], vec!["b"]], &["0", "0"]);
        assert_eq!(
            enc_f.transform(&probe, Phase::Test).data,
            enc_r.transform(&probe, Phase::Test).data
        );
    }

    #[test]
    fn phase_dependence_is_exactly_loo_and_catboost() {
        let schema = "class = y\na = categorical(a, b)\n";
        let train = ds(
            schema,
            &[vec!["a"], vec!["a"], vec!["b"], vec!["b"]],
            &["1", "0", "1", "1"],
        );
        for kind in EncoderKind::ALL {
            let enc = fit(kind, &train, &EncoderParams::default()).unwrap();
            let a = enc.transform(&train, Phase::Train);
            let b = enc.transform(&train, Phase::Test);
            let differs = a.data != b.data;
            let should_differ =
                matches!(kind, EncoderKind::Loo | EncoderKind::CatBoost);
            assert_eq!(differs, should_differ, "{kind}");
            // purity: repeating a transform is bit-identical
            assert_eq!(a, enc.transform(&train, Phase::Train));
        }
    }

    #[test]
    fn multiclass_target_emits_one_column_per_class() {
        let schema = "class = y\na = categorical(a, b)\nb = categorical(x, y)\n";
        let train = ds(
            schema,
            &[
                vec!["a", "x"],
                vec!["b", "y"],
                vec!["a", "x"],
                vec!["b", "y"],
            ],
            &["r", "g", "b", "r"],
        );
        for kind in [EncoderKind::Target, EncoderKind::JamesStein] {
            let enc = fit(kind, &train, &EncoderParams::default()).unwrap();
            let m = enc.transform(&train, Phase::Train);
            assert_eq!(m.data.n_cols(), 6);
            assert_eq!(m.provenance[2], (0, 2));
            assert_eq!(m.provenance[3], (1, 0));
        }
    }

    #[test]
    fn rescaler_maps_encoded_columns_into_unit_interval() {
        let schema = "class = y\na = categorical(a, b, c)\n";
        let train = ds(
            schema,
            &[vec!["a"], vec!["b"], vec!["c"]],
            &["0", "1", "0"],
        );
        let enc = fit(EncoderKind::Helmert, &train, &EncoderParams::default()).unwrap();
        let mut m = enc.transform(&train, Phase::Train);
        let norm = m.fit_rescaler();
        m.rescale(&norm);
        for row in 0..3 {
            for &v in m.data.row(row) {
                assert!((0.0..=1.0).contains(&v));
            }
        }
        assert_eq!(m.data.get(0, 0), 0.0);
        assert_eq!(m.data.get(1, 0), 1.0);
    }

    #[test]
    fn empty_training_data_is_rejected() {
        let schema = "class = y\na = categorical(a, b)\n";
        let empty = ds(schema, &[], &[]);
        assert!(matches!(
            fit(EncoderKind::Label, &empty, &EncoderParams::default()),
            Err(EncodeError::EmptyDomain(0))
        ));
        assert!(matches!(
            fit(EncoderKind::Target, &empty, &EncoderParams::default()),
            Err(EncodeError::MissingLabels)
        ));
    }
}
