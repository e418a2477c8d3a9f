//! Evaluation of one grid cell on one train/test split.
//!
//! Fitting sees only the training data: `fit_cell` takes the train set and
//! nothing else, so fold leakage is ruled out by the signature rather than
//! by discipline. Scoring consumes the fitted state plus the test set.

use crate::data::{complement, cv_splits, Dataset, IntervalMatrix, Normalizer};
use crate::encode::{self, EncoderKind, EncoderParams, FittedEncoder, Phase};
use crate::experiment::ExperimentError;
use crate::hybrid::{train_stacked, HybridConfig, StackScheme, StackedModel};
use crate::hyperbox::{GfmmModel, TieBreak};
use crate::learn::{Algorithm, LearnerConfig};
use crate::mixed::{beta_from_fraction, train_m1, train_m2, CatDistTable, M1Config, M2Config};
use crate::stats::{cba, ConfusionMatrix};

/// One point of the evaluation grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CellSpec {
    /// A numeric-feature learner, optionally fed encoded categorical
    /// columns. `encoder: None` is the numeric-only baseline.
    Encoder {
        algorithm: Algorithm,
        encoder: Option<EncoderKind>,
        theta: f64,
    },
    /// Mixed learner with per-dimension categorical bounds.
    MixedM1 { theta: f64, eta: f64 },
    /// Mixed learner with bit-string categorical sets; `beta_fraction` is
    /// the share of categorical dimensions that must match.
    MixedM2 { theta: f64, beta_fraction: f64 },
    /// Two-level stack of a numeric GFMM and a categorical tree.
    Stacked {
        algorithm: Algorithm,
        scheme: StackScheme,
        theta: f64,
    },
}

fn trim(v: f64) -> String {
    if v.fract() == 0.0 {
        format!("{}", v as i64)
    } else {
        format!("{v}")
    }
}

impl CellSpec {
    pub fn theta(&self) -> f64 {
        match *self {
            CellSpec::Encoder { theta, .. }
            | CellSpec::MixedM1 { theta, .. }
            | CellSpec::MixedM2 { theta, .. }
            | CellSpec::Stacked { theta, .. } => theta,
        }
    }

    /// Stable method label used in reports; matches the reference column
    /// naming.
    pub fn method(&self) -> String {
        match *self {
            CellSpec::Encoder {
                algorithm, encoder, ..
            } => {
                let enc = encoder.map_or("numeric-only", EncoderKind::name);
                format!("{}+{}", algorithm.name(), enc)
            }
            CellSpec::MixedM1 { eta, .. } => format!("m1-eta-{}", trim(eta)),
            CellSpec::MixedM2 { beta_fraction, .. } => {
                format!("m2-beta-{}", (beta_fraction * 100.0).round() as i64)
            }
            CellSpec::Stacked {
                algorithm, scheme, ..
            } => {
                let s = match scheme {
                    StackScheme::TrainOnly => "a",
                    StackScheme::TrainValid => "b",
                };
                format!("{}-{}", s, algorithm.name())
            }
        }
    }

    /// Report family the cell belongs to. The two mixed learners share one
    /// family so they are ranked against each other.
    pub fn track(&self) -> &'static str {
        match self {
            CellSpec::Encoder { .. } => "encoder",
            CellSpec::MixedM1 { .. } | CellSpec::MixedM2 { .. } => "mixed",
            CellSpec::Stacked { .. } => "stacked",
        }
    }

    /// Whether the cell can run on data of this shape at all. Inapplicable
    /// cells appear in reports with "-" markers.
    pub fn applicable(&self, n_numeric: usize, n_categorical: usize) -> bool {
        match self {
            CellSpec::Encoder { encoder: None, .. } => n_numeric > 0,
            CellSpec::Encoder { .. } => n_categorical > 0,
            CellSpec::MixedM1 { .. } | CellSpec::MixedM2 { .. } => true,
            CellSpec::Stacked { .. } => n_numeric > 0 && n_categorical > 0,
        }
    }
}

/// Knobs shared by every cell of a run.
#[derive(Debug, Clone)]
pub struct PipelineSettings {
    pub tie_break: TieBreak,
    pub tree_max_depth: usize,
    /// Seed for the validation half-split of stacking scheme B.
    pub hybrid_seed: u64,
    pub encoder_params: EncoderParams,
}

impl Default for PipelineSettings {
    fn default() -> Self {
        PipelineSettings {
            tie_break: TieBreak::Deterministic,
            tree_max_depth: 10,
            hybrid_seed: 0,
            encoder_params: EncoderParams::default(),
        }
    }
}

/// Everything learned from one training fold.
#[derive(Debug, Clone)]
pub enum FittedCell {
    Gfmm {
        normalizer: Normalizer,
        encoder: Option<(FittedEncoder, Normalizer)>,
        model: GfmmModel,
    },
    Mixed {
        normalizer: Normalizer,
        model: GfmmModel,
    },
    Stacked {
        normalizer: Normalizer,
        model: StackedModel,
    },
}

/// Scores of one fitted cell on one test set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FoldOutcome {
    pub cba: f64,
    pub accuracy: f64,
    pub boxes: usize,
    /// (times the membership tie-break fired, correct predictions among
    /// them); None when the model has no such tie-break (stacked).
    pub secondary: Option<(usize, usize)>,
}

/// Cell means over all folds of a cross-validation run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellSummary {
    pub mean_cba: f64,
    pub mean_accuracy: f64,
    pub mean_boxes: f64,
    pub secondary: Option<(f64, f64)>,
    pub n_folds: usize,
}

fn numeric_intervals(ds: &Dataset) -> IntervalMatrix {
    let n = ds.n_numeric();
    let mut lo = Vec::with_capacity(ds.n_rows() * n);
    let mut hi = Vec::with_capacity(ds.n_rows() * n);
    for r in 0..ds.n_rows() {
        lo.extend_from_slice(ds.numeric_lo(r));
        hi.extend_from_slice(ds.numeric_hi(r));
    }
    IntervalMatrix::new(ds.n_rows(), n, lo, hi)
}

fn cat_rows(ds: &Dataset) -> Vec<&[crate::data::CatValue]> {
    (0..ds.n_rows()).map(|r| ds.categorical_row(r)).collect()
}

/// Train-fold inputs for a GFMM learner: normalized numeric block, plus the
/// rescaled encoded block when an encoder is in play.
fn gfmm_train_matrix(
    train: &Dataset,
    encoder: Option<EncoderKind>,
    params: &EncoderParams,
) -> Result<(IntervalMatrix, Normalizer, Option<(FittedEncoder, Normalizer)>), ExperimentError> {
    let mut numeric = numeric_intervals(train);
    let normalizer = Normalizer::fit_intervals(&numeric);
    normalizer.transform_intervals(&mut numeric);
    match encoder {
        None => Ok((numeric, normalizer, None)),
        Some(kind) => {
            let fitted = encode::fit(kind, train, params)?;
            let mut encoded = fitted.transform(train, Phase::Train);
            let rescaler = encoded.fit_rescaler();
            encoded.rescale(&rescaler);
            let full = numeric.hconcat(&IntervalMatrix::from_crisp(&encoded.data));
            Ok((full, normalizer, Some((fitted, rescaler))))
        }
    }
}

/// Test-fold inputs mirroring [`gfmm_train_matrix`], built from fitted
/// state only.
fn gfmm_test_matrix(
    test: &Dataset,
    normalizer: &Normalizer,
    encoder: &Option<(FittedEncoder, Normalizer)>,
) -> IntervalMatrix {
    let mut numeric = numeric_intervals(test);
    normalizer.transform_intervals(&mut numeric);
    match encoder {
        None => numeric,
        Some((fitted, rescaler)) => {
            let mut encoded = fitted.transform(test, Phase::Test);
            encoded.rescale(rescaler);
            numeric.hconcat(&IntervalMatrix::from_crisp(&encoded.data))
        }
    }
}

/// Fits one cell on the training data alone.
///
/// Returns `Ok(None)` when the cell does not apply to this data shape,
/// mirroring the "-" cells of the reference grids.
pub fn fit_cell(
    train: &Dataset,
    spec: &CellSpec,
    settings: &PipelineSettings,
) -> Result<Option<FittedCell>, ExperimentError> {
    if !spec.applicable(train.n_numeric(), train.n_categorical()) {
        return Ok(None);
    }
    let fitted = match *spec {
        CellSpec::Encoder {
            algorithm,
            encoder,
            theta,
        } => {
            let (matrix, normalizer, encoder) =
                gfmm_train_matrix(train, encoder, &settings.encoder_params)?;
            let mut cfg = LearnerConfig::new(theta);
            cfg.tie_break = settings.tie_break;
            let model = crate::learn::train(algorithm, &matrix, train.labels(), &cfg);
            FittedCell::Gfmm {
                normalizer,
                encoder,
                model,
            }
        }
        CellSpec::MixedM1 { theta, eta } => {
            let mut numeric = numeric_intervals(train);
            let normalizer = Normalizer::fit_intervals(&numeric);
            normalizer.transform_intervals(&mut numeric);
            let table = CatDistTable::fit(train);
            let mut cfg = M1Config::new(theta, eta);
            cfg.tie_break = settings.tie_break;
            let model = train_m1(&numeric, &cat_rows(train), train.labels(), &table, &cfg);
            FittedCell::Mixed { normalizer, model }
        }
        CellSpec::MixedM2 {
            theta,
            beta_fraction,
        } => {
            let mut numeric = numeric_intervals(train);
            let normalizer = Normalizer::fit_intervals(&numeric);
            normalizer.transform_intervals(&mut numeric);
            let sizes: Vec<usize> = train.domains().iter().map(Vec::len).collect();
            let beta = beta_from_fraction(beta_fraction, sizes.len());
            let mut cfg = M2Config::new(theta, beta);
            cfg.tie_break = settings.tie_break;
            let model = train_m2(&numeric, &cat_rows(train), train.labels(), &sizes, &cfg);
            FittedCell::Mixed { normalizer, model }
        }
        CellSpec::Stacked {
            algorithm,
            scheme,
            theta,
        } => {
            let mut numeric = numeric_intervals(train);
            let normalizer = Normalizer::fit_intervals(&numeric);
            normalizer.transform_intervals(&mut numeric);
            let normalized = train.with_numeric(&numeric);
            let mut cfg = HybridConfig::new(algorithm, theta);
            cfg.learner.tie_break = settings.tie_break;
            cfg.max_depth = settings.tree_max_depth;
            cfg.seed = settings.hybrid_seed;
            let model = train_stacked(&normalized, &cfg, scheme)?;
            FittedCell::Stacked { normalizer, model }
        }
    };
    Ok(Some(fitted))
}

/// Scores a fitted cell on held-out data.
pub fn score_cell(fitted: &FittedCell, test: &Dataset) -> Result<FoldOutcome, ExperimentError> {
    let n_classes = test.n_classes();
    let actual = test.labels();
    let mut predicted = Vec::with_capacity(test.n_rows());
    let mut secondary = None;
    let boxes;
    match fitted {
        FittedCell::Gfmm {
            normalizer,
            encoder,
            model,
        } => {
            let matrix = gfmm_test_matrix(test, normalizer, encoder);
            let mut fired = 0usize;
            let mut fired_right = 0usize;
            for r in 0..matrix.n_rows() {
                let p = model.predict(matrix.lo_row(r), matrix.hi_row(r), &[]);
                if p.used_secondary {
                    fired += 1;
                    fired_right += usize::from(p.class == actual[r]);
                }
                predicted.push(p.class);
            }
            secondary = Some((fired, fired_right));
            boxes = model.boxes.len();
        }
        FittedCell::Mixed { normalizer, model } => {
            let mut numeric = numeric_intervals(test);
            normalizer.transform_intervals(&mut numeric);
            let mut fired = 0usize;
            let mut fired_right = 0usize;
            for r in 0..numeric.n_rows() {
                let p = model.predict(
                    numeric.lo_row(r),
                    numeric.hi_row(r),
                    test.categorical_row(r),
                );
                if p.used_secondary {
                    fired += 1;
                    fired_right += usize::from(p.class == actual[r]);
                }
                predicted.push(p.class);
            }
            secondary = Some((fired, fired_right));
            boxes = model.boxes.len();
        }
        FittedCell::Stacked { normalizer, model } => {
            let mut numeric = numeric_intervals(test);
            normalizer.transform_intervals(&mut numeric);
            for r in 0..numeric.n_rows() {
                predicted.push(model.predict(
                    numeric.lo_row(r),
                    numeric.hi_row(r),
                    test.categorical_row(r),
                ));
            }
            boxes = model.gfmm().boxes.len();
        }
    }
    let matrix = ConfusionMatrix::from_predictions(actual, &predicted, n_classes);
    let right = actual
        .iter()
        .zip(&predicted)
        .filter(|(a, p)| a == p)
        .count();
    Ok(FoldOutcome {
        cba: cba(&matrix)?,
        accuracy: right as f64 / actual.len() as f64,
        boxes,
        secondary,
    })
}

/// (train, test) row-index pairs for every fold of every repeat,
/// flattened in (repeat, fold) order.
pub fn fold_pairs(
    labels: &[u32],
    k: usize,
    repeats: usize,
    seed: u64,
) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = labels.len();
    cv_splits(labels, k, repeats, seed)
        .into_iter()
        .flat_map(|folds| {
            folds
                .into_iter()
                .map(|test| (complement(n, &test), test))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Fits on `train` and scores on `test`.
pub fn evaluate_split(
    train: &Dataset,
    test: &Dataset,
    spec: &CellSpec,
    settings: &PipelineSettings,
) -> Result<Option<FoldOutcome>, ExperimentError> {
    match fit_cell(train, spec, settings)? {
        None => Ok(None),
        Some(fitted) => score_cell(&fitted, test).map(Some),
    }
}

/// Evaluates one fold of a dataset, given train and test row indices.
pub fn evaluate_fold(
    ds: &Dataset,
    train: &[usize],
    test: &[usize],
    spec: &CellSpec,
    settings: &PipelineSettings,
) -> Result<Option<FoldOutcome>, ExperimentError> {
    evaluate_split(&ds.subset(train), &ds.subset(test), spec, settings)
}

/// Means over every fold. `Ok(None)` when the cell does not apply.
pub fn evaluate_cv(
    ds: &Dataset,
    folds: &[(Vec<usize>, Vec<usize>)],
    spec: &CellSpec,
    settings: &PipelineSettings,
) -> Result<Option<CellSummary>, ExperimentError> {
    let mut outcomes = Vec::with_capacity(folds.len());
    for (train, test) in folds {
        match evaluate_fold(ds, train, test, spec, settings)? {
            None => return Ok(None),
            Some(o) => outcomes.push(o),
        }
    }
    Ok(Some(summarize(&outcomes)))
}

/// Fold means. Panics on an empty slice.
pub fn summarize(outcomes: &[FoldOutcome]) -> CellSummary {
    let n = outcomes.len() as f64;
    let secondary = outcomes[0].secondary.map(|_| {
        let (mut t, mut c) = (0.0, 0.0);
        for o in outcomes {
            let (ot, oc) = o.secondary.expect("uniform across folds");
            t += ot as f64;
            c += oc as f64;
        }
        (t / n, c / n)
    });
    CellSummary {
        mean_cba: outcomes.iter().map(|o| o.cba).sum::<f64>() / n,
        mean_accuracy: outcomes.iter().map(|o| o.accuracy).sum::<f64>() / n,
        mean_boxes: outcomes.iter().map(|o| o.boxes as f64).sum::<f64>() / n,
        secondary,
        n_folds: outcomes.len(),
    }
}
