//! Flat key=value run configuration.
//!
//! Every key is optional; omitted keys fall back to the defaults listed on
//! [`ExperimentConfig`]. Lines starting with `#` and blank lines are
//! skipped. List values are comma separated. The grid is the union of four
//! tracks: encoder cells (algorithms x encoders x thetas), M1 cells
//! (etas x thetas), M2 cells (betas x thetas), and stacked cells
//! (schemes x algorithms x thetas). Emptying a track's list drops the
//! track; emptying everything is a config error.

use std::path::{Path, PathBuf};

use crate::encode::EncoderKind;
use crate::experiment::pipeline::{CellSpec, PipelineSettings};
use crate::experiment::ExperimentError;
use crate::hybrid::StackScheme;
use crate::hyperbox::TieBreak;
use crate::learn::Algorithm;

/// How membership ties are resolved at prediction time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreakChoice {
    Deterministic,
    SeededRandom,
}

/// Parsed run configuration.
///
/// Defaults reproduce the reference protocol: all three incremental and
/// agglomerative learners, all eight encoders plus the numeric-only
/// baseline, thetas {0.1, 0.7, 1}, etas {0.1, 0.7, 1}, betas {25%, 50%,
/// 75%}, both stacking schemes, 10x4-fold cross-validation, deterministic
/// tie break, tree depth 10, seed 0, all cores, output under `reports`.
/// `datasets` defaults to empty, which makes the runner use every dataset
/// present in `data_dir`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub datasets: Vec<String>,
    pub data_dir: PathBuf,
    pub algorithms: Vec<Algorithm>,
    pub encoders: Vec<Option<EncoderKind>>,
    pub thetas: Vec<f64>,
    pub m1_etas: Vec<f64>,
    pub m2_betas: Vec<f64>,
    pub stacked_schemes: Vec<StackScheme>,
    pub cv_k: usize,
    pub cv_repeats: usize,
    pub seed: u64,
    pub jobs: usize,
    pub out: PathBuf,
    pub tie_break: TieBreakChoice,
    pub tree_max_depth: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            datasets: Vec::new(),
            data_dir: PathBuf::from("data"),
            algorithms: vec![Algorithm::Iol, Algorithm::Onln, Algorithm::Agglo2],
            encoders: {
                let mut all = vec![None];
                all.extend(EncoderKind::ALL.iter().copied().map(Some));
                all
            },
            thetas: vec![0.1, 0.7, 1.0],
            m1_etas: vec![0.1, 0.7, 1.0],
            m2_betas: vec![0.25, 0.5, 0.75],
            stacked_schemes: vec![StackScheme::TrainOnly, StackScheme::TrainValid],
            cv_k: 4,
            cv_repeats: 10,
            seed: 0,
            jobs: 0,
            out: PathBuf::from("reports"),
            tie_break: TieBreakChoice::Deterministic,
            tree_max_depth: 10,
        }
    }
}

fn err(line: usize, message: impl Into<String>) -> ExperimentError {
    ExperimentError::Config {
        line,
        message: message.into(),
    }
}

fn split_list(value: &str) -> Vec<&str> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect()
}

fn parse_floats(value: &str, line: usize, key: &str) -> Result<Vec<f64>, ExperimentError> {
    split_list(value)
        .into_iter()
        .map(|s| {
            s.parse::<f64>()
                .map_err(|_| err(line, format!("{key}: `{s}` is not a number")))
        })
        .collect()
}

fn parse_int<T: std::str::FromStr>(
    value: &str,
    line: usize,
    key: &str,
) -> Result<T, ExperimentError> {
    value
        .trim()
        .parse::<T>()
        .map_err(|_| err(line, format!("{key}: `{}` is not a valid integer", value.trim())))
}

impl ExperimentConfig {
    pub fn from_file(path: &Path) -> Result<ExperimentConfig, ExperimentError> {
        ExperimentConfig::parse(&std::fs::read_to_string(path)?)
    }

    pub fn parse(text: &str) -> Result<ExperimentConfig, ExperimentError> {
        let mut cfg = ExperimentConfig::default();
        let mut seen: Vec<String> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (key, value) = trimmed
                .split_once('=')
                .ok_or_else(|| err(line, "expected `key = value`"))?;
            let key = key.trim();
            let value = value.trim();
            if seen.iter().any(|k| k == key) {
                return Err(err(line, format!("duplicate key `{key}`")));
            }
            seen.push(key.to_string());
            match key {
                "datasets" => {
                    cfg.datasets = split_list(value).into_iter().map(String::from).collect();
                }
                "data.dir" => cfg.data_dir = PathBuf::from(value),
                "algorithms" => {
                    cfg.algorithms = split_list(value)
                        .into_iter()
                        .map(|s| {
                            Algorithm::parse(s)
                                .ok_or_else(|| err(line, format!("unknown algorithm `{s}`")))
                        })
                        .collect::<Result<_, _>>()?;
                }
                "encoders" => {
                    cfg.encoders = split_list(value)
                        .into_iter()
                        .map(|s| {
                            if s == "numeric-only" {
                                Ok(None)
                            } else {
                                EncoderKind::parse(s)
                                    .map(Some)
                                    .ok_or_else(|| err(line, format!("unknown encoder `{s}`")))
                            }
                        })
                        .collect::<Result<_, _>>()?;
                }
                "thetas" => cfg.thetas = parse_floats(value, line, key)?,
                "m1.etas" => cfg.m1_etas = parse_floats(value, line, key)?,
                "m2.betas" => {
                    // percentages are accepted and normalized to fractions
                    cfg.m2_betas = parse_floats(value, line, key)?
                        .into_iter()
                        .map(|b| if b > 1.0 { b / 100.0 } else { b })
                        .collect();
                }
                "stacked.schemes" => {
                    cfg.stacked_schemes = split_list(value)
                        .into_iter()
                        .map(|s| {
                            StackScheme::parse(s)
                                .ok_or_else(|| err(line, format!("unknown scheme `{s}`")))
                        })
                        .collect::<Result<_, _>>()?;
                }
                "cv.k" => cfg.cv_k = parse_int(value, line, key)?,
                "cv.repeats" => cfg.cv_repeats = parse_int(value, line, key)?,
                "seed" => cfg.seed = parse_int(value, line, key)?,
                "jobs" => cfg.jobs = parse_int(value, line, key)?,
                "out" => cfg.out = PathBuf::from(value),
                "tie-break" => {
                    cfg.tie_break = match value {
                        "deterministic" => TieBreakChoice::Deterministic,
                        "seeded-random" => TieBreakChoice::SeededRandom,
                        other => {
                            return Err(err(
                                line,
                                format!(
                                    "tie-break must be `deterministic` or `seeded-random`, \
                                     got `{other}`"
                                ),
                            ))
                        }
                    };
                }
                "tree.max-depth" => cfg.tree_max_depth = parse_int(value, line, key)?,
                other => return Err(err(line, format!("unknown key `{other}`"))),
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), ExperimentError> {
        let bad_unit = |name: &str, values: &[f64]| -> Result<(), ExperimentError> {
            for &v in values {
                if !(v > 0.0 && v <= 1.0) {
                    return Err(err(0, format!("{name} values must lie in (0, 1], got {v}")));
                }
            }
            Ok(())
        };
        bad_unit("thetas", &self.thetas)?;
        bad_unit("m1.etas", &self.m1_etas)?;
        bad_unit("m2.betas", &self.m2_betas)?;
        if self.cv_k < 2 {
            return Err(err(0, "cv.k must be at least 2"));
        }
        if self.cv_repeats == 0 {
            return Err(err(0, "cv.repeats must be at least 1"));
        }
        if self.tree_max_depth == 0 {
            return Err(err(0, "tree.max-depth must be at least 1"));
        }
        if self.cells().is_empty() {
            return Err(err(0, "the evaluation grid is empty"));
        }
        Ok(())
    }

    /// Pipeline knobs implied by this config.
    pub fn settings(&self) -> PipelineSettings {
        PipelineSettings {
            tie_break: match self.tie_break {
                TieBreakChoice::Deterministic => TieBreak::Deterministic,
                TieBreakChoice::SeededRandom => TieBreak::Seeded(self.seed),
            },
            tree_max_depth: self.tree_max_depth,
            hybrid_seed: self.seed,
            encoder_params: Default::default(),
        }
    }

    /// Every grid cell, in a fixed track-by-track order.
    pub fn cells(&self) -> Vec<CellSpec> {
        let mut cells = Vec::new();
        for &theta in &self.thetas {
            for &algorithm in &self.algorithms {
                for &encoder in &self.encoders {
                    cells.push(CellSpec::Encoder {
                        algorithm,
                        encoder,
                        theta,
                    });
                }
            }
        }
        for &theta in &self.thetas {
            for &eta in &self.m1_etas {
                cells.push(CellSpec::MixedM1 { theta, eta });
            }
        }
        for &theta in &self.thetas {
            for &beta_fraction in &self.m2_betas {
                cells.push(CellSpec::MixedM2 {
                    theta,
                    beta_fraction,
                });
            }
        }
        for &theta in &self.thetas {
            for &scheme in &self.stacked_schemes {
                for &algorithm in &self.algorithms {
                    cells.push(CellSpec::Stacked {
                        algorithm,
                        scheme,
                        theta,
                    });
                }
            }
        }
        cells
    }
}
