//! Fresh runs printed next to the bundled reference results.
//!
//! Reproduction is inexact by nature: the reference numbers came from one
//! cross-validation randomization and ours come from another, so agreement
//! is judged in tolerance bands, not equality. The three ordering claims
//! are checked on two layers: once against the reference tables themselves
//! and once against a local rerun, which needs the full dataset roster.

use std::path::PathBuf;

use rayon::prelude::*;

use crate::data::Dataset;
use crate::encode::EncoderKind;
use crate::experiment::pipeline::{
    evaluate_cv, fold_pairs, CellSpec, CellSummary, PipelineSettings,
};
use crate::experiment::reference::{
    EncoderGrid, BOXES_AGGLO2, BOXES_IOL, BOXES_ONLN, CBA_AGGLO2, CBA_IOL, CBA_ONLN, DATASETS,
    ENCODER_COLUMNS, ENCODER_MEAN_RANKS, LEARNERS, MIXED_BOXES, MIXED_CBA, MIXED_COLUMNS,
    MIXED_DATASETS, MIXED_MEAN_RANKS, STACKED_CBA, STACKED_COLUMNS, THETAS,
};
use crate::experiment::runner::load_dataset;
use crate::experiment::ExperimentError;
use crate::hybrid::StackScheme;
use crate::learn::Algorithm;
use crate::stats::rank_methods;

/// One reference value next to its freshly computed counterpart.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub dataset: String,
    pub method: String,
    pub theta: Option<f64>,
    /// "cba" or "boxes".
    pub metric: &'static str,
    pub reference: f64,
    pub reproduced: f64,
}

impl Comparison {
    pub fn delta(&self) -> f64 {
        (self.reference - self.reproduced).abs()
    }
}

#[derive(Debug, Clone)]
pub struct ReproduceOptions {
    pub data_dir: PathBuf,
    /// Empty means every roster dataset found on disk.
    pub datasets: Vec<String>,
    pub cv_k: usize,
    pub cv_repeats: usize,
    pub seed: u64,
}

impl Default for ReproduceOptions {
    fn default() -> Self {
        ReproduceOptions {
            data_dir: PathBuf::from("data"),
            datasets: Vec::new(),
            cv_k: 4,
            cv_repeats: 10,
            seed: 0,
        }
    }
}

/// Verdict of one ordering claim on locally rerun data.
#[derive(Debug, Clone, PartialEq)]
pub enum LocalVerdict {
    Pass(String),
    Fail(String),
    /// The claim ranges over a roster that is not fully on disk.
    Insufficient { have: usize, need: usize },
}

#[derive(Debug, Clone)]
pub struct ClaimOutcome {
    pub name: &'static str,
    pub description: &'static str,
    /// Whether the claim holds inside the reference tables.
    pub reference_pass: bool,
    pub reference_detail: String,
    pub local: LocalVerdict,
}

#[derive(Debug, Clone)]
pub struct ReproduceReport {
    /// Datasets actually compared.
    pub datasets: Vec<String>,
    pub comparisons: Vec<Comparison>,
    pub claims: Vec<ClaimOutcome>,
}

fn algorithm_of(learner: &str) -> Algorithm {
    Algorithm::parse(learner).expect("roster learner")
}

fn encoder_of(column: &str) -> Option<EncoderKind> {
    if column == "numeric-only" {
        None
    } else {
        Some(EncoderKind::parse(column).expect("roster encoder"))
    }
}

fn stacked_spec(column: &str, theta: f64) -> CellSpec {
    let (scheme, learner) = column.split_once('-').expect("scheme-learner");
    CellSpec::Stacked {
        algorithm: algorithm_of(learner),
        scheme: StackScheme::parse(scheme).expect("roster scheme"),
        theta,
    }
}

fn mixed_spec(column: &str, theta: f64) -> CellSpec {
    match column {
        "m1-eta-0.1" => CellSpec::MixedM1 { theta, eta: 0.1 },
        "m1-eta-0.7" => CellSpec::MixedM1 { theta, eta: 0.7 },
        "m1-eta-1" => CellSpec::MixedM1 { theta, eta: 1.0 },
        "m2-beta-25" => CellSpec::MixedM2 { theta, beta_fraction: 0.25 },
        "m2-beta-50" => CellSpec::MixedM2 { theta, beta_fraction: 0.5 },
        "m2-beta-75" => CellSpec::MixedM2 { theta, beta_fraction: 0.75 },
        other => panic!("unknown mixed column {other}"),
    }
}

fn encoder_grids(learner_idx: usize) -> (&'static EncoderGrid, &'static EncoderGrid) {
    match learner_idx {
        0 => (&CBA_IOL, &BOXES_IOL),
        1 => (&CBA_ONLN, &BOXES_ONLN),
        _ => (&CBA_AGGLO2, &BOXES_AGGLO2),
    }
}

/// Evaluates a batch of cells on shared folds, in parallel, keeping order.
fn run_cells(
    ds: &Dataset,
    folds: &[(Vec<usize>, Vec<usize>)],
    specs: &[CellSpec],
) -> Result<Vec<Option<CellSummary>>, ExperimentError> {
    let settings = PipelineSettings::default();
    specs
        .par_iter()
        .map(|spec| evaluate_cv(ds, folds, spec, &settings))
        .collect()
}

/// All reference-vs-fresh comparisons available for one roster dataset.
pub fn compare_dataset(
    name: &str,
    ds: &Dataset,
    options: &ReproduceOptions,
) -> Result<Vec<Comparison>, ExperimentError> {
    let Some(row) = DATASETS.iter().position(|d| d.name == name) else {
        return Ok(Vec::new());
    };
    let folds = fold_pairs(ds.labels(), options.cv_k, options.cv_repeats, options.seed);
    let mut specs: Vec<CellSpec> = Vec::new();
    let mut refs: Vec<(String, Option<f64>, f64, Option<f64>)> = Vec::new();

    for (li, learner) in LEARNERS.iter().enumerate() {
        let (cba_grid, boxes_grid) = encoder_grids(li);
        for (ti, &theta) in THETAS.iter().enumerate() {
            for (ei, column) in ENCODER_COLUMNS.iter().enumerate() {
                let Some(ref_cba) = cba_grid[row][ti][ei] else {
                    continue;
                };
                specs.push(CellSpec::Encoder {
                    algorithm: algorithm_of(learner),
                    encoder: encoder_of(column),
                    theta,
                });
                refs.push((
                    format!("{learner}+{column}"),
                    Some(theta),
                    ref_cba,
                    boxes_grid[row][ti][ei],
                ));
            }
        }
    }
    for (cba_row, boxes_row) in MIXED_CBA.iter().zip(&MIXED_BOXES) {
        if cba_row.dataset != name {
            continue;
        }
        let theta = cba_row.theta;
        for (ci, column) in MIXED_COLUMNS.iter().enumerate() {
            specs.push(mixed_spec(column, theta.unwrap_or(1.0)));
            refs.push((
                column.to_string(),
                theta,
                cba_row.values[ci],
                Some(boxes_row.values[ci]),
            ));
        }
    }
    if let Some(mi) = MIXED_DATASETS.iter().position(|d| *d == name) {
        for (ti, &theta) in THETAS.iter().enumerate() {
            for (ci, column) in STACKED_COLUMNS.iter().enumerate() {
                specs.push(stacked_spec(column, theta));
                refs.push((
                    column.to_string(),
                    Some(theta),
                    STACKED_CBA[mi][ti][ci],
                    None,
                ));
            }
        }
    }

    let summaries = run_cells(ds, &folds, &specs)?;
    let mut out = Vec::new();
    for ((method, theta, ref_cba, ref_boxes), summary) in refs.into_iter().zip(summaries) {
        let Some(summary) = summary else { continue };
        out.push(Comparison {
            dataset: name.to_string(),
            method: method.clone(),
            theta,
            metric: "cba",
            reference: ref_cba,
            reproduced: summary.mean_cba,
        });
        if let Some(ref_boxes) = ref_boxes {
            out.push(Comparison {
                dataset: name.to_string(),
                method,
                theta,
                metric: "boxes",
                reference: ref_boxes,
                reproduced: summary.mean_boxes,
            });
        }
    }
    Ok(out)
}

fn top3(values: &[(String, f64)]) -> Vec<String> {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap());
    sorted.into_iter().take(3).map(|(n, _)| n).collect()
}

/// Claim: at theta 0.1 the AGGLO-2 learner ranks the target and
/// james-stein encoders in its top three.
fn claim_encoder_top3(reference: bool, ranks: &[(String, f64)]) -> (bool, String) {
    let top = top3(ranks);
    let pass = top.contains(&"target".to_string()) && top.contains(&"jamesstein".to_string());
    let source = if reference { "reference" } else { "local" };
    (
        pass,
        format!("{source} top three: {}", top.join(", ")),
    )
}

/// Claim: at theta 0.7, averaging CBA over the three learners, stacking
/// scheme A beats or ties scheme B on at least 8 of the 11 mixed datasets.
fn claim_stacked_a_over_b(
    reference: bool,
    per_dataset: &[(String, f64, f64)],
) -> (bool, String) {
    let wins = per_dataset.iter().filter(|(_, a, b)| a >= b).count();
    let losses: Vec<&str> = per_dataset
        .iter()
        .filter(|(_, a, b)| a < b)
        .map(|(n, _, _)| n.as_str())
        .collect();
    let source = if reference { "reference" } else { "local" };
    let detail = if losses.is_empty() {
        format!("{source}: scheme A wins or ties on all {} datasets", per_dataset.len())
    } else {
        format!(
            "{source}: scheme A wins or ties on {wins} of {} datasets (B ahead on {})",
            per_dataset.len(),
            losses.join(", ")
        )
    };
    (wins >= 8, detail)
}

/// Claim: at theta 0.7 the eta=0.1 bound-pair learner has the best mean
/// rank of the six mixed-learner settings.
fn claim_m1_eta01_best(reference: bool, mean_ranks: &[(String, f64)]) -> (bool, String) {
    let best = mean_ranks
        .iter()
        .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
        .unwrap();
    let source = if reference { "reference" } else { "local" };
    (
        best.0 == "m1-eta-0.1",
        format!("{source} best mean rank: {} at {:.4}", best.0, best.1),
    )
}

/// The three ordering claims evaluated inside the reference tables only.
pub fn reference_claims() -> Vec<(&'static str, &'static str, bool, String)> {
    let agglo2_ranks: Vec<(String, f64)> = ENCODER_COLUMNS[1..]
        .iter()
        .enumerate()
        .map(|(i, c)| (c.to_string(), ENCODER_MEAN_RANKS[i][0][2]))
        .collect();
    let (p1, d1) = claim_encoder_top3(true, &agglo2_ranks);

    let per_dataset: Vec<(String, f64, f64)> = MIXED_DATASETS
        .iter()
        .enumerate()
        .map(|(di, name)| {
            let row = &STACKED_CBA[di][1];
            let a = (row[0] + row[1] + row[2]) / 3.0;
            let b = (row[3] + row[4] + row[5]) / 3.0;
            (name.to_string(), a, b)
        })
        .collect();
    let (p2, d2) = claim_stacked_a_over_b(true, &per_dataset);

    let mixed_ranks: Vec<(String, f64)> = MIXED_COLUMNS
        .iter()
        .enumerate()
        .map(|(i, c)| (c.to_string(), MIXED_MEAN_RANKS[1][i]))
        .collect();
    let (p3, d3) = claim_m1_eta01_best(true, &mixed_ranks);

    vec![
        (
            "encoder-top3",
            "target and james-stein encodings rank in the top three for \
             AGGLO-2 at theta 0.1",
            p1,
            d1,
        ),
        (
            "stacked-a-over-b",
            "stacking scheme A beats or ties scheme B on at least 8 of the \
             11 mixed datasets at theta 0.7 (mean CBA over learners)",
            p2,
            d2,
        ),
        (
            "m1-eta-01-best",
            "the eta=0.1 bound-pair learner has the best mean rank of the \
             six mixed settings at theta 0.7",
            p3,
            d3,
        ),
    ]
}

fn insufficient(available: &[String], needed: &[&str]) -> Option<LocalVerdict> {
    let have = needed
        .iter()
        .filter(|n| available.iter().any(|a| a == *n))
        .count();
    (have < needed.len()).then_some(LocalVerdict::Insufficient {
        have,
        need: needed.len(),
    })
}

/// Reruns the three ordering claims on local data. Each claim ranges over
/// a fixed roster; with part of it missing the verdict is `Insufficient`.
pub fn local_claims(
    available: &[(String, Dataset)],
    options: &ReproduceOptions,
) -> Result<Vec<LocalVerdict>, ExperimentError> {
    let names: Vec<String> = available.iter().map(|(n, _)| n.clone()).collect();
    let roster: Vec<&str> = DATASETS.iter().map(|d| d.name).collect();
    let get = |name: &str| &available.iter().find(|(n, _)| n == name).unwrap().1;
    let settings = PipelineSettings::default();
    let mut verdicts = Vec::new();

    // encoder claim: joint ranks of all learner x encoder settings at
    // theta 0.1 over the full roster, then AGGLO-2's eight columns
    verdicts.push(match insufficient(&names, &roster) {
        Some(v) => v,
        None => {
            let mut scores: Vec<Vec<f64>> = Vec::new();
            for info in &DATASETS {
                let ds = get(info.name);
                let folds =
                    fold_pairs(ds.labels(), options.cv_k, options.cv_repeats, options.seed);
                let mut row = Vec::new();
                for learner in LEARNERS {
                    for column in &ENCODER_COLUMNS[1..] {
                        let spec = CellSpec::Encoder {
                            algorithm: algorithm_of(learner),
                            encoder: encoder_of(column),
                            theta: 0.1,
                        };
                        let s = evaluate_cv(ds, &folds, &spec, &settings)?
                            .expect("encoders apply to every roster dataset");
                        row.push(s.mean_cba);
                    }
                }
                scores.push(row);
            }
            let ranks = rank_methods(&scores, true).mean_ranks();
            let agglo2: Vec<(String, f64)> = ENCODER_COLUMNS[1..]
                .iter()
                .enumerate()
                .map(|(ei, c)| (c.to_string(), ranks[2 * 8 + ei]))
                .collect();
            let (pass, detail) = claim_encoder_top3(false, &agglo2);
            if pass {
                LocalVerdict::Pass(detail)
            } else {
                LocalVerdict::Fail(detail)
            }
        }
    });

    // stacking claim: scheme means per mixed dataset at theta 0.7
    verdicts.push(match insufficient(&names, &MIXED_DATASETS) {
        Some(v) => v,
        None => {
            let mut per_dataset = Vec::new();
            for name in MIXED_DATASETS {
                let ds = get(name);
                let folds =
                    fold_pairs(ds.labels(), options.cv_k, options.cv_repeats, options.seed);
                let specs: Vec<CellSpec> = STACKED_COLUMNS
                    .iter()
                    .map(|c| stacked_spec(c, 0.7))
                    .collect();
                let sums = run_cells(ds, &folds, &specs)?;
                let v: Vec<f64> = sums
                    .into_iter()
                    .map(|s| s.expect("stacking applies to mixed datasets").mean_cba)
                    .collect();
                let a = (v[0] + v[1] + v[2]) / 3.0;
                let b = (v[3] + v[4] + v[5]) / 3.0;
                per_dataset.push((name.to_string(), a, b));
            }
            let (pass, detail) = claim_stacked_a_over_b(false, &per_dataset);
            if pass {
                LocalVerdict::Pass(detail)
            } else {
                LocalVerdict::Fail(detail)
            }
        }
    });

    // mixed claim: six-column rank table over the full roster at theta 0.7
    verdicts.push(match insufficient(&names, &roster) {
        Some(v) => v,
        None => {
            let mut scores: Vec<Vec<f64>> = Vec::new();
            for info in &DATASETS {
                let ds = get(info.name);
                let folds =
                    fold_pairs(ds.labels(), options.cv_k, options.cv_repeats, options.seed);
                let specs: Vec<CellSpec> = MIXED_COLUMNS
                    .iter()
                    .map(|c| mixed_spec(c, 0.7))
                    .collect();
                let sums = run_cells(ds, &folds, &specs)?;
                scores.push(
                    sums.into_iter()
                        .map(|s| s.expect("mixed learners apply everywhere").mean_cba)
                        .collect(),
                );
            }
            let ranks = rank_methods(&scores, true).mean_ranks();
            let pairs: Vec<(String, f64)> = MIXED_COLUMNS
                .iter()
                .zip(&ranks)
                .map(|(c, &r)| (c.to_string(), r))
                .collect();
            let (pass, detail) = claim_m1_eta01_best(false, &pairs);
            if pass {
                LocalVerdict::Pass(detail)
            } else {
                LocalVerdict::Fail(detail)
            }
        }
    });

    Ok(verdicts)
}

/// Loads data, compares every available roster dataset, and evaluates the
/// ordering claims on both layers.
pub fn reproduce(options: &ReproduceOptions) -> Result<ReproduceReport, ExperimentError> {
    let requested: Vec<String> = if options.datasets.is_empty() {
        DATASETS
            .iter()
            .map(|d| d.name.to_string())
            .filter(|n| {
                let slug = crate::experiment::runner::dataset_slug(n);
                options.data_dir.join(format!("{slug}.csv")).is_file()
            })
            .collect()
    } else {
        options.datasets.clone()
    };
    let mut loaded: Vec<(String, Dataset)> = Vec::new();
    for name in &requested {
        loaded.push((name.clone(), load_dataset(&options.data_dir, name)?));
    }

    let mut comparisons = Vec::new();
    for (name, ds) in &loaded {
        comparisons.extend(compare_dataset(name, ds, options)?);
    }
    let locals = local_claims(&loaded, options)?;
    let claims = reference_claims()
        .into_iter()
        .zip(locals)
        .map(|((name, description, reference_pass, reference_detail), local)| ClaimOutcome {
            name,
            description,
            reference_pass,
            reference_detail,
            local,
        })
        .collect();
    Ok(ReproduceReport {
        datasets: requested,
        comparisons,
        claims,
    })
}

/// Plain-text side-by-side table.
pub fn render_comparisons(comparisons: &[Comparison]) -> String {
    let mut out = String::from(
        "dataset              method           theta metric  reference reproduced     delta\n",
    );
    for c in comparisons {
        let theta = c
            .theta
            .map_or("-".to_string(), |t| format!("{t}"));
        out.push_str(&format!(
            "{:<20} {:<16} {:>5} {:<6} {:>10.5} {:>10.5} {:>9.5}\n",
            c.dataset,
            c.method,
            theta,
            c.metric,
            c.reference,
            c.reproduced,
            c.delta()
        ));
    }
    out
}

/// Plain-text claim report, one block per claim.
pub fn render_claims(claims: &[ClaimOutcome]) -> String {
    let mut out = String::new();
    for claim in claims {
        out.push_str(&format!("claim {}: {}\n", claim.name, claim.description));
        out.push_str(&format!(
            "  reference layer: {} ({})\n",
            if claim.reference_pass { "PASS" } else { "FAIL" },
            claim.reference_detail
        ));
        let line = match &claim.local {
            LocalVerdict::Pass(d) => format!("PASS ({d})"),
            LocalVerdict::Fail(d) => format!("FAIL ({d})"),
            LocalVerdict::Insufficient { have, need } => format!(
                "INSUFFICIENT DATA (have {have} of {need} datasets; \
                 fetch the rest with tools/fetch_data.py)"
            ),
        };
        out.push_str(&format!("  local rerun layer: {line}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_three_reference_claims_hold_in_the_reference_tables() {
        let claims = reference_claims();
        assert_eq!(claims.len(), 3);
        for (name, _, pass, detail) in &claims {
            assert!(pass, "{name}: {detail}");
        }
        assert!(claims[0].3.contains("target"));
        assert!(claims[1].3.contains("10 of 11"));
        assert!(claims[1].3.contains("post operative"));
        assert!(claims[2].3.contains("m1-eta-0.1"));
        assert!(claims[2].3.contains("1.6071"));
    }

    #[test]
    fn mixed_cba_and_boxes_rows_stay_paired() {
        for (c, b) in MIXED_CBA.iter().zip(MIXED_BOXES.iter()) {
            assert_eq!(c.dataset, b.dataset);
            assert_eq!(c.theta, b.theta);
        }
    }

    #[test]
    fn local_claims_report_missing_rosters_without_running() {
        let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
        let options = ReproduceOptions {
            data_dir: dir.clone(),
            ..ReproduceOptions::default()
        };
        let loaded: Vec<(String, Dataset)> = ["zoo", "tic tac toe"]
            .iter()
            .map(|n| {
                (
                    n.to_string(),
                    load_dataset(&dir, n).unwrap(),
                )
            })
            .collect();
        let verdicts = local_claims(&loaded, &options).unwrap();
        assert_eq!(
            verdicts[0],
            LocalVerdict::Insufficient { have: 2, need: 14 }
        );
        assert_eq!(
            verdicts[1],
            LocalVerdict::Insufficient { have: 1, need: 11 }
        );
        assert_eq!(
            verdicts[2],
            LocalVerdict::Insufficient { have: 2, need: 14 }
        );
    }

    #[test]
    fn zoo_comparison_covers_every_reference_cell() {
        let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
        let options = ReproduceOptions {
            data_dir: dir.clone(),
            cv_k: 2,
            cv_repeats: 1,
            seed: 7,
            ..ReproduceOptions::default()
        };
        let ds = load_dataset(&dir, "zoo").unwrap();
        let comps = compare_dataset("zoo", &ds, &options).unwrap();
        // encoder: 3 learners x 3 thetas x 9 columns, cba + boxes;
        // mixed: 3 thetas x 6 columns, cba + boxes; stacked: 3 x 6, cba
        assert_eq!(comps.len(), 81 * 2 + 18 * 2 + 18);
        for c in &comps {
            assert!(c.reproduced.is_finite(), "{c:?}");
            assert!(c.reference.is_finite(), "{c:?}");
            if c.metric == "cba" {
                assert!(c.reproduced >= 0.0 && c.reproduced <= 1.0, "{c:?}");
            }
        }
        // a non-roster name compares to nothing
        assert!(compare_dataset("not a dataset", &ds, &options)
            .unwrap()
            .is_empty());
    }
}
