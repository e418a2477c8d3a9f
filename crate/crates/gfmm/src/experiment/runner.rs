//! Grid execution and report emission.
//!
//! Loads every requested dataset once, computes its folds once (so every
//! cell ranks against identical splits), evaluates (dataset, cell, fold)
//! tasks in parallel, and writes results.csv, results.json and one critical
//! difference diagram per report family. Output bytes are deterministic for
//! a fixed config.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::data::{load_csv, Dataset, FeatureSchema};
use crate::experiment::config::ExperimentConfig;
use crate::experiment::pipeline::{
    evaluate_fold, fold_pairs, summarize, CellSummary, FoldOutcome,
};
use crate::experiment::ExperimentError;
use crate::stats::{emit_cd_diagram, friedman, nemenyi_cd, rank_methods, StatError, TestResult};

/// File stem for a dataset name: lowercase with underscores.
pub fn dataset_slug(name: &str) -> String {
    name.to_lowercase().replace(' ', "_")
}

/// Loads `name` from `dir` as `<slug>.csv` + `<slug>.schema`.
pub fn load_dataset(dir: &Path, name: &str) -> Result<Dataset, ExperimentError> {
    let slug = dataset_slug(name);
    let csv = dir.join(format!("{slug}.csv"));
    let schema = dir.join(format!("{slug}.schema"));
    if !csv.is_file() || !schema.is_file() {
        return Err(ExperimentError::MissingDataset(name.to_string()));
    }
    let schema = FeatureSchema::from_file(&schema)?;
    Ok(load_csv(csv, &schema)?)
}

/// Dataset names present in `dir`: every csv with a schema sibling, sorted,
/// with underscores read back as spaces.
pub fn discover_datasets(dir: &Path) -> Result<Vec<String>, ExperimentError> {
    let mut names = Vec::new();
    for entry in fs::read_dir(dir)? {
        let path = entry?.path();
        if path.extension().is_some_and(|e| e == "csv")
            && path.with_extension("schema").is_file()
        {
            if let Some(stem) = path.file_stem().and_then(|s| s.to_str()) {
                names.push(stem.replace('_', " "));
            }
        }
    }
    names.sort();
    Ok(names)
}

/// One dataset x cell result.
#[derive(Debug, Clone)]
pub struct ReportRow {
    pub dataset: String,
    pub track: &'static str,
    pub method: String,
    pub theta: f64,
    pub summary: Option<CellSummary>,
}

/// Friedman outcome for one report family (track x theta).
#[derive(Debug, Clone)]
pub struct FamilyReport {
    pub track: &'static str,
    pub theta: f64,
    pub methods: Vec<String>,
    pub datasets: Vec<String>,
    pub test: TestResult,
    pub cd: f64,
    /// Diagram file stem, present when the omnibus test rejected.
    pub diagram: Option<String>,
}

#[derive(Debug, Clone)]
pub struct RunReport {
    pub rows: Vec<ReportRow>,
    pub families: Vec<FamilyReport>,
    /// Families with too little complete data for a rank test, with the
    /// reason.
    pub skipped: Vec<String>,
}

/// Runs the whole grid described by `config`.
pub fn run(config: &ExperimentConfig) -> Result<RunReport, ExperimentError> {
    let names = if config.datasets.is_empty() {
        discover_datasets(&config.data_dir)?
    } else {
        config.datasets.clone()
    };
    if names.is_empty() {
        return Err(ExperimentError::Config {
            line: 0,
            message: format!("no datasets found under {}", config.data_dir.display()),
        });
    }
    let datasets = names
        .iter()
        .map(|n| load_dataset(&config.data_dir, n))
        .collect::<Result<Vec<_>, _>>()?;
    for (name, ds) in names.iter().zip(&datasets) {
        if ds.n_rows() < config.cv_k {
            return Err(ExperimentError::Config {
                line: 0,
                message: format!("dataset `{name}` has fewer rows than cv.k"),
            });
        }
    }
    let folds: Vec<_> = datasets
        .iter()
        .map(|ds| fold_pairs(ds.labels(), config.cv_k, config.cv_repeats, config.seed))
        .collect();
    let cells = config.cells();
    let settings = config.settings();
    let n_folds = config.cv_k * config.cv_repeats;

    let mut tasks = Vec::with_capacity(datasets.len() * cells.len() * n_folds);
    for d in 0..datasets.len() {
        for c in 0..cells.len() {
            for f in 0..n_folds {
                tasks.push((d, c, f));
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| ExperimentError::Config {
            line: 0,
            message: format!("thread pool: {e}"),
        })?;
    let results: Vec<Option<FoldOutcome>> = pool.install(|| {
        tasks
            .par_iter()
            .map(|&(d, c, f)| {
                let (train, test) = &folds[d][f];
                evaluate_fold(&datasets[d], train, test, &cells[c], &settings)
                    .map_err(|e| e.in_cell(&names[d], &cells[c].method(), cells[c].theta()))
            })
            .collect::<Result<_, _>>()
    })?;

    let mut rows = Vec::with_capacity(datasets.len() * cells.len());
    for (d, name) in names.iter().enumerate() {
        for (c, cell) in cells.iter().enumerate() {
            let base = (d * cells.len() + c) * n_folds;
            let outcomes: Option<Vec<FoldOutcome>> =
                results[base..base + n_folds].iter().cloned().collect();
            rows.push(ReportRow {
                dataset: name.clone(),
                track: cell.track(),
                method: cell.method(),
                theta: cell.theta(),
                summary: outcomes.map(|o| summarize(&o)),
            });
        }
    }

    let (families, skipped) = rank_families(&rows, &names)?;
    Ok(RunReport {
        rows,
        families,
        skipped,
    })
}

/// Friedman + Nemenyi per (track, theta) family over mean CBA. The
/// numeric-only baseline is left out of rankings; datasets missing any
/// ranked method are dropped from that family.
fn rank_families(
    rows: &[ReportRow],
    names: &[String],
) -> Result<(Vec<FamilyReport>, Vec<String>), ExperimentError> {
    let mut keys: Vec<(&'static str, f64)> = Vec::new();
    for row in rows {
        if !keys.contains(&(row.track, row.theta)) {
            keys.push((row.track, row.theta));
        }
    }
    let mut families = Vec::new();
    let mut skipped = Vec::new();
    for (track, theta) in keys {
        let label = format!("{track} theta={theta}");
        let mut methods: Vec<&str> = Vec::new();
        for row in rows {
            if row.track == track
                && row.theta == theta
                && !row.method.ends_with("+numeric-only")
                && !methods.contains(&row.method.as_str())
            {
                methods.push(&row.method);
            }
        }
        if methods.len() < 2 {
            skipped.push(format!("{label}: fewer than two methods"));
            continue;
        }
        let cell = |dataset: &str, method: &str| {
            rows.iter()
                .find(|r| {
                    r.dataset == dataset && r.method == method && r.theta == theta
                })
                .and_then(|r| r.summary)
        };
        let mut scores: Vec<Vec<f64>> = Vec::new();
        let mut complete: Vec<String> = Vec::new();
        for name in names {
            let row: Option<Vec<f64>> = methods
                .iter()
                .map(|m| cell(name, m).map(|s| s.mean_cba))
                .collect();
            if let Some(row) = row {
                scores.push(row);
                complete.push(name.clone());
            }
        }
        if complete.len() < 2 {
            skipped.push(format!("{label}: fewer than two complete datasets"));
            continue;
        }
        let ranks = rank_methods(&scores, true);
        let test = match friedman(&ranks, 0.05) {
            Ok(t) => t,
            Err(StatError::DegenerateRanks) => {
                skipped.push(format!("{label}: degenerate ranks"));
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        let cd = nemenyi_cd(methods.len(), complete.len(), 0.05)?;
        let diagram = test
            .reject
            .then(|| format!("cd_{}_theta_{}", track, theta));
        families.push(FamilyReport {
            track,
            theta,
            methods: methods.iter().map(|m| m.to_string()).collect(),
            datasets: complete,
            test,
            cd,
            diagram,
        });
    }
    Ok((families, skipped))
}

fn fmt_opt(v: Option<f64>, precision: usize) -> String {
    match v {
        Some(v) => format!("{v:.precision$}"),
        None => "-".to_string(),
    }
}

/// results.csv bytes: one row per dataset x cell.
pub fn render_csv(report: &RunReport) -> String {
    let mut out = String::from(
        "dataset,track,method,theta,mean_cba,mean_accuracy,mean_boxes,\
         secondary_fired,secondary_correct\n",
    );
    for row in &report.rows {
        let s = row.summary;
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            row.dataset,
            row.track,
            row.method,
            row.theta,
            fmt_opt(s.map(|s| s.mean_cba), 5),
            fmt_opt(s.map(|s| s.mean_accuracy), 5),
            fmt_opt(s.map(|s| s.mean_boxes), 3),
            fmt_opt(s.and_then(|s| s.secondary).map(|p| p.0), 3),
            fmt_opt(s.and_then(|s| s.secondary).map(|p| p.1), 3),
        );
    }
    out
}

/// results.json bytes.
pub fn render_json(report: &RunReport, config: &ExperimentConfig) -> String {
    let rows: Vec<serde_json::Value> = report
        .rows
        .iter()
        .map(|row| {
            let summary = row.summary.map(|s| {
                serde_json::json!({
                    "mean_cba": s.mean_cba,
                    "mean_accuracy": s.mean_accuracy,
                    "mean_boxes": s.mean_boxes,
                    "secondary_fired": s.secondary.map(|p| p.0),
                    "secondary_correct": s.secondary.map(|p| p.1),
                    "n_folds": s.n_folds,
                })
            });
            serde_json::json!({
                "dataset": row.dataset,
                "track": row.track,
                "method": row.method,
                "theta": row.theta,
                "summary": summary,
            })
        })
        .collect();
    let families: Vec<serde_json::Value> = report
        .families
        .iter()
        .map(|f| {
            serde_json::json!({
                "track": f.track,
                "theta": f.theta,
                "methods": f.methods,
                "datasets": f.datasets,
                "mean_ranks": f.test.mean_ranks,
                "f_statistic": f.test.f_f,
                "critical": f.test.critical,
                "reject": f.test.reject,
                "cd": f.cd,
                "diagram": f.diagram,
            })
        })
        .collect();
    let doc = serde_json::json!({
        "seed": config.seed,
        "cv": { "k": config.cv_k, "repeats": config.cv_repeats },
        "rows": rows,
        "families": families,
        "skipped": report.skipped,
    });
    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
}

/// Writes results.csv, results.json and the family diagrams under
/// `config.out`. Returns the written paths.
pub fn write_reports(
    report: &RunReport,
    config: &ExperimentConfig,
) -> Result<Vec<PathBuf>, ExperimentError> {
    fs::create_dir_all(&config.out)?;
    let mut written = Vec::new();
    let csv_path = config.out.join("results.csv");
    fs::write(&csv_path, render_csv(report))?;
    written.push(csv_path);
    let json_path = config.out.join("results.json");
    fs::write(&json_path, render_json(report, config))?;
    written.push(json_path);
    for family in &report.families {
        if let Some(stem) = &family.diagram {
            let names: Vec<&str> = family.methods.iter().map(String::as_str).collect();
            let path = config.out.join(format!("{stem}.svg"));
            emit_cd_diagram(&names, &family.test.mean_ranks, family.cd, &path)?;
            written.push(path.with_extension("txt"));
            written.push(path);
        }
    }
    Ok(written)
}

/// Convenience wrapper used by the command line: run then write.
pub fn run_and_write(config: &ExperimentConfig) -> Result<(RunReport, Vec<PathBuf>), ExperimentError> {
    let report = run(config)?;
    let written = write_reports(&report, config)?;
    Ok((report, written))
}
