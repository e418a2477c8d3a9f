//! End-to-end runs of the evaluation grid on the bundled datasets.

use std::path::PathBuf;

use gfmm::experiment::config::ExperimentConfig;
use gfmm::experiment::runner::{render_csv, render_json, run, write_reports};

fn small_config(out: &std::path::Path) -> ExperimentConfig {
    let text = "\
datasets = zoo, tic tac toe
algorithms = iol, onln
encoders = numeric-only, label, target
thetas = 0.7
m1.etas = 0.7
m2.betas = 0.5
stacked.schemes = a
cv.k = 2
cv.repeats = 1
seed = 5
jobs = 2
";
    let mut cfg = ExperimentConfig::parse(text).unwrap();
    cfg.data_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
    cfg.out = out.to_path_buf();
    cfg
}

#[test]
fn grid_run_is_deterministic_and_marks_inapplicable_cells() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = small_config(dir.path());
    let report = run(&cfg).unwrap();

    // 2 datasets x (6 encoder + 1 m1 + 1 m2 + 2 stacked) cells
    assert_eq!(report.rows.len(), 2 * 10);

    let row = |dataset: &str, method: &str| {
        report
            .rows
            .iter()
            .find(|r| r.dataset == dataset && r.method == method)
            .unwrap()
    };
    // tic tac toe has no numeric columns: baseline and stacking cannot run
    assert!(row("tic tac toe", "iol+numeric-only").summary.is_none());
    assert!(row("tic tac toe", "a-iol").summary.is_none());
    assert!(row("tic tac toe", "iol+label").summary.is_some());
    // zoo runs everything
    assert!(row("zoo", "iol+numeric-only").summary.is_some());
    assert!(row("zoo", "a-onln").summary.is_some());

    for r in &report.rows {
        if let Some(s) = r.summary {
            assert_eq!(s.n_folds, 2, "{} {}", r.dataset, r.method);
            assert!(s.mean_cba >= 0.0 && s.mean_cba <= 1.0);
            assert!(s.mean_boxes >= 1.0);
        }
    }

    let again = run(&cfg).unwrap();
    assert_eq!(render_csv(&report), render_csv(&again));
    assert_eq!(render_json(&report, &cfg), render_json(&again, &cfg));
}

#[test]
fn reports_land_on_disk_and_diagrams_match_the_family_list() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = small_config(dir.path());
    let report = run(&cfg).unwrap();
    let written = write_reports(&report, &cfg).unwrap();

    let csv = std::fs::read_to_string(dir.path().join("results.csv")).unwrap();
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().starts_with("dataset,track,method,theta"));
    assert_eq!(lines.count(), report.rows.len());
    assert!(csv.contains("tic tac toe,encoder,iol+numeric-only,0.7,-,-,-,-,-"));

    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("results.json")).unwrap())
            .unwrap();
    assert_eq!(json["rows"].as_array().unwrap().len(), report.rows.len());
    assert_eq!(json["cv"]["k"], 2);

    let diagrams: Vec<String> = report
        .families
        .iter()
        .filter_map(|f| f.diagram.clone())
        .collect();
    for stem in &diagrams {
        assert!(dir.path().join(format!("{stem}.svg")).is_file(), "{stem}");
        assert!(dir.path().join(format!("{stem}.txt")).is_file(), "{stem}");
    }
    let svg_count = written
        .iter()
        .filter(|p| p.extension().is_some_and(|e| e == "svg"))
        .count();
    assert_eq!(svg_count, diagrams.len());

    // every family that ran covers both datasets or fell back to zoo only
    for fam in &report.families {
        assert!(fam.datasets.len() >= 2, "{} {}", fam.track, fam.theta);
        assert_eq!(fam.test.mean_ranks.len(), fam.methods.len());
    }
}

#[test]
fn missing_dataset_is_reported_by_name() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = small_config(dir.path());
    cfg.datasets = vec!["atlantis census".to_string()];
    match run(&cfg) {
        Err(gfmm::experiment::ExperimentError::MissingDataset(name)) => {
            assert_eq!(name, "atlantis census");
        }
        other => panic!("expected MissingDataset, got {other:?}"),
    }
}
