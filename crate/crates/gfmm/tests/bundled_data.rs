//! Structural checks on the datasets shipped in data/.

use gfmm::data::{load_csv, FeatureSchema};
use std::path::PathBuf;

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn load(slug: &str) -> gfmm::data::Dataset {
    let dir = data_dir();
    let schema = FeatureSchema::from_file(&dir.join(format!("{slug}.schema"))).unwrap();
    load_csv(dir.join(format!("{slug}.csv")), &schema).unwrap()
}

#[test]
fn zoo_matches_its_catalog_row() {
    let ds = load("zoo");
    assert_eq!(ds.n_rows(), 101);
    assert_eq!(ds.n_classes(), 7);
    assert_eq!(ds.n_numeric(), 1);
    assert_eq!(ds.n_categorical(), 15);

    let mut sizes = vec![0usize; 7];
    for &l in ds.labels() {
        sizes[l as usize] += 1;
    }
    let mut by_class: Vec<(String, usize)> = ds
        .class_set()
        .iter()
        .cloned()
        .zip(sizes.iter().copied())
        .collect();
    by_class.sort();
    assert_eq!(
        by_class,
        vec![
            ("1".into(), 41),
            ("2".into(), 20),
            ("3".into(), 5),
            ("4".into(), 13),
            ("5".into(), 4),
            ("6".into(), 8),
            ("7".into(), 10),
        ]
    );

    // legs is the lone numeric column and only takes these six values
    let legs: std::collections::BTreeSet<i64> = (0..ds.n_rows())
        .map(|r| ds.numeric_lo(r)[0] as i64)
        .collect();
    assert_eq!(legs, [0, 2, 4, 5, 6, 8].into_iter().collect());

    // the booleans are pinned so 0 encodes 0 and 1 encodes 1
    for d in ds.domains() {
        assert_eq!(d, &["0".to_string(), "1".to_string()]);
    }

    // milk (categorical column 3) holds exactly for class "1", feathers
    // (column 1) exactly for class "2"
    let class_of = |r: usize| ds.class_set()[ds.labels()[r] as usize].clone();
    for r in 0..ds.n_rows() {
        let row = ds.categorical_row(r);
        assert_eq!(row[3] == Some(1), class_of(r) == "1", "row {r}");
        assert_eq!(row[1] == Some(1), class_of(r) == "2", "row {r}");
    }
}

#[test]
fn tic_tac_toe_matches_its_catalog_row() {
    let ds = load("tic_tac_toe");
    assert_eq!(ds.n_rows(), 958);
    assert_eq!(ds.n_classes(), 2);
    assert_eq!(ds.n_numeric(), 0);
    assert_eq!(ds.n_categorical(), 9);

    let positive = ds
        .class_set()
        .iter()
        .position(|c| c == "positive")
        .unwrap() as u32;
    let n_pos = ds.labels().iter().filter(|&&l| l == positive).count();
    assert_eq!(n_pos, 626);
    assert_eq!(ds.n_rows() - n_pos, 332);

    // boards are distinct
    let mut boards: Vec<Vec<Option<u32>>> = (0..ds.n_rows())
        .map(|r| ds.categorical_row(r).to_vec())
        .collect();
    boards.sort();
    boards.dedup();
    assert_eq!(boards.len(), 958);
}

#[test]
fn bundled_shapes_agree_with_the_reference_roster() {
    for slug in ["zoo", "tic tac toe"] {
        let info = gfmm::experiment::DATASETS
            .iter()
            .find(|d| d.name == slug)
            .unwrap();
        let ds = load(&slug.replace(' ', "_"));
        assert_eq!(ds.n_rows(), info.n_rows, "{slug}");
        assert_eq!(ds.n_classes(), info.n_classes, "{slug}");
        assert_eq!(ds.n_numeric(), info.n_numeric, "{slug}");
        assert_eq!(ds.n_categorical(), info.n_categorical, "{slug}");
    }
}
