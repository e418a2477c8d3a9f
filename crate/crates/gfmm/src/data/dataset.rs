//! In-memory mixed-attribute tables.
//!
//! A [`Dataset`] splits each row into a numeric part, stored as per-feature
//! intervals `[lo, hi]` (crisp values have `lo == hi`), and a categorical
//! part, stored as indices into per-feature value domains. Class labels are
//! indices into an ordered class set.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use thiserror::Error;

use super::matrix::IntervalMatrix;
use super::schema::{FeatureKind, FeatureSchema};

#[derive(Debug, Error)]
pub enum DataError {
    #[error("missing column `{0}` in csv header")]
    MissingColumn(String),
    #[error("row {row}: expected {expected} fields, found {found}")]
    ArityMismatch {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("row {row}, column `{column}`: cannot parse `{value}` as a number")]
    NumericParse {
        row: usize,
        column: String,
        value: String,
    },
    #[error("row {row}, column `{column}`: interval has lo {lo} > hi {hi}")]
    InvertedInterval {
        row: usize,
        column: String,
        lo: f64,
        hi: f64,
    },
    #[error("row {row}, column `{column}`: value `{value}` not in the declared domain")]
    UnknownCategory {
        row: usize,
        column: String,
        value: String,
    },
    #[error("row {row}: empty class label")]
    EmptyClass { row: usize },
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Index into a categorical feature's domain; `None` marks a value that was
/// not present when the domain was fixed (possible only for test-role data).
pub type CatValue = Option<u32>;

#[derive(Debug, Clone)]
pub struct UnseenRecord {
    pub row: usize,
    pub column: String,
    pub value: String,
}

#[derive(Debug, Clone)]
pub struct Dataset {
    pub schema: FeatureSchema,
    n_rows: usize,
    n_numeric: usize,
    n_categorical: usize,
    /// Row-major `n_rows x n_numeric` interval bounds.
    numeric_lo: Vec<f64>,
    numeric_hi: Vec<f64>,
    /// Row-major `n_rows x n_categorical` domain indices.
    categorical: Vec<CatValue>,
    /// Per-row class index into `class_set`.
    labels: Vec<u32>,
    /// Ordered class labels (schema order: first appearance in the data).
    class_set: Vec<String>,
    /// Numeric code per class: the parsed integer when every class label is
    /// an integer, the class index otherwise. Used by encoders that treat
    /// the class as a number.
    class_codes: Vec<i64>,
    /// Per categorical feature: ordered value domain.
    domains: Vec<Vec<String>>,
    /// Values met while loading test-role data that are absent from the
    /// training domains.
    unseen: Vec<UnseenRecord>,
}

enum NumericSource {
    Crisp(usize),
    Interval(usize, usize),
}

impl Dataset {
    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_numeric(&self) -> usize {
        self.n_numeric
    }

    pub fn n_categorical(&self) -> usize {
        self.n_categorical
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn class_set(&self) -> &[String] {
        &self.class_set
    }

    pub fn n_classes(&self) -> usize {
        self.class_set.len()
    }

    pub fn class_codes(&self) -> &[i64] {
        &self.class_codes
    }

    pub fn domains(&self) -> &[Vec<String>] {
        &self.domains
    }

    pub fn unseen(&self) -> &[UnseenRecord] {
        &self.unseen
    }

    pub fn numeric_lo(&self, row: usize) -> &[f64] {
        &self.numeric_lo[row * self.n_numeric..(row + 1) * self.n_numeric]
    }

    pub fn numeric_hi(&self, row: usize) -> &[f64] {
        &self.numeric_hi[row * self.n_numeric..(row + 1) * self.n_numeric]
    }

    pub fn categorical_row(&self, row: usize) -> &[CatValue] {
        &self.categorical[row * self.n_categorical..(row + 1) * self.n_categorical]
    }

    /// Materializes the given rows (in the order supplied) as a new dataset.
    /// Class set and domains are carried over unchanged, so indices stay
    /// comparable across subsets of the same parent.
    pub fn subset(&self, rows: &[usize]) -> Dataset {
        let mut numeric_lo = Vec::with_capacity(rows.len() * self.n_numeric);
        let mut numeric_hi = Vec::with_capacity(rows.len() * self.n_numeric);
        let mut categorical = Vec::with_capacity(rows.len() * self.n_categorical);
        let mut labels = Vec::with_capacity(rows.len());
        for &r in rows {
            numeric_lo.extend_from_slice(self.numeric_lo(r));
            numeric_hi.extend_from_slice(self.numeric_hi(r));
            categorical.extend_from_slice(self.categorical_row(r));
            labels.push(self.labels[r]);
        }
        Dataset {
            schema: self.schema.clone(),
            n_rows: rows.len(),
            n_numeric: self.n_numeric,
            n_categorical: self.n_categorical,
            numeric_lo,
            numeric_hi,
            categorical,
            labels,
            class_set: self.class_set.clone(),
            class_codes: self.class_codes.clone(),
            domains: self.domains.clone(),
            unseen: Vec::new(),
        }
    }

    /// Copy of this dataset with the numeric block replaced, typically by
    /// its normalized image. Shapes must match.
    pub fn with_numeric(&self, m: &IntervalMatrix) -> Dataset {
        assert_eq!(m.n_rows(), self.n_rows, "row count mismatch");
        assert_eq!(m.n_cols(), self.n_numeric, "numeric column count mismatch");
        let mut out = self.clone();
        out.numeric_lo.clear();
        out.numeric_hi.clear();
        for r in 0..self.n_rows {
            out.numeric_lo.extend_from_slice(m.lo_row(r));
            out.numeric_hi.extend_from_slice(m.hi_row(r));
        }
        out
    }

    /// Classes that actually occur in this dataset's rows.
    pub fn present_classes(&self) -> Vec<u32> {
        let mut seen = vec![false; self.class_set.len()];
        for &l in &self.labels {
            seen[l as usize] = true;
        }
        (0..self.class_set.len() as u32)
            .filter(|&c| seen[c as usize])
            .collect()
    }

    /// Builds a dataset directly from columns; used by generators and tests.
    /// Numeric values are crisp. Panics on ragged input.
    pub fn from_rows(
        schema: FeatureSchema,
        numeric_rows: &[Vec<f64>],
        categorical_rows: &[Vec<String>],
        class_labels: &[String],
    ) -> Dataset {
        let n_numeric = schema.n_numeric();
        let n_categorical = schema.n_categorical();
        let n_rows = class_labels.len();
        assert_eq!(numeric_rows.len(), n_rows);
        assert_eq!(categorical_rows.len(), n_rows);

        let cat_specs: Vec<_> = schema.categorical_columns().cloned().collect();
        let mut domains: Vec<Vec<String>> = cat_specs
            .iter()
            .map(|c| c.domain.clone().unwrap_or_default())
            .collect();
        let pinned: Vec<bool> = cat_specs.iter().map(|c| c.domain.is_some()).collect();

        let mut numeric_lo = Vec::with_capacity(n_rows * n_numeric);
        let mut categorical = Vec::with_capacity(n_rows * n_categorical);
        let mut class_set: Vec<String> = Vec::new();
        let mut labels = Vec::with_capacity(n_rows);
        for (row, label) in class_labels.iter().enumerate() {
            assert_eq!(numeric_rows[row].len(), n_numeric, "row {row}");
            assert_eq!(categorical_rows[row].len(), n_categorical, "row {row}");
            numeric_lo.extend_from_slice(&numeric_rows[row]);
            for (j, value) in categorical_rows[row].iter().enumerate() {
                let idx = match domains[j].iter().position(|v| v == value) {
                    Some(i) => i,
                    None => {
                        assert!(!pinned[j], "value `{value}` outside pinned domain");
                        domains[j].push(value.clone());
                        domains[j].len() - 1
                    }
                };
                categorical.push(Some(idx as u32));
            }
            let cls = match class_set.iter().position(|c| c == label) {
                Some(i) => i,
                None => {
                    class_set.push(label.clone());
                    class_set.len() - 1
                }
            };
            labels.push(cls as u32);
        }
        let class_codes = derive_class_codes(&class_set);
        Dataset {
            schema,
            n_rows,
            n_numeric,
            n_categorical,
            numeric_hi: numeric_lo.clone(),
            numeric_lo,
            categorical,
            labels,
            class_set,
            class_codes,
            domains,
            unseen: Vec::new(),
        }
    }

    /// Writes the dataset back out as csv in schema column order. Interval
    /// numeric cells collapse to their midpoint only if `lo != hi`; crisp
    /// cells are written as-is, so a load/write/load cycle of crisp data is
    /// stable.
    pub fn write_csv<P: AsRef<Path>>(&self, path: P) -> Result<(), DataError> {
        let mut out = String::new();
        let mut header: Vec<&str> = self.schema.columns.iter().map(|c| c.name.as_str()).collect();
        header.push(&self.schema.class_column);
        out.push_str(&header.join(","));
        out.push('\n');
        for row in 0..self.n_rows {
            let mut num_it = 0;
            let mut cat_it = 0;
            let lo = self.numeric_lo(row);
            let hi = self.numeric_hi(row);
            let cats = self.categorical_row(row);
            for (i, col) in self.schema.columns.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                match col.kind {
                    FeatureKind::Numeric => {
                        let (l, h) = (lo[num_it], hi[num_it]);
                        if l == h {
                            let _ = write!(out, "{l}");
                        } else {
                            let _ = write!(out, "{}", 0.5 * (l + h));
                        }
                        num_it += 1;
                    }
                    FeatureKind::Categorical => {
                        match cats[cat_it] {
                            Some(v) => out.push_str(&self.domains[cat_it][v as usize]),
                            None => out.push('?'),
                        }
                        cat_it += 1;
                    }
                }
            }
            out.push(',');
            out.push_str(&self.class_set[self.labels[row] as usize]);
            out.push('\n');
        }
        fs::write(path, out)?;
        Ok(())
    }
}

fn derive_class_codes(class_set: &[String]) -> Vec<i64> {
    let parsed: Option<Vec<i64>> = class_set.iter().map(|c| c.parse::<i64>().ok()).collect();
    match parsed {
        Some(codes) => codes,
        None => (0..class_set.len() as i64).collect(),
    }
}

/// Loads training-role data: categorical domains are inferred in
/// first-appearance order unless the schema pins them, in which case a value
/// outside the pinned domain is an error.
pub fn load_csv<P: AsRef<Path>>(path: P, schema: &FeatureSchema) -> Result<Dataset, DataError> {
    load_csv_impl(path, schema, None)
}

/// Loads test-role data against the domains and class set fixed by `train`.
/// Unknown categorical values are kept as `None` and recorded; unknown class
/// labels extend the class set (a test row's class is ground truth, not
/// model state).
pub fn load_csv_test<P: AsRef<Path>>(path: P, train: &Dataset) -> Result<Dataset, DataError> {
    load_csv_impl(path, &train.schema, Some(train))
}

fn load_csv_impl<P: AsRef<Path>>(
    path: P,
    schema: &FeatureSchema,
    train: Option<&Dataset>,
) -> Result<Dataset, DataError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_path(path.as_ref())?;
    let header: Vec<String> = reader
        .headers()?
        .iter()
        .map(|h| h.trim().to_string())
        .collect();
    let find = |name: &str| header.iter().position(|h| h == name);

    let mut numeric_srcs: Vec<NumericSource> = Vec::new();
    let mut numeric_names: Vec<String> = Vec::new();
    let mut cat_srcs: Vec<usize> = Vec::new();
    let mut cat_names: Vec<String> = Vec::new();
    for col in &schema.columns {
        match col.kind {
            FeatureKind::Numeric => {
                if let Some(i) = find(&col.name) {
                    numeric_srcs.push(NumericSource::Crisp(i));
                } else {
                    let lo = find(&format!("{}.lo", col.name));
                    let hi = find(&format!("{}.hi", col.name));
                    match (lo, hi) {
                        (Some(l), Some(h)) => numeric_srcs.push(NumericSource::Interval(l, h)),
                        _ => return Err(DataError::MissingColumn(col.name.clone())),
                    }
                }
                numeric_names.push(col.name.clone());
            }
            FeatureKind::Categorical => {
                let i = find(&col.name).ok_or_else(|| DataError::MissingColumn(col.name.clone()))?;
                cat_srcs.push(i);
                cat_names.push(col.name.clone());
            }
        }
    }
    let class_src = find(&schema.class_column)
        .ok_or_else(|| DataError::MissingColumn(schema.class_column.clone()))?;
    let width = header.len();

    let cat_specs: Vec<_> = schema.categorical_columns().cloned().collect();
    let (mut domains, pinned): (Vec<Vec<String>>, Vec<bool>) = match train {
        Some(t) => (t.domains().to_vec(), vec![true; cat_specs.len()]),
        None => (
            cat_specs
                .iter()
                .map(|c| c.domain.clone().unwrap_or_default())
                .collect(),
            cat_specs.iter().map(|c| c.domain.is_some()).collect(),
        ),
    };
    let mut class_set: Vec<String> = train.map(|t| t.class_set().to_vec()).unwrap_or_default();

    let n_numeric = numeric_srcs.len();
    let n_categorical = cat_srcs.len();
    let mut numeric_lo: Vec<f64> = Vec::new();
    let mut numeric_hi: Vec<f64> = Vec::new();
    let mut categorical: Vec<CatValue> = Vec::new();
    let mut labels: Vec<u32> = Vec::new();
    let mut unseen: Vec<UnseenRecord> = Vec::new();

    for (idx, record) in reader.records().enumerate() {
        let record = record?;
        let row = idx + 1;
        if record.len() != width {
            return Err(DataError::ArityMismatch {
                row,
                expected: width,
                found: record.len(),
            });
        }
        let parse_num = |i: usize, name: &str| -> Result<f64, DataError> {
            let raw = record.get(i).unwrap_or("");
            raw.parse::<f64>().map_err(|_| DataError::NumericParse {
                row,
                column: name.to_string(),
                value: raw.to_string(),
            })
        };
        for (j, src) in numeric_srcs.iter().enumerate() {
            let name = &numeric_names[j];
            let (lo, hi) = match *src {
                NumericSource::Crisp(i) => {
                    let v = parse_num(i, name)?;
                    (v, v)
                }
                NumericSource::Interval(l, h) => (parse_num(l, name)?, parse_num(h, name)?),
            };
            if lo > hi {
                return Err(DataError::InvertedInterval {
                    row,
                    column: name.clone(),
                    lo,
                    hi,
                });
            }
            numeric_lo.push(lo);
            numeric_hi.push(hi);
        }
        for (j, &src) in cat_srcs.iter().enumerate() {
            let value = record.get(src).unwrap_or("").to_string();
            match domains[j].iter().position(|v| *v == value) {
                Some(i) => categorical.push(Some(i as u32)),
                None => {
                    if pinned[j] {
                        if train.is_some() {
                            log::debug!(
                                "unseen categorical value `{value}` in column `{}` (row {row})",
                                cat_names[j]
                            );
                            unseen.push(UnseenRecord {
                                row,
                                column: cat_names[j].clone(),
                                value,
                            });
                            categorical.push(None);
                        } else {
                            return Err(DataError::UnknownCategory {
                                row,
                                column: cat_names[j].clone(),
                                value,
                            });
                        }
                    } else {
                        domains[j].push(value);
                        categorical.push(Some((domains[j].len() - 1) as u32));
                    }
                }
            }
        }
        let label = record.get(class_src).unwrap_or("").to_string();
        if label.is_empty() {
            return Err(DataError::EmptyClass { row });
        }
        let cls = match class_set.iter().position(|c| *c == label) {
            Some(i) => i,
            None => {
                class_set.push(label);
                class_set.len() - 1
            }
        };
        labels.push(cls as u32);
    }

    let class_codes = derive_class_codes(&class_set);
    Ok(Dataset {
        schema: schema.clone(),
        n_rows: labels.len(),
        n_numeric,
        n_categorical,
        numeric_lo,
        numeric_hi,
        categorical,
        labels,
        class_set,
        class_codes,
        domains,
        unseen,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn demo_schema() -> FeatureSchema {
        FeatureSchema::parse("class = y\nsize = numeric\ncolor = categorical\n").unwrap()
    }

    fn write_tmp(content: &str) -> tempfile::NamedTempFile {
        use std::io::Write;
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    #[test]
    fn loads_crisp_rows_and_infers_domains() {
        let f = write_tmp("size,color,y\n1.5,red,a\n2.0,blue,b\n0.5,red,a\n");
        let ds = load_csv(f.path(), &demo_schema()).unwrap();
        assert_eq!(ds.n_rows(), 3);
        assert_eq!(ds.numeric_lo(1), &[2.0]);
        assert_eq!(ds.numeric_hi(1), &[2.0]);
        assert_eq!(ds.domains(), &[vec!["red".to_string(), "blue".to_string()]]);
        assert_eq!(ds.categorical_row(2), &[Some(0)]);
        assert_eq!(ds.class_set(), &["a".to_string(), "b".to_string()]);
        assert_eq!(ds.labels(), &[0, 1, 0]);
        // non-integer class labels fall back to index codes
        assert_eq!(ds.class_codes(), &[0, 1]);
    }

    #[test]
    fn header_order_does_not_matter_and_extras_are_ignored() {
        let f = write_tmp("id,y,color,size\nr1,a,red,1\nr2,b,blue,2\n");
        let ds = load_csv(f.path(), &demo_schema()).unwrap();
        assert_eq!(ds.numeric_lo(0), &[1.0]);
        assert_eq!(ds.categorical_row(1), &[Some(1)]);
    }

    #[test]
    fn loads_interval_columns() {
        let schema = FeatureSchema::parse("class = y\nx = numeric\n").unwrap();
        let f = write_tmp("x.lo,x.hi,y\n0.1,0.4,a\n0.2,0.2,b\n");
        let ds = load_csv(f.path(), &schema).unwrap();
        assert_eq!(ds.numeric_lo(0), &[0.1]);
        assert_eq!(ds.numeric_hi(0), &[0.4]);
        let bad = write_tmp("x.lo,x.hi,y\n0.5,0.4,a\n");
        assert!(matches!(
            load_csv(bad.path(), &schema),
            Err(DataError::InvertedInterval { .. })
        ));
    }

    #[test]
    fn error_cases_name_the_offender() {
        let schema = demo_schema();
        let missing = write_tmp("size,y\n1,a\n");
        match load_csv(missing.path(), &schema) {
            Err(DataError::MissingColumn(c)) => assert_eq!(c, "color"),
            other => panic!("{other:?}"),
        }
        let unparsable = write_tmp("size,color,y\nbig,red,a\n");
        match load_csv(unparsable.path(), &schema) {
            Err(DataError::NumericParse { column, row, .. }) => {
                assert_eq!(column, "size");
                assert_eq!(row, 1);
            }
            other => panic!("{other:?}"),
        }
        let ragged = write_tmp("size,color,y\n1,red,a\n2,blue\n");
        assert!(matches!(
            load_csv(ragged.path(), &schema),
            Err(DataError::ArityMismatch { row: 2, .. })
        ));
    }

    #[test]
    fn pinned_domain_rejects_unknown_training_value() {
        let schema =
            FeatureSchema::parse("class = y\ncolor = categorical(red, blue)\n").unwrap();
        let f = write_tmp("color,y\nred,a\ngreen,b\n");
        match load_csv(f.path(), &schema) {
            Err(DataError::UnknownCategory { value, row, .. }) => {
                assert_eq!(value, "green");
                assert_eq!(row, 2);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn test_role_flags_unseen_values_instead_of_failing() {
        let train_f = write_tmp("size,color,y\n1,red,a\n2,blue,b\n");
        let train = load_csv(train_f.path(), &demo_schema()).unwrap();
        let test_f = write_tmp("size,color,y\n3,green,a\n4,red,c\n");
        let test = load_csv_test(test_f.path(), &train).unwrap();
        assert_eq!(test.categorical_row(0), &[None]);
        assert_eq!(test.categorical_row(1), &[Some(0)]);
        assert_eq!(test.unseen().len(), 1);
        assert_eq!(test.unseen()[0].value, "green");
        // the unknown class extends the set: it is ground truth, not state
        assert_eq!(test.class_set(), &["a".to_string(), "b".to_string(), "c".to_string()]);
    }

    #[test]
    fn integer_class_labels_become_codes() {
        let schema = FeatureSchema::parse("class = y\nx = numeric\n").unwrap();
        let f = write_tmp("x,y\n1,4\n2,2\n3,4\n");
        let ds = load_csv(f.path(), &schema).unwrap();
        assert_eq!(ds.class_set(), &["4".to_string(), "2".to_string()]);
        assert_eq!(ds.class_codes(), &[4, 2]);
    }

    #[test]
    fn subset_preserves_global_indexing() {
        let f = write_tmp("size,color,y\n1,red,a\n2,blue,b\n3,red,b\n");
        let ds = load_csv(f.path(), &demo_schema()).unwrap();
        let sub = ds.subset(&[2, 0]);
        assert_eq!(sub.n_rows(), 2);
        assert_eq!(sub.labels(), &[1, 0]);
        assert_eq!(sub.class_set(), ds.class_set());
        assert_eq!(sub.domains(), ds.domains());
        assert_eq!(sub.present_classes(), vec![0, 1]);
    }

    #[test]
    fn write_then_reload_round_trips() {
        let f = write_tmp("size,color,y\n1.25,red,a\n2,blue,b\n");
        let ds = load_csv(f.path(), &demo_schema()).unwrap();
        let out = tempfile::NamedTempFile::new().unwrap();
        ds.write_csv(out.path()).unwrap();
        let again = load_csv(out.path(), &demo_schema()).unwrap();
        assert_eq!(again.n_rows(), 2);
        assert_eq!(again.numeric_lo(0), &[1.25]);
        assert_eq!(again.domains(), ds.domains());
        let bytes1 = std::fs::read(out.path()).unwrap();
        let out2 = tempfile::NamedTempFile::new().unwrap();
        again.write_csv(out2.path()).unwrap();
        assert_eq!(bytes1, std::fs::read(out2.path()).unwrap());
    }
}
