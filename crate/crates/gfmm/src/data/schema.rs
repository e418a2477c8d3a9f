//! Column schemas for mixed-attribute tables.
//!
//! A schema names the class column and lists every feature column with its
//! kind. Categorical domains may be pinned in the schema; when omitted they
//! are inferred from training data in first-appearance order.

use std::fs;
use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SchemaError {
    #[error("line {line}: expected `name = kind`, got `{text}`")]
    Malformed { line: usize, text: String },
    #[error("line {line}: unknown column kind `{kind}`")]
    UnknownKind { line: usize, kind: String },
    #[error("duplicate column `{0}`")]
    DuplicateColumn(String),
    #[error("no `class = <column>` line")]
    MissingClass,
    #[error("class column `{0}` also declared as a feature")]
    ClassIsFeature(String),
    #[error("schema declares no feature columns")]
    Empty,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FeatureKind {
    Numeric,
    Categorical,
}

#[derive(Debug, Clone)]
pub struct ColumnSpec {
    pub name: String,
    pub kind: FeatureKind,
    /// Pinned value domain. `None` means: infer from training data.
    pub domain: Option<Vec<String>>,
}

/// Ordered feature columns plus the class column name.
///
/// Column order is canonical: numeric and categorical features keep the
/// relative order in which the schema declares them.
#[derive(Debug, Clone)]
pub struct FeatureSchema {
    pub columns: Vec<ColumnSpec>,
    pub class_column: String,
}

impl FeatureSchema {
    /// Parses the textual schema format, one declaration per line:
    ///
    /// ```text
    /// # comment
    /// class = type
    /// hair = categorical
    /// legs = numeric
    /// size = categorical(small, medium, large)
    /// ```
    pub fn parse(text: &str) -> Result<Self, SchemaError> {
        let mut columns: Vec<ColumnSpec> = Vec::new();
        let mut class_column: Option<String> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (name, value) = trimmed.split_once('=').ok_or_else(|| SchemaError::Malformed {
                line,
                text: trimmed.to_string(),
            })?;
            let name = name.trim();
            let value = value.trim();
            if name.is_empty() || value.is_empty() {
                return Err(SchemaError::Malformed {
                    line,
                    text: trimmed.to_string(),
                });
            }
            if name == "class" {
                class_column = Some(value.to_string());
                continue;
            }
            if columns.iter().any(|c| c.name == name) {
                return Err(SchemaError::DuplicateColumn(name.to_string()));
            }
            let spec = if value == "numeric" {
                ColumnSpec {
                    name: name.to_string(),
                    kind: FeatureKind::Numeric,
                    domain: None,
                }
            } else if value == "categorical" {
                ColumnSpec {
                    name: name.to_string(),
                    kind: FeatureKind::Categorical,
                    domain: None,
                }
            } else if let Some(inner) = value
                .strip_prefix("categorical(")
                .and_then(|v| v.strip_suffix(')'))
            {
                let domain: Vec<String> =
                    inner.split(',').map(|v| v.trim().to_string()).collect();
                ColumnSpec {
                    name: name.to_string(),
                    kind: FeatureKind::Categorical,
                    domain: Some(domain),
                }
            } else {
                return Err(SchemaError::UnknownKind {
                    line,
                    kind: value.to_string(),
                });
            };
            columns.push(spec);
        }
        let class_column = class_column.ok_or(SchemaError::MissingClass)?;
        if columns.is_empty() {
            return Err(SchemaError::Empty);
        }
        if columns.iter().any(|c| c.name == class_column) {
            return Err(SchemaError::ClassIsFeature(class_column));
        }
        Ok(FeatureSchema {
            columns,
            class_column,
        })
    }

    pub fn from_file<P: AsRef<Path>>(path: P) -> Result<Self, SchemaError> {
        Self::parse(&fs::read_to_string(path)?)
    }

    pub fn numeric_columns(&self) -> impl Iterator<Item = &ColumnSpec> {
        self.columns
            .iter()
            .filter(|c| c.kind == FeatureKind::Numeric)
    }

    pub fn categorical_columns(&self) -> impl Iterator<Item = &ColumnSpec> {
        self.columns
            .iter()
            .filter(|c| c.kind == FeatureKind::Categorical)
    }

    pub fn n_numeric(&self) -> usize {
        self.numeric_columns().count()
    }

    pub fn n_categorical(&self) -> usize {
        self.categorical_columns().count()
    }
}
