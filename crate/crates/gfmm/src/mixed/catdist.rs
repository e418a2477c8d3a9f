//! Class-conditional distance between categorical values.
//!
//! For one feature, two values `a`, `b` are compared through the class
//! distributions they induce on the training rows:
//!
//! ```text
//! d(a, b) = sqrt( sum_c ( P(c | a) - P(c | b) )^2 )
//! ```
//!
//! and normalized per feature by the largest pairwise distance, giving
//! `h in [0, 1]`. The open bound marker and identical values are at
//! distance 0; values never seen when the table was built are maximally far
//! (distance 1) from everything else.

use crate::data::{CatValue, Dataset};

#[derive(Debug, Clone, PartialEq)]
pub struct DimTable {
    /// Domain size of the feature (global interning universe).
    pub values: usize,
    /// Flattened `values x values` normalized distances.
    pub h: Vec<f64>,
    /// Whether each value occurred in the rows the table was built from.
    pub present: Vec<bool>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CatDistTable {
    pub dims: Vec<DimTable>,
}

impl CatDistTable {
    /// Builds the per-feature tables from training rows.
    ///
    /// `rows` yields the categorical part of each training row; `domains`
    /// gives each feature's full domain size.
    pub fn build(
        rows: &[&[CatValue]],
        labels: &[u32],
        n_classes: usize,
        domain_sizes: &[usize],
    ) -> CatDistTable {
        let dims = domain_sizes
            .iter()
            .enumerate()
            .map(|(j, &values)| {
                // class histogram per value
                let mut counts = vec![0usize; values * n_classes];
                let mut totals = vec![0usize; values];
                for (row, &label) in rows.iter().zip(labels) {
                    if let Some(v) = row[j] {
                        counts[v as usize * n_classes + label as usize] += 1;
                        totals[v as usize] += 1;
                    }
                }
                let present: Vec<bool> = totals.iter().map(|&t| t > 0).collect();
                let prob = |value: usize, class: usize| -> f64 {
                    counts[value * n_classes + class] as f64 / totals[value] as f64
                };
                let mut d = vec![0.0f64; values * values];
                let mut d_max = 0.0f64;
                for a in 0..values {
                    if !present[a] {
                        continue;
                    }
                    for b in (a + 1)..values {
                        if !present[b] {
                            continue;
                        }
                        let mut sq = 0.0;
                        for c in 0..n_classes {
                            let diff = prob(a, c) - prob(b, c);
                            sq += diff * diff;
                        }
                        let dist = sq.sqrt();
                        d[a * values + b] = dist;
                        d[b * values + a] = dist;
                        d_max = d_max.max(dist);
                    }
                }
                // all values equidistant (or a single value): everything at 0
                let h = if d_max > 0.0 {
                    d.iter().map(|&x| x / d_max).collect()
                } else {
                    vec![0.0; values * values]
                };
                DimTable { values, h, present }
            })
            .collect();
        CatDistTable { dims }
    }

    /// Builds the tables straight from a dataset's categorical columns.
    pub fn fit(ds: &Dataset) -> CatDistTable {
        let rows: Vec<&[CatValue]> = (0..ds.n_rows()).map(|i| ds.categorical_row(i)).collect();
        let sizes: Vec<usize> = ds.domains().iter().map(|d| d.len()).collect();
        CatDistTable::build(&rows, ds.labels(), ds.n_classes(), &sizes)
    }

    /// Normalized distance between two bound values on feature `dim`.
    /// `None` is the open bound marker and is at distance 0 from everything.
    pub fn h_bound(&self, dim: usize, a: Option<u32>, b: Option<u32>) -> f64 {
        match (a, b) {
            (None, _) | (_, None) => 0.0,
            (Some(x), Some(y)) => self.h_value(dim, x, y),
        }
    }

    /// Normalized distance between two concrete values on feature `dim`;
    /// values outside the table (unseen) are at distance 1 from any other
    /// value but 0 from themselves.
    pub fn h_value(&self, dim: usize, a: u32, b: u32) -> f64 {
        if a == b {
            return 0.0;
        }
        let t = &self.dims[dim];
        let (a, b) = (a as usize, b as usize);
        if a >= t.values || b >= t.values || !t.present[a] || !t.present[b] {
            return 1.0;
        }
        t.h[a * t.values + b]
    }

    /// Distance of a sample value against a bound: an unseen sample value is
    /// maximally far from any concrete bound, but the open bound still
    /// matches everything.
    pub fn h_sample(&self, dim: usize, sample: CatValue, bound: Option<u32>) -> f64 {
        match (sample, bound) {
            (_, None) => 0.0,
            (None, Some(_)) => 1.0,
            (Some(s), Some(b)) => self.h_value(dim, s, b),
        }
    }
}
