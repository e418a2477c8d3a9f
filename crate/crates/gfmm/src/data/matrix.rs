//! Dense row-major matrices used between pipeline stages.

/// Crisp numeric matrix (encoder outputs, tree inputs).
#[derive(Debug, Clone, PartialEq)]
pub struct NumMatrix {
    rows: usize,
    cols: usize,
    vals: Vec<f64>,
}

impl NumMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        NumMatrix {
            rows,
            cols,
            vals: vec![0.0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut vals = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            vals.extend_from_slice(r);
        }
        NumMatrix {
            rows: rows.len(),
            cols,
            vals,
        }
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.vals[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [f64] {
        &mut self.vals[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<f64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.vals[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: f64) {
        self.vals[r * self.cols + c] = v;
    }

    /// Glues two matrices side by side (same row count).
    pub fn hconcat(&self, other: &NumMatrix) -> NumMatrix {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut vals = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            vals.extend_from_slice(self.row(r));
            vals.extend_from_slice(other.row(r));
        }
        NumMatrix {
            rows: self.rows,
            cols,
            vals,
        }
    }
}

/// Interval-valued matrix: per cell a `[lo, hi]` pair with `lo <= hi`.
/// Crisp data is represented with `lo == hi`.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalMatrix {
    rows: usize,
    cols: usize,
    lo: Vec<f64>,
    hi: Vec<f64>,
}

impl IntervalMatrix {
    pub fn new(rows: usize, cols: usize, lo: Vec<f64>, hi: Vec<f64>) -> Self {
        assert_eq!(lo.len(), rows * cols);
        assert_eq!(hi.len(), rows * cols);
        debug_assert!(lo.iter().zip(&hi).all(|(l, h)| l <= h), "inverted interval");
        IntervalMatrix { rows, cols, lo, hi }
    }

    pub fn from_crisp(m: &NumMatrix) -> Self {
        let lo: Vec<f64> = (0..m.n_rows()).flat_map(|r| m.row(r).to_vec()).collect();
        IntervalMatrix {
            rows: m.n_rows(),
            cols: m.n_cols(),
            hi: lo.clone(),
            lo,
        }
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn lo_row(&self, r: usize) -> &[f64] {
        &self.lo[r * self.cols..(r + 1) * self.cols]
    }

    pub fn hi_row(&self, r: usize) -> &[f64] {
        &self.hi[r * self.cols..(r + 1) * self.cols]
    }

    pub fn lo_row_mut(&mut self, r: usize) -> &mut [f64] {
        &mut self.lo[r * self.cols..(r + 1) * self.cols]
    }

    pub fn hi_row_mut(&mut self, r: usize) -> &mut [f64] {
        &mut self.hi[r * self.cols..(r + 1) * self.cols]
    }

    pub fn hconcat(&self, other: &IntervalMatrix) -> IntervalMatrix {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut lo = Vec::with_capacity(self.rows * cols);
        let mut hi = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            lo.extend_from_slice(self.lo_row(r));
            lo.extend_from_slice(other.lo_row(r));
            hi.extend_from_slice(self.hi_row(r));
            hi.extend_from_slice(other.hi_row(r));
        }
        IntervalMatrix {
            rows: self.rows,
            cols,
            lo,
            hi,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn num_matrix_roundtrip() {
        let m = NumMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]);
        assert_eq!(m.n_rows(), 2);
        assert_eq!(m.row(1), &[3.0, 4.0]);
        let c = m.hconcat(&NumMatrix::from_rows(&[vec![5.0], vec![6.0]]));
        assert_eq!(c.row(0), &[1.0, 2.0, 5.0]);
        assert_eq!(c.row(1), &[3.0, 4.0, 6.0]);
    }

    #[test]
    fn interval_from_crisp_has_equal_bounds() {
        let m = NumMatrix::from_rows(&[vec![0.25, 0.5]]);
        let iv = IntervalMatrix::from_crisp(&m);
        assert_eq!(iv.lo_row(0), iv.hi_row(0));
    }
}
