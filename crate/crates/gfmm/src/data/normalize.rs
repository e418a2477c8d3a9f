//! Min-max rescaling of feature columns into the unit interval.

use super::matrix::{IntervalMatrix, NumMatrix};

/// Per-column min-max statistics, fitted on training data only.
///
/// For interval-valued columns both bounds participate in the fit, so the
/// fitted range covers every training bound. Transforms clip into `[0, 1]`,
/// which maps out-of-range test values onto the nearest edge. Columns that
/// were constant in training collapse to `0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Normalizer {
    mins: Vec<f64>,
    maxs: Vec<f64>,
}

impl Normalizer {
    pub fn fit_intervals(m: &IntervalMatrix) -> Normalizer {
        let cols = m.n_cols();
        let mut mins = vec![f64::INFINITY; cols];
        let mut maxs = vec![f64::NEG_INFINITY; cols];
        for r in 0..m.n_rows() {
            for (c, (&l, &h)) in m.lo_row(r).iter().zip(m.hi_row(r)).enumerate() {
                mins[c] = mins[c].min(l);
                maxs[c] = maxs[c].max(h);
            }
        }
        if m.n_rows() == 0 {
            mins.iter_mut().for_each(|v| *v = 0.0);
            maxs.iter_mut().for_each(|v| *v = 0.0);
        }
        Normalizer { mins, maxs }
    }

    pub fn fit(m: &NumMatrix) -> Normalizer {
        Self::fit_intervals(&IntervalMatrix::from_crisp(m))
    }

    pub fn n_cols(&self) -> usize {
        self.mins.len()
    }

    fn scale(&self, c: usize, v: f64) -> f64 {
        let span = self.maxs[c] - self.mins[c];
        if span <= 0.0 {
            return 0.0;
        }
        ((v - self.mins[c]) / span).clamp(0.0, 1.0)
    }

    pub fn transform_intervals(&self, m: &mut IntervalMatrix) {
        assert_eq!(m.n_cols(), self.n_cols());
        for r in 0..m.n_rows() {
            for c in 0..self.n_cols() {
                let v = self.scale(c, m.lo_row(r)[c]);
                m.lo_row_mut(r)[c] = v;
            }
            for c in 0..self.n_cols() {
                let v = self.scale(c, m.hi_row(r)[c]);
                m.hi_row_mut(r)[c] = v;
            }
        }
    }

    pub fn transform(&self, m: &mut NumMatrix) {
        assert_eq!(m.n_cols(), self.n_cols());
        for r in 0..m.n_rows() {
            for c in 0..self.n_cols() {
                let v = self.scale(c, m.row(r)[c]);
                m.row_mut(r)[c] = v;
            }
        }
    }

    /// Inverse of [`Normalizer::transform`] for in-range values. Constant
    /// columns map back to their training constant.
    pub fn denormalize(&self, c: usize, v: f64) -> f64 {
        let span = self.maxs[c] - self.mins[c];
        if span <= 0.0 {
            return self.mins[c];
        }
        self.mins[c] + v * span
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fits_over_both_bounds_and_clips_test_data() {
        let train = IntervalMatrix::new(2, 1, vec![1.0, 2.0], vec![3.0, 5.0]);
        let norm = Normalizer::fit_intervals(&train);
        let mut t = train.clone();
        norm.transform_intervals(&mut t);
        assert_eq!(t.lo_row(0), &[0.0]);
        assert_eq!(t.hi_row(1), &[1.0]);
        assert_eq!(t.lo_row(1), &[0.25]);

        let mut test = IntervalMatrix::new(1, 1, vec![-10.0], vec![10.0]);
        norm.transform_intervals(&mut test);
        assert_eq!(test.lo_row(0), &[0.0]);
        assert_eq!(test.hi_row(0), &[1.0]);
    }

    #[test]
    fn constant_column_collapses_to_zero() {
        let train = NumMatrix::from_rows(&[vec![7.0], vec![7.0]]);
        let norm = Normalizer::fit(&train);
        let mut m = NumMatrix::from_rows(&[vec![7.0], vec![9.0]]);
        norm.transform(&mut m);
        assert_eq!(m.row(0), &[0.0]);
        assert_eq!(m.row(1), &[0.0]);
        assert_eq!(norm.denormalize(0, 0.0), 7.0);
    }

    #[test]
    fn denormalize_round_trips_within_1e12() {
        let train = NumMatrix::from_rows(&[vec![-4.0, 0.1], vec![13.0, 0.9], vec![2.5, 0.4]]);
        let norm = Normalizer::fit(&train);
        let mut m = train.clone();
        norm.transform(&mut m);
        for r in 0..train.n_rows() {
            for c in 0..train.n_cols() {
                let back = norm.denormalize(c, m.get(r, c));
                let orig = train.get(r, c);
                assert!((back - orig).abs() <= 1e-12 * orig.abs().max(1.0));
            }
        }
    }
}
