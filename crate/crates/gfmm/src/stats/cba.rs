//! Confusion matrix and class-balanced accuracy.

use super::StatError;

/// Square count matrix over the class set; rows are actual classes,
/// columns are predicted classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfusionMatrix {
    p: usize,
    counts: Vec<usize>,
}

impl ConfusionMatrix {
    pub fn new(p: usize) -> ConfusionMatrix {
        ConfusionMatrix {
            p,
            counts: vec![0; p * p],
        }
    }

    pub fn from_predictions(actual: &[u32], predicted: &[u32], p: usize) -> ConfusionMatrix {
        assert_eq!(actual.len(), predicted.len());
        let mut cm = ConfusionMatrix::new(p);
        for (&a, &q) in actual.iter().zip(predicted) {
            cm.record(a, q);
        }
        cm
    }

    pub fn record(&mut self, actual: u32, predicted: u32) {
        self.counts[actual as usize * self.p + predicted as usize] += 1;
    }

    pub fn get(&self, actual: usize, predicted: usize) -> usize {
        self.counts[actual * self.p + predicted]
    }

    pub fn n_classes(&self) -> usize {
        self.p
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    fn row_total(&self, i: usize) -> usize {
        (0..self.p).map(|j| self.get(i, j)).sum()
    }

    fn col_total(&self, j: usize) -> usize {
        (0..self.p).map(|i| self.get(i, j)).sum()
    }
}

/// Class-balanced accuracy: the mean over classes of the diagonal count
/// divided by the larger of the class's row and column totals. A class
/// absent from both actuals and predictions contributes 0.
pub fn cba(cm: &ConfusionMatrix) -> Result<f64, StatError> {
    if cm.total() == 0 {
        return Err(StatError::EmptyMatrix);
    }
    let p = cm.n_classes();
    let mut sum = 0.0;
    for i in 0..p {
        let denom = cm.row_total(i).max(cm.col_total(i));
        if denom > 0 {
            sum += cm.get(i, i) as f64 / denom as f64;
        }
    }
    Ok(sum / p as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_diagonal_is_one() {
        let cm = ConfusionMatrix::from_predictions(&[0, 1, 2, 1], &[0, 1, 2, 1], 3);
        assert_eq!(cba(&cm).unwrap(), 1.0);
    }

    #[test]
    fn hand_example() {
        let mut cm = ConfusionMatrix::new(2);
        // [[3, 1], [2, 4]]
        for _ in 0..3 {
            cm.record(0, 0);
        }
        cm.record(0, 1);
        cm.record(1, 0);
        cm.record(1, 0);
        for _ in 0..4 {
            cm.record(1, 1);
        }
        let got = cba(&cm).unwrap();
        let want = 0.5 * (3.0 / 5.0 + 4.0 / 6.0);
        assert!((got - want).abs() < 1e-12);
        assert!((got - 0.633_333_3).abs() < 1e-6);
    }

    #[test]
    fn all_wrong_is_zero() {
        let cm = ConfusionMatrix::from_predictions(&[0, 0, 1, 1], &[1, 1, 0, 0], 2);
        assert_eq!(cba(&cm).unwrap(), 0.0);
    }

    #[test]
    fn class_absent_both_ways_contributes_zero_not_nan() {
        // class 2 never appears as actual or prediction
        let cm = ConfusionMatrix::from_predictions(&[0, 1], &[0, 1], 3);
        assert!((cba(&cm).unwrap() - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn cba_equals_accuracy_on_a_diagonal_matrix() {
        let cm = ConfusionMatrix::from_predictions(&[0, 0, 0, 1], &[0, 0, 0, 1], 2);
        assert_eq!(cba(&cm).unwrap(), 1.0);
    }

    #[test]
    fn empty_matrix_is_rejected() {
        let cm = ConfusionMatrix::new(2);
        assert!(matches!(cba(&cm), Err(StatError::EmptyMatrix)));
    }
}
