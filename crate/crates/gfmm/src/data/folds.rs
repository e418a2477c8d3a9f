//! Repeated k-fold cross-validation splits.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn repeat_rng(seed: u64, repeat: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add((repeat as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)))
}

/// Chunk `n` items into `k` parts whose sizes differ by at most one, larger
/// parts first: n=7, k=4 gives 2,2,2,1.
fn chunk_sizes(n: usize, k: usize) -> Vec<usize> {
    let base = n / k;
    let extra = n % k;
    (0..k).map(|i| base + usize::from(i < extra)).collect()
}

/// Test-fold index sets for `repeats` independent k-fold partitions.
///
/// Within one repeat the folds partition `0..labels.len()`. Splits are
/// stratified when every class present has at least `k` members; otherwise a
/// plain shuffled partition is used. Fully deterministic in `seed`.
pub fn cv_splits(labels: &[u32], k: usize, repeats: usize, seed: u64) -> Vec<Vec<Vec<usize>>> {
    assert!(k >= 2, "need at least two folds");
    assert!(labels.len() >= k, "fewer samples than folds");
    let n_classes = labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0);
    let mut counts = vec![0usize; n_classes];
    for &l in labels {
        counts[l as usize] += 1;
    }
    let stratified = counts.iter().all(|&c| c == 0 || c >= k);

    (0..repeats)
        .map(|rep| {
            let mut rng = repeat_rng(seed, rep);
            let mut order: Vec<usize> = (0..labels.len()).collect();
            order.shuffle(&mut rng);
            let mut folds: Vec<Vec<usize>> = vec![Vec::new(); k];
            if stratified {
                for class in 0..n_classes {
                    let members: Vec<usize> = order
                        .iter()
                        .copied()
                        .filter(|&i| labels[i] as usize == class)
                        .collect();
                    let sizes = chunk_sizes(members.len(), k);
                    // rotate the fold receiving the larger chunk so no fold
                    // systematically accumulates every class's remainder
                    let mut at = 0;
                    for (c, &sz) in sizes.iter().enumerate() {
                        let fold = (c + class) % k;
                        folds[fold].extend_from_slice(&members[at..at + sz]);
                        at += sz;
                    }
                }
            } else {
                let sizes = chunk_sizes(order.len(), k);
                let mut at = 0;
                for (fold, &sz) in sizes.iter().enumerate() {
                    folds[fold].extend_from_slice(&order[at..at + sz]);
                    at += sz;
                }
            }
            for f in &mut folds {
                f.sort_unstable();
            }
            folds
        })
        .collect()
}

/// Indices not in `test`, ascending. `test` must be sorted ascending.
pub fn complement(n: usize, test: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(n - test.len());
    let mut it = test.iter().copied().peekable();
    for i in 0..n {
        if it.peek() == Some(&i) {
            it.next();
        } else {
            out.push(i);
        }
    }
    out
}
