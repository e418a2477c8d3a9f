//! Agglomerative learners: start from one point box per sample and merge
//! similar same-class boxes while no cross-class overlap appears.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::{point_box, LearnerConfig};
use crate::data::IntervalMatrix;
use crate::hyperbox::{overlap_test, ramp, GfmmModel, Hyperbox, ModelKind, OverlapOutcome};

/// Box-pair similarity measure. All three reduce per-dimension distances
/// through the membership ramp and keep the worst dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimilarityKind {
    /// Furthest pair of faces per dimension: max(w_k - v_i, w_i - v_k).
    /// The measure the experiments use.
    LongestDistance,
    /// Nearest pair of faces per dimension: max(v_k - w_i, v_i - w_k),
    /// zero when the boxes touch or overlap.
    ShortestGap,
    /// Distance between box centers per dimension.
    Midpoint,
}

impl SimilarityKind {
    pub fn parse(text: &str) -> Option<SimilarityKind> {
        match text {
            "longest-distance" => Some(SimilarityKind::LongestDistance),
            "shortest-gap" => Some(SimilarityKind::ShortestGap),
            "midpoint" => Some(SimilarityKind::Midpoint),
            _ => None,
        }
    }
}

pub fn similarity(a: &Hyperbox, b: &Hyperbox, kind: SimilarityKind, gamma: &[f64]) -> f64 {
    let mut s = 1.0f64;
    for j in 0..a.v.len() {
        let dist = match kind {
            SimilarityKind::LongestDistance => (b.w[j] - a.v[j]).max(a.w[j] - b.v[j]),
            SimilarityKind::ShortestGap => (b.v[j] - a.w[j]).max(a.v[j] - b.w[j]),
            SimilarityKind::Midpoint => {
                (0.5 * (b.v[j] + b.w[j]) - 0.5 * (a.v[j] + a.w[j])).abs()
            }
        };
        s = s.min(1.0 - ramp(dist, gamma[j]));
    }
    s
}

fn merged_bounds(a: &Hyperbox, b: &Hyperbox) -> (Vec<f64>, Vec<f64>) {
    let mv = a.v.iter().zip(&b.v).map(|(x, y)| x.min(*y)).collect();
    let mw = a.w.iter().zip(&b.w).map(|(x, y)| x.max(*y)).collect();
    (mv, mw)
}

fn within_theta(mv: &[f64], mw: &[f64], theta: f64) -> bool {
    mv.iter().zip(mw).all(|(v, w)| w - v <= theta)
}

fn clashes_other_class<'a>(
    mv: &[f64],
    mw: &[f64],
    class: u32,
    others: impl Iterator<Item = &'a Hyperbox>,
) -> bool {
    others.into_iter().any(|o| {
        o.class != class
            && matches!(overlap_test(mv, mw, &o.v, &o.w), OverlapOutcome::Overlap(_))
    })
}

/// Heap entry for the full-matrix learner; greater = higher similarity,
/// ties broken toward the lexicographically smaller position pair.
#[derive(Clone, Copy)]
struct Entry {
    sim: f64,
    i: usize,
    k: usize,
    ver_i: u32,
    ver_k: u32,
}

impl PartialEq for Entry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Entry {}
impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sim
            .total_cmp(&other.sim)
            .then_with(|| (other.i, other.k).cmp(&(self.i, self.k)))
    }
}

/// Full similarity-matrix agglomeration: always merge the globally most
/// similar mergeable intra-class pair, oldest box surviving.
pub fn train_agglo_sm(x: &IntervalMatrix, labels: &[u32], cfg: &LearnerConfig) -> GfmmModel {
    assert_eq!(x.n_rows(), labels.len());
    let gamma = cfg.resolved_gamma(x.n_cols());
    let mut boxes: Vec<Hyperbox> = (0..x.n_rows())
        .map(|i| point_box(x.lo_row(i), x.hi_row(i), labels[i], i))
        .collect();
    let mut alive = vec![true; boxes.len()];
    let mut ver = vec![0u32; boxes.len()];

    // lazy heap: entries go stale when either box changes, and are skipped
    // on pop instead of being removed eagerly
    let mut heap = BinaryHeap::new();
    for i in 0..boxes.len() {
        for k in i + 1..boxes.len() {
            if boxes[i].class == boxes[k].class {
                heap.push(Entry {
                    sim: similarity(&boxes[i], &boxes[k], cfg.similarity, &gamma),
                    i,
                    k,
                    ver_i: 0,
                    ver_k: 0,
                });
            }
        }
    }

    loop {
        let mut deferred = Vec::new();
        let mut merged = None;
        while let Some(e) = heap.pop() {
            if !alive[e.i] || !alive[e.k] || ver[e.i] != e.ver_i || ver[e.k] != e.ver_k {
                continue;
            }
            if e.sim < cfg.sigma {
                // max-heap: every remaining fresh pair is below sigma too
                deferred.push(e);
                break;
            }
            let (mv, mw) = merged_bounds(&boxes[e.i], &boxes[e.k]);
            let ok = within_theta(&mv, &mw, cfg.theta)
                && !clashes_other_class(
                    &mv,
                    &mw,
                    boxes[e.i].class,
                    boxes.iter().enumerate().filter(|(o, _)| alive[*o]).map(|(_, b)| b),
                );
            if ok {
                merged = Some((e.i, e.k, mv, mw));
                break;
            }
            deferred.push(e);
        }
        heap.extend(deferred);
        let Some((i, k, mv, mw)) = merged else { break };

        boxes[i].v = mv;
        boxes[i].w = mw;
        boxes[i].cardinality += boxes[k].cardinality;
        alive[k] = false;
        ver[i] += 1;
        for o in 0..boxes.len() {
            if o != i && alive[o] && boxes[o].class == boxes[i].class {
                let (a, b) = (o.min(i), o.max(i));
                heap.push(Entry {
                    sim: similarity(&boxes[a], &boxes[b], cfg.similarity, &gamma),
                    i: a,
                    k: b,
                    ver_i: ver[a],
                    ver_k: ver[b],
                });
            }
        }
    }

    let boxes = boxes
        .into_iter()
        .zip(alive)
        .filter_map(|(b, keep)| keep.then_some(b))
        .collect();
    GfmmModel {
        boxes,
        gamma,
        theta: cfg.theta,
        kind: ModelKind::AggloSm,
        tie_break: cfg.tie_break,
    }
}

/// Anchor-sweep agglomeration: each box in turn tries to absorb its most
/// similar mergeable same-class partner, until a sweep changes nothing.
pub fn train_agglo2(x: &IntervalMatrix, labels: &[u32], cfg: &LearnerConfig) -> GfmmModel {
    assert_eq!(x.n_rows(), labels.len());
    let gamma = cfg.resolved_gamma(x.n_cols());
    let mut boxes: Vec<Hyperbox> = (0..x.n_rows())
        .map(|i| point_box(x.lo_row(i), x.hi_row(i), labels[i], i))
        .collect();

    loop {
        let mut any_merge = false;
        let mut ai = 0;
        while ai < boxes.len() {
            let class = boxes[ai].class;
            let mut partners: Vec<(usize, f64)> = boxes
                .iter()
                .enumerate()
                .filter(|&(o, b)| o != ai && b.class == class)
                .map(|(o, b)| (o, similarity(&boxes[ai], b, cfg.similarity, &gamma)))
                .collect();
            partners.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then(a.0.cmp(&b.0)));
            for (ki, sim) in partners {
                if sim < cfg.sigma {
                    break;
                }
                let (mv, mw) = merged_bounds(&boxes[ai], &boxes[ki]);
                let ok = within_theta(&mv, &mw, cfg.theta)
                    && !clashes_other_class(&mv, &mw, class, boxes.iter());
                if ok {
                    boxes[ai].v = mv;
                    boxes[ai].w = mw;
                    boxes[ai].cardinality += boxes[ki].cardinality;
                    boxes.remove(ki);
                    if ki < ai {
                        ai -= 1;
                    }
                    any_merge = true;
                    break;
                }
            }
            ai += 1;
        }
        if !any_merge {
            break;
        }
    }

    GfmmModel {
        boxes,
        gamma,
        theta: cfg.theta,
        kind: ModelKind::Agglo2,
        tie_break: cfg.tie_break,
    }
}
