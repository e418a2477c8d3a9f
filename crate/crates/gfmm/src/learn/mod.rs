//! Training algorithms for numeric-feature hyperbox models.

pub mod agglo;
pub mod iol;
pub mod onln;

pub use agglo::{similarity, train_agglo2, train_agglo_sm, SimilarityKind};
pub use iol::train_iol;
pub use onln::{train_onln, train_onln_traced};

use crate::data::IntervalMatrix;
use crate::hyperbox::{CatPayload, GfmmModel, Hyperbox, TieBreak};

/// Knobs shared by the numeric learners.
#[derive(Debug, Clone, PartialEq)]
pub struct LearnerConfig {
    /// Maximum hyperbox size per dimension, in (0, 1].
    pub theta: f64,
    /// Membership slope; a single entry broadcasts to every dimension.
    pub gamma: Vec<f64>,
    /// Minimum similarity for an agglomerative merge, in [0, 1].
    pub sigma: f64,
    pub similarity: SimilarityKind,
    pub tie_break: TieBreak,
}

impl LearnerConfig {
    pub fn new(theta: f64) -> LearnerConfig {
        LearnerConfig {
            theta,
            gamma: vec![1.0],
            sigma: 0.0,
            similarity: SimilarityKind::LongestDistance,
            tie_break: TieBreak::Deterministic,
        }
    }

    pub(crate) fn resolved_gamma(&self, dims: usize) -> Vec<f64> {
        assert!(
            self.theta > 0.0 && self.theta <= 1.0,
            "theta must be in (0, 1], got {}",
            self.theta
        );
        assert!(
            (0.0..=1.0).contains(&self.sigma),
            "sigma must be in [0, 1], got {}",
            self.sigma
        );
        broadcast_gamma(&self.gamma, dims)
    }
}

/// A single gamma value applies to every numeric dimension; otherwise the
/// arity must match.
pub(crate) fn broadcast_gamma(gamma: &[f64], dims: usize) -> Vec<f64> {
    if gamma.len() == 1 {
        return vec![gamma[0]; dims];
    }
    assert_eq!(gamma.len(), dims, "gamma arity does not match the data");
    gamma.to_vec()
}

/// Which numeric learner to run; used by configuration files.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Onln,
    Iol,
    AggloSm,
    Agglo2,
}

impl Algorithm {
    pub fn parse(text: &str) -> Option<Algorithm> {
        match text {
            "onln" => Some(Algorithm::Onln),
            "iol" => Some(Algorithm::Iol),
            "agglo-sm" | "agglosm" => Some(Algorithm::AggloSm),
            "agglo-2" | "agglo2" => Some(Algorithm::Agglo2),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Onln => "onln",
            Algorithm::Iol => "iol",
            Algorithm::AggloSm => "agglo-sm",
            Algorithm::Agglo2 => "agglo2",
        }
    }
}

pub fn train(
    algorithm: Algorithm,
    x: &IntervalMatrix,
    labels: &[u32],
    cfg: &LearnerConfig,
) -> GfmmModel {
    match algorithm {
        Algorithm::Onln => train_onln(x, labels, cfg),
        Algorithm::Iol => train_iol(x, labels, cfg),
        Algorithm::AggloSm => train_agglo_sm(x, labels, cfg),
        Algorithm::Agglo2 => train_agglo2(x, labels, cfg),
    }
}

/// Expansion size gate: absorbing the sample may not stretch any dimension
/// past theta.
pub(crate) fn fits_theta(b: &Hyperbox, xl: &[f64], xu: &[f64], theta: f64) -> bool {
    (0..xl.len()).all(|j| b.w[j].max(xu[j]) - b.v[j].min(xl[j]) <= theta)
}

pub(crate) fn point_box(xl: &[f64], xu: &[f64], class: u32, creation_index: usize) -> Hyperbox {
    Hyperbox {
        v: xl.to_vec(),
        w: xu.to_vec(),
        class,
        cardinality: 1,
        creation_index,
        contracted: false,
        cat: CatPayload::None,
    }
}

/// Simultaneous mutable access to two distinct boxes.
pub(crate) fn pair_mut(boxes: &mut [Hyperbox], i: usize, k: usize) -> (&mut Hyperbox, &mut Hyperbox) {
    debug_assert_ne!(i, k);
    if i < k {
        let (head, tail) = boxes.split_at_mut(k);
        (&mut head[i], &mut tail[0])
    } else {
        let (head, tail) = boxes.split_at_mut(i);
        (&mut tail[0], &mut head[k])
    }
}

/// Same-class candidates ranked by membership descending, position ascending
/// on ties.
pub(crate) fn ranked_candidates(
    boxes: &[Hyperbox],
    xl: &[f64],
    xu: &[f64],
    class: u32,
    gamma: &[f64],
) -> Vec<(usize, f64)> {
    let mut cands: Vec<(usize, f64)> = boxes
        .iter()
        .enumerate()
        .filter(|(_, b)| b.class == class)
        .map(|(i, b)| (i, crate::hyperbox::membership(xl, xu, &b.v, &b.w, gamma)))
        .collect();
    cands.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then(a.0.cmp(&b.0)));
    cands
}
