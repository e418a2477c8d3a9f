//! Online mixed-attribute learner with categorical bit strings.
//!
//! Each box stores, per categorical feature, the set of values it has
//! absorbed as bits of a `u128`. Membership averages the numeric term with
//! the fraction of categorical dimensions whose sample bit is present in
//! the box. Expansion additionally requires at least `beta` matching
//! dimensions; overlap testing and contraction stay purely numeric, so
//! categorical sets only ever grow.

use crate::data::{CatValue, IntervalMatrix};
use crate::hyperbox::{
    contract, membership, overlap_test, CatPayload, GfmmModel, Hyperbox, ModelKind,
    OverlapOutcome, TieBreak,
};
use crate::learn::{broadcast_gamma, fits_theta, pair_mut};

/// Settings for [`train_m2`].
#[derive(Debug, Clone)]
pub struct M2Config {
    /// Maximum numeric extent per dimension after an expansion.
    pub theta: f64,
    /// Minimum number of categorical dimensions that must already match
    /// before a box may absorb a sample.
    pub beta: usize,
    /// Membership steepness; a single value is broadcast over the numeric
    /// dimensions.
    pub gamma: Vec<f64>,
    /// Tie handling at prediction time.
    pub tie_break: TieBreak,
}

impl M2Config {
    pub fn new(theta: f64, beta: usize) -> M2Config {
        M2Config {
            theta,
            beta,
            gamma: vec![1.0],
            tie_break: TieBreak::Deterministic,
        }
    }
}

/// Converts a matching-dimension fraction into the integer threshold:
/// floored, but at least 1 whenever the fraction is positive. Zero
/// categorical dimensions always give 0.
pub fn beta_from_fraction(fraction: f64, r: usize) -> usize {
    assert!(
        (0.0..=1.0).contains(&fraction),
        "beta fraction must be in [0, 1], got {fraction}"
    );
    if fraction <= 0.0 || r == 0 {
        return 0;
    }
    ((fraction * r as f64).floor() as usize).max(1)
}

/// Membership of a sample in a bit-string box: the average of the numeric
/// term and the fraction of categorical dimensions whose value bit is set
/// in the box. With no categorical dimensions only the numeric term
/// remains, and with no numeric dimensions only the categorical fraction.
pub fn membership_m2(
    xl: &[f64],
    xu: &[f64],
    cat: &[CatValue],
    v: &[f64],
    w: &[f64],
    bits: &[u128],
    gamma: &[f64],
) -> f64 {
    let numeric = membership(xl, xu, v, w, gamma);
    let r = bits.len();
    if r == 0 {
        return numeric;
    }
    let matches = matching_dims(bits, cat);
    let cat_part = matches as f64 / r as f64;
    if xl.is_empty() {
        cat_part
    } else {
        0.5 * (numeric + cat_part)
    }
}

fn matching_dims(bits: &[u128], cat: &[CatValue]) -> usize {
    bits.iter()
        .zip(cat)
        .filter(|&(&s, &a)| match a {
            Some(value) => s & (1u128 << value) != 0,
            None => false,
        })
        .count()
}

pub fn train_m2(
    x: &IntervalMatrix,
    cat_rows: &[&[CatValue]],
    labels: &[u32],
    domain_sizes: &[usize],
    cfg: &M2Config,
) -> GfmmModel {
    train_m2_traced(x, cat_rows, labels, domain_sizes, cfg).0
}

/// Like [`train_m2`] but also reports, per training row, the index of the
/// box that absorbed it (or was created for it).
pub fn train_m2_traced(
    x: &IntervalMatrix,
    cat_rows: &[&[CatValue]],
    labels: &[u32],
    domain_sizes: &[usize],
    cfg: &M2Config,
) -> (GfmmModel, Vec<usize>) {
    let rows = x.n_rows();
    assert_eq!(cat_rows.len(), rows, "categorical row count mismatch");
    assert_eq!(labels.len(), rows, "label count mismatch");
    assert!(
        cfg.theta > 0.0 && cfg.theta <= 1.0,
        "theta must be in (0, 1], got {}",
        cfg.theta
    );
    let r = domain_sizes.len();
    assert!(cfg.beta <= r, "beta {} exceeds arity {r}", cfg.beta);
    assert!(
        domain_sizes.iter().all(|&s| s <= 128),
        "categorical domains beyond 128 values do not fit the bit strings"
    );
    let n = x.n_cols();
    let gamma = broadcast_gamma(&cfg.gamma, n);

    let mut boxes: Vec<Hyperbox> = Vec::new();
    let mut absorbed = Vec::with_capacity(rows);
    for row in 0..rows {
        let (xl, xu) = (x.lo_row(row), x.hi_row(row));
        let a = cat_rows[row];
        assert_eq!(a.len(), r, "categorical arity mismatch");
        let abits: Vec<u128> = a
            .iter()
            .map(|c| 1u128 << c.expect("training categorical values must be concrete"))
            .collect();
        let class = labels[row];

        let mut ranked: Vec<(usize, f64)> = boxes
            .iter()
            .enumerate()
            .filter(|(_, b)| b.class == class)
            .map(|(i, b)| {
                (
                    i,
                    membership_m2(xl, xu, a, &b.v, &b.w, bits(b), &gamma),
                )
            })
            .collect();
        ranked.sort_by(|p, q| q.1.total_cmp(&p.1).then(p.0.cmp(&q.0)));

        if let Some(&(top, m)) = ranked.first() {
            if m == 1.0 {
                boxes[top].cardinality += 1;
                absorbed.push(top);
                continue;
            }
        }

        let mut expanded = None;
        for &(bi, _) in &ranked {
            if !fits_theta(&boxes[bi], xl, xu, cfg.theta) {
                continue;
            }
            if matching_dims(bits(&boxes[bi]), a) < cfg.beta {
                continue;
            }
            let b = &mut boxes[bi];
            for j in 0..n {
                b.v[j] = b.v[j].min(xl[j]);
                b.w[j] = b.w[j].max(xu[j]);
            }
            b.cardinality += 1;
            let s = bits_mut(b);
            for j in 0..r {
                s[j] |= abits[j];
            }
            expanded = Some(bi);
            break;
        }

        let bi = match expanded {
            None => {
                boxes.push(Hyperbox {
                    v: xl.to_vec(),
                    w: xu.to_vec(),
                    class,
                    cardinality: 1,
                    creation_index: boxes.len(),
                    contracted: false,
                    cat: CatPayload::Bits(abits),
                });
                absorbed.push(boxes.len() - 1);
                continue;
            }
            Some(bi) => bi,
        };
        absorbed.push(bi);

        // overlap handling is purely numeric; bit strings never shrink
        if n == 0 {
            continue;
        }
        for ki in 0..boxes.len() {
            if ki == bi || boxes[ki].class == class {
                continue;
            }
            let outcome = overlap_test(&boxes[bi].v, &boxes[bi].w, &boxes[ki].v, &boxes[ki].w);
            if let OverlapOutcome::Overlap(d) = outcome {
                let (eb, ob) = pair_mut(&mut boxes, bi, ki);
                let before_e = (eb.v[d.dim], eb.w[d.dim]);
                let before_o = (ob.v[d.dim], ob.w[d.dim]);
                contract(d.dim, d.case, &mut eb.v, &mut eb.w, &mut ob.v, &mut ob.w);
                if (eb.v[d.dim], eb.w[d.dim]) != before_e {
                    eb.contracted = true;
                }
                if (ob.v[d.dim], ob.w[d.dim]) != before_o {
                    ob.contracted = true;
                }
            }
        }
    }

    let model = GfmmModel {
        boxes,
        gamma,
        theta: cfg.theta,
        kind: ModelKind::MixedBits,
        tie_break: cfg.tie_break,
    };
    (model, absorbed)
}

fn bits(b: &Hyperbox) -> &[u128] {
    match &b.cat {
        CatPayload::Bits(s) => s,
        _ => unreachable!("box does not carry bit strings"),
    }
}

fn bits_mut(b: &mut Hyperbox) -> &mut Vec<u128> {
    match &mut b.cat {
        CatPayload::Bits(s) => s,
        _ => unreachable!("box does not carry bit strings"),
    }
}
