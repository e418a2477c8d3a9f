//! Online mixed-attribute learner with categorical bound pairs.
//!
//! Numeric features keep the usual min/max interval per box. Each
//! categorical feature carries a pair of bound values `(e, f)` whose width
//! is the class-conditional distance between them (see [`CatDistTable`]);
//! `f` starts as the open marker, and bounds move the way interval
//! endpoints do, by absorbing sample values. Membership, expansion, overlap
//! and contraction all have categorical counterparts, with a threshold
//! `eta` playing the role theta plays for numeric widths.

use crate::data::{CatValue, IntervalMatrix};
use crate::hyperbox::{
    contract, membership, overlap_test, BoundPair, CatPayload, GfmmModel, Hyperbox, ModelKind,
    OverlapOutcome, TieBreak,
};
use crate::learn::{broadcast_gamma, fits_theta, pair_mut};
use crate::mixed::CatDistTable;

/// Settings for [`train_m1`].
#[derive(Debug, Clone)]
pub struct M1Config {
    /// Maximum numeric extent per dimension after an expansion.
    pub theta: f64,
    /// Maximum categorical bound distance accepted during expansion.
    pub eta: f64,
    /// Membership steepness; a single value is broadcast over the numeric
    /// dimensions.
    pub gamma: Vec<f64>,
    /// Tie handling at prediction time.
    pub tie_break: TieBreak,
}

impl M1Config {
    pub fn new(theta: f64, eta: f64) -> M1Config {
        M1Config {
            theta,
            eta,
            gamma: vec![1.0],
            tie_break: TieBreak::Deterministic,
        }
    }
}

/// Membership of a sample (numeric interval plus categorical values) in a
/// box carrying bound pairs: the minimum over the numeric terms and, per
/// categorical dimension, `min(1 - h(a, e), 1 - h(a, f))`. A value sitting
/// exactly on a concrete bound counts as fully inside that dimension.
pub fn membership_m1(
    xl: &[f64],
    xu: &[f64],
    cat: &[CatValue],
    v: &[f64],
    w: &[f64],
    pairs: &[BoundPair],
    table: &CatDistTable,
    gamma: &[f64],
) -> f64 {
    let mut m = membership(xl, xu, v, w, gamma);
    for (j, p) in pairs.iter().enumerate() {
        let a = cat[j];
        let on_bound = matches!((a, p.e), (Some(x), Some(e)) if x == e)
            || matches!((a, p.f), (Some(x), Some(f)) if x == f);
        if on_bound {
            continue;
        }
        let to_e = 1.0 - table.h_sample(j, a, p.e);
        let to_f = 1.0 - table.h_sample(j, a, p.f);
        m = m.min(to_e.min(to_f));
    }
    m
}

/// Two bound pairs collide on a dimension iff a concrete bound of one
/// equals a concrete bound of the other; the open marker never collides.
pub fn cat_dim_overlaps(a: &BoundPair, b: &BoundPair) -> bool {
    fn eq(x: Option<u32>, y: Option<u32>) -> bool {
        matches!((x, y), (Some(p), Some(q)) if p == q)
    }
    eq(a.e, b.e) || eq(a.e, b.f) || eq(a.f, b.e) || eq(a.f, b.f)
}

pub fn train_m1(
    x: &IntervalMatrix,
    cat_rows: &[&[CatValue]],
    labels: &[u32],
    table: &CatDistTable,
    cfg: &M1Config,
) -> GfmmModel {
    train_m1_traced(x, cat_rows, labels, table, cfg).0
}

/// Like [`train_m1`] but also reports, per training row, the index of the
/// box that absorbed it (or was created for it).
pub fn train_m1_traced(
    x: &IntervalMatrix,
    cat_rows: &[&[CatValue]],
    labels: &[u32],
    table: &CatDistTable,
    cfg: &M1Config,
) -> (GfmmModel, Vec<usize>) {
    let rows = x.n_rows();
    assert_eq!(cat_rows.len(), rows, "categorical row count mismatch");
    assert_eq!(labels.len(), rows, "label count mismatch");
    assert!(
        cfg.theta > 0.0 && cfg.theta <= 1.0,
        "theta must be in (0, 1], got {}",
        cfg.theta
    );
    assert!(
        (0.0..=1.0).contains(&cfg.eta),
        "eta must be in [0, 1], got {}",
        cfg.eta
    );
    let n = x.n_cols();
    let r = table.dims.len();
    let gamma = broadcast_gamma(&cfg.gamma, n);

    let mut boxes: Vec<Hyperbox> = Vec::new();
    let mut absorbed = Vec::with_capacity(rows);
    for row in 0..rows {
        let (xl, xu) = (x.lo_row(row), x.hi_row(row));
        let a = cat_rows[row];
        assert_eq!(a.len(), r, "categorical arity mismatch");
        let av: Vec<u32> = a
            .iter()
            .map(|c| c.expect("training categorical values must be concrete"))
            .collect();
        let class = labels[row];

        let mut ranked: Vec<(usize, f64)> = boxes
            .iter()
            .enumerate()
            .filter(|(_, b)| b.class == class)
            .map(|(i, b)| {
                (
                    i,
                    membership_m1(xl, xu, a, &b.v, &b.w, bounds(b), table, &gamma),
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
        let mut snapshot = None;
        for &(bi, _) in &ranked {
            if !fits_theta(&boxes[bi], xl, xu, cfg.theta) {
                continue;
            }
            if !categorical_gate(bounds(&boxes[bi]), &av, table, cfg.eta) {
                continue;
            }
            let b = &mut boxes[bi];
            // kept so a failed pure-categorical contraction can undo this
            snapshot = Some((b.v.clone(), b.w.clone(), bounds(b).to_vec(), b.cardinality));
            for j in 0..n {
                b.v[j] = b.v[j].min(xl[j]);
                b.w[j] = b.w[j].max(xu[j]);
            }
            b.cardinality += 1;
            let pairs = bounds_mut(b);
            for j in 0..r {
                absorb_value(&mut pairs[j], av[j], j, table);
            }
            expanded = Some(bi);
            break;
        }

        let bi = match expanded {
            None => {
                boxes.push(mixed_point_box(xl, xu, a, class, boxes.len()));
                absorbed.push(boxes.len() - 1);
                continue;
            }
            Some(bi) => bi,
        };
        absorbed.push(bi);

        // a box overlaps another class only when every dimension, numeric
        // and categorical alike, overlaps; resolve oldest boxes first
        let count = boxes.len();
        for ki in 0..count {
            if ki == bi || boxes[ki].class == class {
                continue;
            }
            let num = if n == 0 {
                None
            } else {
                match overlap_test(&boxes[bi].v, &boxes[bi].w, &boxes[ki].v, &boxes[ki].w) {
                    OverlapOutcome::NoOverlap => continue,
                    OverlapOutcome::Overlap(d) => Some(d),
                }
            };
            let all_cat = {
                let (pi, pk) = (bounds(&boxes[bi]), bounds(&boxes[ki]));
                (0..r).all(|j| cat_dim_overlaps(&pi[j], &pk[j]))
            };
            if !all_cat {
                continue;
            }
            if let Some((dim, owner, replace_e, t)) = best_replacement(&boxes, bi, ki, table) {
                let b = &mut boxes[owner];
                let pairs = bounds_mut(b);
                if replace_e {
                    pairs[dim].e = Some(t);
                } else {
                    pairs[dim].f = Some(t);
                }
                b.contracted = true;
            } else if let Some(d) = num {
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
            } else {
                // pure categorical data with nowhere to move a bound: undo
                // the expansion and give the sample its own box
                let (sv, sw, sp, sc) = snapshot.take().expect("snapshot exists after expansion");
                let b = &mut boxes[bi];
                b.v = sv;
                b.w = sw;
                b.cardinality = sc;
                *bounds_mut(b) = sp;
                boxes.push(mixed_point_box(xl, xu, a, class, boxes.len()));
                *absorbed.last_mut().expect("pushed above") = boxes.len() - 1;
                break;
            }
        }
    }

    let model = GfmmModel {
        boxes,
        gamma,
        theta: cfg.theta,
        kind: ModelKind::MixedBounds(table.clone()),
        tie_break: cfg.tie_break,
    };
    (model, absorbed)
}

fn bounds(b: &Hyperbox) -> &[BoundPair] {
    match &b.cat {
        CatPayload::Bounds(p) => p,
        _ => unreachable!("box does not carry bound pairs"),
    }
}

fn bounds_mut(b: &mut Hyperbox) -> &mut Vec<BoundPair> {
    match &mut b.cat {
        CatPayload::Bounds(p) => p,
        _ => unreachable!("box does not carry bound pairs"),
    }
}

fn mixed_point_box(xl: &[f64], xu: &[f64], a: &[CatValue], class: u32, idx: usize) -> Hyperbox {
    Hyperbox {
        v: xl.to_vec(),
        w: xu.to_vec(),
        class,
        cardinality: 1,
        creation_index: idx,
        contracted: false,
        cat: CatPayload::Bounds(a.iter().map(|&e| BoundPair { e, f: None }).collect()),
    }
}

/// Expansion check for the categorical dimensions: empty pairs always
/// accept; a single concrete bound accepts values within `eta` of it; a
/// full pair accepts when absorbing the value would not grow the pair, or
/// grows it to at most `eta`.
fn categorical_gate(pairs: &[BoundPair], a: &[u32], table: &CatDistTable, eta: f64) -> bool {
    pairs.iter().enumerate().all(|(j, p)| match (p.e, p.f) {
        (None, None) => true,
        (Some(e), None) => table.h_value(j, e, a[j]) <= eta,
        (None, Some(f)) => table.h_value(j, f, a[j]) <= eta,
        (Some(e), Some(f)) => {
            let grown = table.h_value(j, e, a[j]).max(table.h_value(j, a[j], f));
            grown <= table.h_value(j, e, f) || grown <= eta
        }
    })
}

/// Moves one bound of the pair onto the absorbed value: an empty pair sets
/// `e`, a half-open pair closes `f`, and a full pair replaces the farther
/// bound (ties leave the pair unchanged).
fn absorb_value(p: &mut BoundPair, a: u32, dim: usize, table: &CatDistTable) {
    match (p.e, p.f) {
        (None, None) => p.e = Some(a),
        (Some(_), None) => p.f = Some(a),
        (None, Some(_)) => p.e = Some(a),
        (Some(e), Some(f)) => {
            let he_a = table.h_value(dim, e, a);
            let ha_f = table.h_value(dim, a, f);
            if he_a > ha_f {
                p.f = Some(a);
            } else if ha_f > he_a {
                p.e = Some(a);
            }
        }
    }
}

/// Searches both boxes for a single categorical bound whose replacement
/// removes every cross-equality on its dimension, preferring the smallest
/// resulting pair width; `None` when no dimension admits one.
fn best_replacement(
    boxes: &[Hyperbox],
    bi: usize,
    ki: usize,
    table: &CatDistTable,
) -> Option<(usize, usize, bool, u32)> {
    let mut best: Option<(f64, usize, usize, bool, u32)> = None;
    for (j, dim_table) in table.dims.iter().enumerate() {
        for (owner, other) in [(bi, ki), (ki, bi)] {
            let po = bounds(&boxes[owner])[j];
            let px = bounds(&boxes[other])[j];
            for replace_e in [true, false] {
                let (current, retained) = if replace_e { (po.e, po.f) } else { (po.f, po.e) };
                if current.is_none() {
                    continue;
                }
                for t in 0..dim_table.values as u32 {
                    let np = if replace_e {
                        BoundPair {
                            e: Some(t),
                            f: retained,
                        }
                    } else {
                        BoundPair {
                            e: retained,
                            f: Some(t),
                        }
                    };
                    if cat_dim_overlaps(&np, &px) {
                        continue;
                    }
                    let cost = table.h_bound(j, Some(t), retained);
                    if best.is_none_or(|b| cost < b.0) {
                        best = Some((cost, j, owner, replace_e, t));
                    }
                }
            }
        }
    }
    best.map(|(_, j, owner, replace_e, t)| (j, owner, replace_e, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::IntervalMatrix;

    fn table_from(
        rows: &[&[CatValue]],
        labels: &[u32],
        n_classes: usize,
        sizes: &[usize],
    ) -> CatDistTable {
        CatDistTable::build(rows, labels, n_classes, sizes)
    }

    fn crisp(rows: &[&[f64]]) -> IntervalMatrix {
        let flat: Vec<Vec<f64>> = rows.iter().map(|r| r.to_vec()).collect();
        IntervalMatrix::from_crisp(&crate::data::NumMatrix::from_rows(&flat))
    }

    #[test]
    fn first_sample_creates_box_with_open_f_bounds() {
        let x = crisp(&[&[0.2, 0.8]]);
        let cat = [Some(1u32), Some(0)];
        let table = table_from(&[&cat], &[0], 1, &[3, 2]);
        let model = train_m1(&x, &[&cat], &[0], &table, &M1Config::new(0.3, 1.0));
        assert_eq!(model.boxes.len(), 1);
        let b = &model.boxes[0];
        assert_eq!(b.v, vec![0.2, 0.8]);
        assert_eq!(b.w, vec![0.2, 0.8]);
        assert_eq!(
            bounds(b),
            &[
                BoundPair {
                    e: Some(1),
                    f: None
                },
                BoundPair {
                    e: Some(0),
                    f: None
                }
            ]
        );
    }

    #[test]
    fn membership_hand_example() {
        // one categorical dim at distance 0.4 from e, f open, numerics inside
        let mut table = table_from(&[&[Some(0)], &[Some(1)]], &[0, 1], 2, &[3]);
        table.dims[0].h = vec![0.0, 0.4, 0.7, 0.4, 0.0, 0.9, 0.7, 0.9, 0.0];
        table.dims[0].present = vec![true; 3];
        let m = membership_m1(
            &[0.5],
            &[0.5],
            &[Some(0)],
            &[0.4],
            &[0.6],
            &[BoundPair {
                e: Some(1),
                f: None,
            }],
            &table,
            &[1.0],
        );
        assert!((m - 0.6).abs() < 1e-12);
    }

    #[test]
    fn value_on_a_bound_counts_as_inside() {
        // h(0, 2) = 0.7 would otherwise drag the minimum down to 0.3
        let mut table = table_from(&[&[Some(0)], &[Some(1)]], &[0, 1], 2, &[3]);
        table.dims[0].h = vec![0.0, 0.4, 0.7, 0.4, 0.0, 0.9, 0.7, 0.9, 0.0];
        table.dims[0].present = vec![true; 3];
        let m = membership_m1(
            &[0.5],
            &[0.5],
            &[Some(0)],
            &[0.4],
            &[0.6],
            &[BoundPair {
                e: Some(0),
                f: Some(2),
            }],
            &table,
            &[1.0],
        );
        assert_eq!(m, 1.0);
    }

    #[test]
    fn no_categorical_dims_reduces_to_numeric() {
        let table = CatDistTable { dims: vec![] };
        let m = membership_m1(
            &[0.7],
            &[0.7],
            &[],
            &[0.2],
            &[0.4],
            &[],
            &table,
            &[1.0],
        );
        assert!((m - membership(&[0.7], &[0.7], &[0.2], &[0.4], &[1.0])).abs() < 1e-15);
    }

    #[test]
    fn second_sample_closes_the_pair() {
        let x = crisp(&[&[0.2], &[0.25]]);
        let rows: [&[CatValue]; 2] = [&[Some(0)], &[Some(1)]];
        let table = table_from(&rows, &[0, 0], 1, &[2]);
        let model = train_m1(&x, &rows, &[0, 0], &table, &M1Config::new(0.3, 1.0));
        assert_eq!(model.boxes.len(), 1);
        let b = &model.boxes[0];
        assert_eq!(b.v, vec![0.2]);
        assert_eq!(b.w, vec![0.25]);
        assert_eq!(
            bounds(b),
            &[BoundPair {
                e: Some(0),
                f: Some(1)
            }]
        );
        assert_eq!(b.cardinality, 2);
    }

    #[test]
    fn eta_zero_blocks_distant_values_but_not_identical_profiles() {
        // value 0 is pure class 0, value 1 is split: h(0, 1) = 1
        let rows: [&[CatValue]; 3] = [&[Some(0)], &[Some(1)], &[Some(1)]];
        let x = crisp(&[&[0.1], &[0.9], &[0.15]]);
        let labels = [0, 1, 0];
        let table = table_from(&rows, &labels, 2, &[2]);
        let tight = train_m1(&x, &rows, &labels, &table, &M1Config::new(0.3, 0.0));
        assert_eq!(tight.boxes.len(), 3);
        let loose = train_m1(&x, &rows, &labels, &table, &M1Config::new(0.3, 1.0));
        assert_eq!(loose.boxes.len(), 2);

        // identical class profiles give h = 0, which eta = 0 still accepts
        let rows2: [&[CatValue]; 4] = [&[Some(0)], &[Some(0)], &[Some(1)], &[Some(1)]];
        let x2 = crisp(&[&[0.1], &[0.9], &[0.12], &[0.88]]);
        let labels2 = [0, 1, 0, 1];
        let table2 = table_from(&rows2, &labels2, 2, &[2]);
        let model2 = train_m1(&x2, &rows2, &labels2, &table2, &M1Config::new(0.1, 0.0));
        assert_eq!(model2.boxes.len(), 2);
        for b in &model2.boxes {
            assert_eq!(bounds(b)[0].f, Some(1));
        }
    }

    #[test]
    fn full_overlap_prefers_categorical_replacement() {
        // class-0 box grows over the class-1 point; both share value 0, and
        // the class-1 box can swap its e to value 1 at zero pair width
        let x = crisp(&[&[0.50], &[0.30], &[0.55]]);
        let rows: [&[CatValue]; 3] = [&[Some(0)], &[Some(0)], &[Some(0)]];
        let labels = [1, 0, 0];
        let table = table_from(&rows, &labels, 2, &[3]);
        let model = train_m1(&x, &rows, &labels, &table, &M1Config::new(0.5, 1.0));
        assert_eq!(model.boxes.len(), 2);
        let class1 = &model.boxes[0];
        let class0 = &model.boxes[1];
        assert_eq!(
            bounds(class1),
            &[BoundPair {
                e: Some(1),
                f: None
            }]
        );
        assert!(class1.contracted);
        // numeric bounds untouched on both sides
        assert_eq!((class1.v[0], class1.w[0]), (0.50, 0.50));
        assert_eq!((class0.v[0], class0.w[0]), (0.30, 0.55));
        assert_eq!(
            bounds(class0),
            &[BoundPair {
                e: Some(0),
                f: Some(0)
            }]
        );
    }

    #[test]
    fn numeric_contraction_when_no_replacement_exists() {
        // single-value domain: every candidate replacement still collides,
        // so the numeric dimension absorbs the cut
        let x = crisp(&[&[0.50], &[0.30], &[0.55]]);
        let rows: [&[CatValue]; 3] = [&[Some(0)], &[Some(0)], &[Some(0)]];
        let labels = [1, 0, 0];
        let table = table_from(&rows, &labels, 2, &[1]);
        let model = train_m1(&x, &rows, &labels, &table, &M1Config::new(0.5, 1.0));
        assert_eq!(model.boxes.len(), 2);
        let class1 = &model.boxes[0];
        let class0 = &model.boxes[1];
        // enclosed-point case cuts the bigger box back to the small one's edge
        assert_eq!((class0.v[0], class0.w[0]), (0.30, 0.50));
        assert!(class0.contracted);
        assert_eq!((class1.v[0], class1.w[0]), (0.50, 0.50));
        assert_eq!(bounds(class1)[0].e, Some(0));
    }

    #[test]
    fn pure_categorical_dead_end_reverts_the_expansion() {
        // both domain values end up colliding with the class-1 pair, there
        // is no numeric dimension to cut, so the expansion is undone and
        // the sample gets a fresh box
        let x = IntervalMatrix::new(6, 0, vec![], vec![]);
        let rows: [&[CatValue]; 6] = [
            &[Some(0)],
            &[Some(1)],
            &[Some(0)],
            &[Some(1)],
            &[Some(0)],
            &[Some(0)],
        ];
        let labels = [1, 1, 0, 0, 1, 1];
        let table = table_from(&rows, &labels, 2, &[2]);
        let model = train_m1(&x, &rows, &labels, &table, &M1Config::new(1.0, 1.0));
        assert_eq!(model.boxes.len(), 3);
        let b1 = &model.boxes[0];
        assert_eq!(b1.class, 1);
        assert_eq!(
            bounds(b1),
            &[BoundPair {
                e: Some(0),
                f: Some(1)
            }]
        );
        assert_eq!(b1.cardinality, 4);
        let a = &model.boxes[1];
        assert_eq!((a.class, a.cardinality), (0, 1));
        assert_eq!(
            bounds(a),
            &[BoundPair {
                e: Some(0),
                f: None
            }]
        );
        let fresh = &model.boxes[2];
        assert_eq!((fresh.class, fresh.cardinality), (0, 1));
        assert_eq!(
            bounds(fresh),
            &[BoundPair {
                e: Some(1),
                f: None
            }]
        );
    }

    #[test]
    fn categorical_overlap_relation_is_symmetric() {
        let mut state = 0x2545F4914F6CDD1Du64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..2000 {
            let pick = |raw: u64| -> Option<u32> {
                let v = raw % 4;
                if v == 3 {
                    None
                } else {
                    Some(v as u32)
                }
            };
            let a = BoundPair {
                e: pick(next()),
                f: pick(next()),
            };
            let b = BoundPair {
                e: pick(next()),
                f: pick(next()),
            };
            assert_eq!(cat_dim_overlaps(&a, &b), cat_dim_overlaps(&b, &a));
        }
    }

    #[test]
    fn expansion_never_decreases_absorbed_membership() {
        // random boxes and samples over 2 numeric + 2 categorical dims;
        // whenever the gates accept, membership must not drop and bound
        // values equal to the sample must score 1 on their dimension
        let build_rows: [&[CatValue]; 6] = [
            &[Some(0), Some(2)],
            &[Some(1), Some(0)],
            &[Some(2), Some(1)],
            &[Some(0), Some(1)],
            &[Some(1), Some(2)],
            &[Some(2), Some(0)],
        ];
        let table = table_from(&build_rows, &[0, 1, 0, 1, 0, 1], 2, &[3, 3]);
        let gamma = [1.0, 1.0];
        let mut state = 0x9E3779B97F4A7C15u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let unit = |s: u64| (s >> 11) as f64 / (1u64 << 53) as f64;
        let mut expansions = 0;
        for _ in 0..400 {
            let (c0, c1) = (unit(next()), unit(next()));
            let (v, w) = (vec![c0.min(c1), 0.4], vec![c0.max(c1), 0.6]);
            let mut pairs = vec![
                BoundPair {
                    e: Some((next() % 3) as u32),
                    f: if next() % 2 == 0 {
                        None
                    } else {
                        Some((next() % 3) as u32)
                    },
                },
                BoundPair {
                    e: Some((next() % 3) as u32),
                    f: None,
                },
            ];
            let s = unit(next());
            let (xl, xu) = (vec![s, unit(next())], vec![s, unit(next())]);
            let (xl, xu) = (
                vec![xl[0].min(xu[0]), xl[1].min(xu[1])],
                vec![xl[0].max(xu[0]), xl[1].max(xu[1])],
            );
            let av = [(next() % 3) as u32, (next() % 3) as u32];
            let cat = [Some(av[0]), Some(av[1])];
            if !categorical_gate(&pairs, &av, &table, 0.8) {
                continue;
            }
            let before = membership_m1(&xl, &xu, &cat, &v, &w, &pairs, &table, &gamma);
            let (mut nv, mut nw) = (v.clone(), w.clone());
            for j in 0..2 {
                nv[j] = nv[j].min(xl[j]);
                nw[j] = nw[j].max(xu[j]);
            }
            for j in 0..2 {
                absorb_value(&mut pairs[j], av[j], j, &table);
            }
            let after = membership_m1(&xl, &xu, &cat, &nv, &nw, &pairs, &table, &gamma);
            assert!(
                after >= before - 1e-12,
                "membership dropped from {before} to {after}"
            );
            for (j, p) in pairs.iter().enumerate() {
                if p.e == Some(av[j]) || p.f == Some(av[j]) {
                    let one_dim = membership_m1(
                        &[],
                        &[],
                        &[cat[j]],
                        &[],
                        &[],
                        &[*p],
                        &CatDistTable {
                            dims: vec![table.dims[j].clone()],
                        },
                        &[],
                    );
                    assert_eq!(one_dim, 1.0);
                }
            }
            expansions += 1;
        }
        assert!(expansions > 50, "gate accepted too few cases: {expansions}");
    }

    #[test]
    fn single_winner_training_samples_keep_their_label() {
        let mut state = 0xA24BAED4963EE407u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let unit = |s: u64| (s >> 11) as f64 / (1u64 << 53) as f64;
        let mut num: Vec<Vec<f64>> = Vec::new();
        let mut cats: Vec<Vec<CatValue>> = Vec::new();
        let mut labels = Vec::new();
        for _ in 0..80 {
            let p = vec![unit(next()), unit(next())];
            labels.push((p[0] > 0.5) as u32);
            num.push(p);
            cats.push(vec![Some((next() % 3) as u32)]);
        }
        let num_refs: Vec<&[f64]> = num.iter().map(|r| &r[..]).collect();
        let cat_refs: Vec<&[CatValue]> = cats.iter().map(|r| &r[..]).collect();
        let x = crisp(&num_refs);
        let table = table_from(&cat_refs, &labels, 2, &[3]);
        let model = train_m1(&x, &cat_refs, &labels, &table, &M1Config::new(0.25, 0.7));
        let mut checked = 0;
        for i in 0..num.len() {
            let ms = model.memberships(&num[i], &num[i], &cats[i]);
            let top = ms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let winners: Vec<usize> = (0..ms.len()).filter(|&k| ms[k] == top).collect();
            let classes: Vec<u32> = winners.iter().map(|&k| model.boxes[k].class).collect();
            if classes.iter().all(|&c| c == labels[i]) {
                let p = model.predict(&num[i], &num[i], &cats[i]);
                assert_eq!(p.class, labels[i]);
                checked += 1;
            }
        }
        assert!(checked > 40, "too few single-class winners: {checked}");
    }
}
