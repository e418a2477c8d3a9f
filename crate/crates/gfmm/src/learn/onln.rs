//! Original incremental learner: expand the best same-class box when it
//! fits, then contract away any overlap it created with other classes.

use super::{fits_theta, pair_mut, point_box, ranked_candidates, LearnerConfig};
use crate::data::IntervalMatrix;
use crate::hyperbox::{contract, overlap_test, GfmmModel, ModelKind, OverlapOutcome};

pub fn train_onln(x: &IntervalMatrix, labels: &[u32], cfg: &LearnerConfig) -> GfmmModel {
    train_onln_traced(x, labels, cfg).0
}

/// Also reports, per training row, the position of the box that absorbed it;
/// together with the per-box `contracted` flag this supports auditing that
/// no sample was silently lost.
pub fn train_onln_traced(
    x: &IntervalMatrix,
    labels: &[u32],
    cfg: &LearnerConfig,
) -> (GfmmModel, Vec<usize>) {
    assert_eq!(x.n_rows(), labels.len());
    let gamma = cfg.resolved_gamma(x.n_cols());
    let mut boxes = Vec::new();
    let mut absorbed = Vec::with_capacity(x.n_rows());

    for (i, &class) in labels.iter().enumerate() {
        let (xl, xu) = (x.lo_row(i), x.hi_row(i));
        let cands = ranked_candidates(&boxes, xl, xu, class, &gamma);

        if let Some(&(win, m)) = cands.first() {
            if m == 1.0 {
                boxes[win].cardinality += 1;
                absorbed.push(win);
                continue;
            }
        }

        let mut expanded = None;
        for &(bi, _) in &cands {
            if fits_theta(&boxes[bi], xl, xu, cfg.theta) {
                let b = &mut boxes[bi];
                for j in 0..x.n_cols() {
                    b.v[j] = b.v[j].min(xl[j]);
                    b.w[j] = b.w[j].max(xu[j]);
                }
                b.cardinality += 1;
                expanded = Some(bi);
                break;
            }
        }

        let bi = match expanded {
            Some(bi) => bi,
            None => {
                boxes.push(point_box(xl, xu, class, boxes.len()));
                absorbed.push(boxes.len() - 1);
                continue;
            }
        };
        absorbed.push(bi);

        // the grown box may now overlap other classes; one pass in creation
        // order, contracting each detected overlap on the spot
        for ki in 0..boxes.len() {
            if boxes[ki].class == class {
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
        kind: ModelKind::Onln,
        tie_break: cfg.tie_break,
    };
    (model, absorbed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperbox::membership;

    fn crisp(rows: &[&[f64]]) -> IntervalMatrix {
        let flat: Vec<Vec<f64>> = rows.iter().map(|r| r.to_vec()).collect();
        IntervalMatrix::from_crisp(&crate::data::NumMatrix::from_rows(&flat))
    }

    #[test]
    fn one_sample_makes_one_point_box() {
        let x = crisp(&[&[0.3, 0.7]]);
        let model = train_onln(&x, &[0], &LearnerConfig::new(0.5));
        assert_eq!(model.boxes.len(), 1);
        assert_eq!(model.boxes[0].v, vec![0.3, 0.7]);
        assert_eq!(model.boxes[0].w, vec![0.3, 0.7]);
        assert_eq!(model.boxes[0].cardinality, 1);
    }

    #[test]
    fn theta_one_collapses_each_class_to_one_box() {
        let x = crisp(&[
            &[0.1, 0.1],
            &[0.9, 0.9],
            &[0.2, 0.8],
            &[0.8, 0.2],
            &[0.5, 0.5],
            &[0.4, 0.6],
        ]);
        let labels = [0, 1, 0, 1, 0, 1];
        let model = train_onln(&x, &labels, &LearnerConfig::new(1.0));
        assert_eq!(model.boxes.len(), 2);
    }

    #[test]
    fn contained_sample_credits_the_winning_box() {
        let x = crisp(&[&[0.2], &[0.4], &[0.3]]);
        let model = train_onln(&x, &[0, 0, 0], &LearnerConfig::new(0.5));
        assert_eq!(model.boxes.len(), 1);
        assert_eq!(model.boxes[0].cardinality, 3);
    }

    #[test]
    fn oversized_expansion_spawns_a_new_box() {
        let x = crisp(&[&[0.1], &[0.9]]);
        let model = train_onln(&x, &[0, 0], &LearnerConfig::new(0.3));
        assert_eq!(model.boxes.len(), 2);
    }

    #[test]
    fn cross_class_overlap_is_contracted_away() {
        // class-0 box grows over the class-1 point box, then must retreat
        let x = crisp(&[&[0.2], &[0.3], &[0.4]]);
        let labels = [0, 1, 0];
        let (model, absorbed) = train_onln_traced(&x, &labels, &LearnerConfig::new(0.5));
        assert_eq!(model.boxes.len(), 2);
        let outcome = overlap_test(
            &model.boxes[0].v,
            &model.boxes[0].w,
            &model.boxes[1].v,
            &model.boxes[1].w,
        );
        assert_eq!(outcome, OverlapOutcome::NoOverlap);
        assert!(model.boxes.iter().any(|b| b.contracted));
        assert_eq!(absorbed, vec![0, 1, 0]);
    }

    #[test]
    fn every_sample_is_absorbed_or_its_box_was_contracted() {
        // pseudo-random two-class data; the disjunction must hold row by row
        let mut state = 0x2545F4914F6CDD1Du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        let rows: Vec<Vec<f64>> = (0..120).map(|_| vec![next(), next()]).collect();
        let labels: Vec<u32> = (0..120).map(|i| (i % 3 == 0) as u32).collect();
        let x = IntervalMatrix::from_crisp(&crate::data::NumMatrix::from_rows(&rows));
        let cfg = LearnerConfig::new(0.3);
        let (model, absorbed) = train_onln_traced(&x, &labels, &cfg);
        for i in 0..x.n_rows() {
            let covered = model.boxes.iter().any(|b| {
                b.class == labels[i]
                    && membership(x.lo_row(i), x.hi_row(i), &b.v, &b.w, &model.gamma) == 1.0
            });
            assert!(
                covered || model.boxes[absorbed[i]].contracted,
                "sample {i} lost without a contraction"
            );
        }
    }
}
