//! Incremental learner without contraction: an expansion is allowed only
//! when the grown box would stay clear of every other-class box.

use super::{fits_theta, point_box, ranked_candidates, LearnerConfig};
use crate::data::IntervalMatrix;
use crate::hyperbox::{overlap_test, GfmmModel, Hyperbox, ModelKind, OverlapOutcome};

fn clashes(boxes: &[Hyperbox], class: u32, tv: &[f64], tw: &[f64]) -> bool {
    boxes.iter().any(|o| {
        o.class != class
            && matches!(overlap_test(tv, tw, &o.v, &o.w), OverlapOutcome::Overlap(_))
    })
}

pub fn train_iol(x: &IntervalMatrix, labels: &[u32], cfg: &LearnerConfig) -> GfmmModel {
    assert_eq!(x.n_rows(), labels.len());
    let gamma = cfg.resolved_gamma(x.n_cols());
    let mut boxes: Vec<Hyperbox> = Vec::new();

    for (i, &class) in labels.iter().enumerate() {
        let (xl, xu) = (x.lo_row(i), x.hi_row(i));
        let cands = ranked_candidates(&boxes, xl, xu, class, &gamma);

        if let Some(&(win, m)) = cands.first() {
            if m == 1.0 {
                boxes[win].cardinality += 1;
                continue;
            }
        }

        let mut expanded = false;
        for &(bi, _) in &cands {
            if !fits_theta(&boxes[bi], xl, xu, cfg.theta) {
                continue;
            }
            let tv: Vec<f64> = boxes[bi].v.iter().zip(xl).map(|(v, x)| v.min(*x)).collect();
            let tw: Vec<f64> = boxes[bi].w.iter().zip(xu).map(|(w, x)| w.max(*x)).collect();
            if clashes(&boxes, class, &tv, &tw) {
                continue;
            }
            let b = &mut boxes[bi];
            b.v = tv;
            b.w = tw;
            b.cardinality += 1;
            expanded = true;
            break;
        }
        if !expanded {
            boxes.push(point_box(xl, xu, class, boxes.len()));
        }
    }

    GfmmModel {
        boxes,
        gamma,
        theta: cfg.theta,
        kind: ModelKind::Iol,
        tie_break: cfg.tie_break,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn crisp(rows: &[&[f64]]) -> IntervalMatrix {
        let flat: Vec<Vec<f64>> = rows.iter().map(|r| r.to_vec()).collect();
        IntervalMatrix::from_crisp(&crate::data::NumMatrix::from_rows(&flat))
    }

    #[test]
    fn coincident_points_of_different_classes_stay_separate() {
        let x = crisp(&[&[0.5, 0.5], &[0.5, 0.5]]);
        let model = train_iol(&x, &[0, 1], &LearnerConfig::new(1.0));
        assert_eq!(model.boxes.len(), 2);
        assert_eq!(model.boxes[0].v, model.boxes[0].w);
    }

    #[test]
    fn blocked_expansion_creates_a_box_instead_of_contracting() {
        // growing box 0 over the class-1 point would overlap; a third box
        // appears and nothing ever shrinks
        let x = crisp(&[&[0.2], &[0.5], &[0.6]]);
        let model = train_iol(&x, &[0, 1, 0], &LearnerConfig::new(1.0));
        assert_eq!(model.boxes.len(), 3);
        assert_eq!(model.boxes[0].v, vec![0.2]);
        assert_eq!(model.boxes[0].w, vec![0.2]);
        assert!(!model.boxes.iter().any(|b| b.contracted));
    }

    #[test]
    fn expansion_proceeds_when_no_class_conflict_exists() {
        let x = crisp(&[&[0.2], &[0.3], &[0.9]]);
        let model = train_iol(&x, &[0, 0, 1], &LearnerConfig::new(0.5));
        assert_eq!(model.boxes.len(), 2);
        assert_eq!(model.boxes[0].w, vec![0.3]);
        assert_eq!(model.boxes[0].cardinality, 2);
    }

    #[test]
    fn final_models_never_overlap_across_classes() {
        let mut state = 0x9E3779B97F4A7C15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        // axis-aligned class boundary: no box can reach across it, so even
        // the point boxes created when expansion is blocked stay clear
        let rows: Vec<Vec<f64>> = (0..150).map(|_| vec![next(), next()]).collect();
        let labels: Vec<u32> = rows.iter().map(|r| (r[0] > 0.5) as u32).collect();
        let x = IntervalMatrix::from_crisp(&crate::data::NumMatrix::from_rows(&rows));
        let model = train_iol(&x, &labels, &LearnerConfig::new(0.4));
        for a in &model.boxes {
            for b in &model.boxes {
                if a.class != b.class {
                    assert_eq!(
                        overlap_test(&a.v, &a.w, &b.v, &b.w),
                        OverlapOutcome::NoOverlap
                    );
                }
            }
        }
    }
}
