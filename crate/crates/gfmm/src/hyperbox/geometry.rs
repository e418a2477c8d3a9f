//! Hyperbox geometry: the membership ramp, interval membership, the
//! four-case overlap test and the matching contraction step.

/// Two-sided threshold ramp: clamps `lambda * gamma` into `[0, 1]`.
#[inline]
pub fn ramp(lambda: f64, gamma: f64) -> f64 {
    (lambda * gamma).clamp(0.0, 1.0)
}

/// Membership of the interval sample `[xl, xu]` in the box `[v, w]`.
///
/// Per dimension the sample loses membership linearly (slope `gamma[j]`) for
/// protruding past either face; the box-wide value is the worst dimension.
/// A zero-dimensional input has membership 1.
pub fn membership(xl: &[f64], xu: &[f64], v: &[f64], w: &[f64], gamma: &[f64]) -> f64 {
    debug_assert_eq!(xl.len(), v.len());
    let mut b = 1.0f64;
    for j in 0..v.len() {
        let above = 1.0 - ramp(xu[j] - w[j], gamma[j]);
        let below = 1.0 - ramp(v[j] - xl[j], gamma[j]);
        b = b.min(above.min(below));
    }
    b
}

/// The four relative placements of two overlapping intervals, in test order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OverlapCase {
    /// `v_i <= v_k < w_i <= w_k`: box i leads, box k trails.
    Case1,
    /// `v_k <= v_i < w_k <= w_i`: box k leads, box i trails.
    Case2,
    /// `v_i < v_k <= w_k < w_i`: box k inside box i.
    Case3,
    /// `v_k < v_i <= w_i < w_k`: box i inside box k.
    Case4,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OverlapDim {
    pub dim: usize,
    pub case: OverlapCase,
    /// Width of the overlap on `dim`; the smallest width over dimensions.
    pub delta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OverlapOutcome {
    /// Some dimension matched none of the four cases, so the boxes do not
    /// share volume. Note the deliberate blind spot: a dimension on which
    /// both boxes are the same degenerate point fails every case.
    NoOverlap,
    Overlap(OverlapDim),
}

fn case_width(vi: f64, wi: f64, vk: f64, wk: f64) -> Option<(OverlapCase, f64)> {
    if vi <= vk && vk < wi && wi <= wk {
        Some((OverlapCase::Case1, wi - vk))
    } else if vk <= vi && vi < wk && wk <= wi {
        Some((OverlapCase::Case2, wk - vi))
    } else if vi < vk && wk < wi {
        // vk <= wk holds by construction
        Some((OverlapCase::Case3, (wk - vi).min(wi - vk)))
    } else if vk < vi && wi < wk {
        Some((OverlapCase::Case4, (wi - vk).min(wk - vi)))
    } else {
        None
    }
}

/// Tests boxes `[vi, wi]` and `[vk, wk]` for overlap.
///
/// Walks the dimensions keeping the smallest overlap width seen so far and
/// reports that dimension with its case; bails out as soon as one dimension
/// shows no overlap.
pub fn overlap_test(vi: &[f64], wi: &[f64], vk: &[f64], wk: &[f64]) -> OverlapOutcome {
    debug_assert_eq!(vi.len(), vk.len());
    let mut best: Option<OverlapDim> = None;
    for j in 0..vi.len() {
        match case_width(vi[j], wi[j], vk[j], wk[j]) {
            None => return OverlapOutcome::NoOverlap,
            Some((case, width)) => {
                let smaller = best.map_or(true, |b| width < b.delta);
                if smaller {
                    best = Some(OverlapDim {
                        dim: j,
                        case,
                        delta: width,
                    });
                }
            }
        }
    }
    match best {
        Some(d) => OverlapOutcome::Overlap(d),
        // zero-dimensional boxes coincide trivially but have no dimension to
        // contract; callers never construct these
        None => OverlapOutcome::NoOverlap,
    }
}

/// Resolves the overlap reported by [`overlap_test`] by adjusting the two
/// boxes on dimension `dim` only: partial overlaps meet at the midpoint,
/// containments surrender the cheaper face.
pub fn contract(
    dim: usize,
    case: OverlapCase,
    vi: &mut [f64],
    wi: &mut [f64],
    vk: &mut [f64],
    wk: &mut [f64],
) {
    let j = dim;
    match case {
        OverlapCase::Case1 => {
            let mid = 0.5 * (wi[j] + vk[j]);
            wi[j] = mid;
            vk[j] = mid;
        }
        OverlapCase::Case2 => {
            let mid = 0.5 * (wk[j] + vi[j]);
            wk[j] = mid;
            vi[j] = mid;
        }
        OverlapCase::Case3 => {
            if wk[j] - vi[j] <= wi[j] - vk[j] {
                vi[j] = wk[j];
            } else {
                wi[j] = vk[j];
            }
        }
        OverlapCase::Case4 => {
            if wk[j] - vi[j] <= wi[j] - vk[j] {
                wk[j] = vi[j];
            } else {
                vk[j] = wi[j];
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ramp_clamps_the_scaled_argument() {
        assert_eq!(ramp(2.0, 1.0), 1.0);
        assert_eq!(ramp(0.3, 1.0), 0.3);
        assert_eq!(ramp(-0.2, 1.0), 0.0);
        assert_eq!(ramp(0.3, 2.0), 0.6);
        assert_eq!(ramp(0.0, 1.0), 0.0);
    }

    #[test]
    fn membership_of_a_crisp_point() {
        let v = [0.2, 0.2];
        let w = [0.6, 0.6];
        let x = [0.7, 0.6];
        let b = membership(&x, &x, &v, &w, &[1.0, 1.0]);
        assert!((b - 0.9).abs() < 1e-15);
        // inside the box: exactly 1
        let inside = [0.4, 0.25];
        assert_eq!(membership(&inside, &inside, &v, &w, &[1.0, 1.0]), 1.0);
    }

    #[test]
    fn membership_of_an_interval_sample() {
        let v = [0.2];
        let w = [0.6];
        let b = membership(&[0.5], &[0.7], &v, &w, &[1.0]);
        assert!((b - 0.9).abs() < 1e-15);
        // sample spilling past both faces is scored on the worse side
        assert_eq!(membership(&[0.1], &[0.9], &[0.3], &[0.4], &[1.0]), 0.5);
    }

    #[test]
    fn steeper_gamma_shrinks_membership() {
        let b1 = membership(&[0.7], &[0.7], &[0.2], &[0.6], &[1.0]);
        let b2 = membership(&[0.7], &[0.7], &[0.2], &[0.6], &[2.0]);
        assert!((b1 - 0.9).abs() < 1e-15);
        assert!((b2 - 0.8).abs() < 1e-15);
    }

    #[test]
    fn overlap_reports_smallest_dimension_and_case() {
        // dim 0 overlap width 0.2 (case 1), dim 1 width 0.05 (case 2)
        let vi = [0.0, 0.5];
        let wi = [0.5, 0.9];
        let vk = [0.3, 0.3];
        let wk = [0.8, 0.55];
        match overlap_test(&vi, &wi, &vk, &wk) {
            OverlapOutcome::Overlap(d) => {
                assert_eq!(d.dim, 1);
                assert_eq!(d.case, OverlapCase::Case2);
                assert!((d.delta - 0.05).abs() < 1e-15);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn later_wider_overlap_does_not_hide_earlier_minimum() {
        // dim 0 width 0.1, dim 1 width 0.4: still overlapping, dim 0 wins
        let vi = [0.0, 0.0];
        let wi = [0.3, 0.6];
        let vk = [0.2, 0.2];
        let wk = [0.6, 0.9];
        match overlap_test(&vi, &wi, &vk, &wk) {
            OverlapOutcome::Overlap(d) => {
                assert_eq!(d.dim, 0);
                assert!((d.delta - 0.1).abs() < 1e-15);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn containment_cases_are_detected() {
        // box k strictly inside box i on both dims
        let vi = [0.0, 0.0];
        let wi = [1.0, 1.0];
        let vk = [0.4, 0.2];
        let wk = [0.5, 0.3];
        match overlap_test(&vi, &wi, &vk, &wk) {
            OverlapOutcome::Overlap(d) => assert_eq!(d.case, OverlapCase::Case3),
            other => panic!("{other:?}"),
        }
        match overlap_test(&vk, &wk, &vi, &wi) {
            OverlapOutcome::Overlap(d) => assert_eq!(d.case, OverlapCase::Case4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn disjoint_dimension_short_circuits() {
        let vi = [0.0, 0.0];
        let wi = [0.2, 1.0];
        let vk = [0.3, 0.0];
        let wk = [0.5, 1.0];
        assert_eq!(overlap_test(&vi, &wi, &vk, &wk), OverlapOutcome::NoOverlap);
        // touching faces do not count as overlap
        let vk2 = [0.2, 0.0];
        assert_eq!(overlap_test(&vi, &wi, &vk2, &wk), OverlapOutcome::NoOverlap);
    }

    #[test]
    fn degenerate_equal_dimension_is_a_blind_spot() {
        // overlapping in the first two dimensions...
        let vi2 = [0.3, 0.5];
        let wi2 = [0.4, 0.6];
        let vk2 = [0.35, 0.55];
        let wk2 = [0.45, 0.7];
        match overlap_test(&vi2, &wi2, &vk2, &wk2) {
            OverlapOutcome::Overlap(d) => {
                // both widths are 0.05 in exact arithmetic; binary rounding
                // makes 0.6-0.55 strictly smaller than 0.4-0.35
                assert_eq!(d.dim, 1);
                assert_eq!(d.case, OverlapCase::Case1);
                assert!((d.delta - 0.05).abs() < 1e-15);
            }
            other => panic!("{other:?}"),
        }
        // ...but an added dimension where both boxes degenerate to the same
        // point defeats all four case patterns
        let vi3 = [0.3, 0.5, 0.0];
        let wi3 = [0.4, 0.6, 0.0];
        let vk3 = [0.35, 0.55, 0.0];
        let wk3 = [0.45, 0.7, 0.0];
        assert_eq!(
            overlap_test(&vi3, &wi3, &vk3, &wk3),
            OverlapOutcome::NoOverlap
        );
    }

    #[test]
    fn contraction_meets_at_the_midpoint() {
        let mut vi = [0.2];
        let mut wi = [0.6];
        let mut vk = [0.35];
        let mut wk = [0.9];
        contract(0, OverlapCase::Case1, &mut vi, &mut wi, &mut vk, &mut wk);
        assert!((wi[0] - 0.475).abs() < 1e-15);
        assert!((vk[0] - 0.475).abs() < 1e-15);
        assert_eq!(
            overlap_test(&vi, &wi, &vk, &wk),
            OverlapOutcome::NoOverlap
        );
    }

    #[test]
    fn contraction_resolves_every_case() {
        let setups: Vec<([f64; 1], [f64; 1], [f64; 1], [f64; 1])> = vec![
            ([0.1], [0.5], [0.3], [0.8]),  // case 1
            ([0.3], [0.8], [0.1], [0.5]),  // case 2
            ([0.0], [1.0], [0.4], [0.6]),  // case 3
            ([0.4], [0.6], [0.0], [1.0]),  // case 4
        ];
        for (mut vi, mut wi, mut vk, mut wk) in setups {
            let outcome = overlap_test(&vi, &wi, &vk, &wk);
            let d = match outcome {
                OverlapOutcome::Overlap(d) => d,
                other => panic!("{other:?}"),
            };
            contract(d.dim, d.case, &mut vi, &mut wi, &mut vk, &mut wk);
            assert!(vi[0] <= wi[0] && vk[0] <= wk[0], "bounds stay ordered");
            assert_eq!(
                overlap_test(&vi, &wi, &vk, &wk),
                OverlapOutcome::NoOverlap,
                "{vi:?} {wi:?} {vk:?} {wk:?}"
            );
        }
    }
}
