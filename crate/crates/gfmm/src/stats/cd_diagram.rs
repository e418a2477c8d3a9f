//! Critical difference diagrams: a rank axis with method markers and bars
//! linking groups whose mean ranks differ by less than the CD.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

const WIDTH: f64 = 720.0;
const X_LEFT: f64 = 150.0;
const X_RIGHT: f64 = 570.0;
const AXIS_Y: f64 = 60.0;

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Methods sorted best (lowest mean rank) first; rank ties keep the
/// original column order.
fn sorted_methods(names: &[&str], mean_ranks: &[f64]) -> Vec<(usize, f64)> {
    let mut order: Vec<(usize, f64)> = mean_ranks.iter().copied().enumerate().collect();
    order.sort_by(|a, b| a.1.total_cmp(&b.1).then(a.0.cmp(&b.0)));
    assert_eq!(names.len(), mean_ranks.len());
    order
}

/// Maximal runs of rank-adjacent methods whose spread stays within the CD.
/// Input must be sorted ascending; returned pairs index into that order.
fn linked_groups(sorted_ranks: &[f64], cd: f64) -> Vec<(usize, usize)> {
    let mut groups = Vec::new();
    let mut last_end = 0;
    for i in 0..sorted_ranks.len() {
        let mut j = i;
        while j + 1 < sorted_ranks.len() && sorted_ranks[j + 1] - sorted_ranks[i] <= cd + 1e-12 {
            j += 1;
        }
        if j > i && j > last_end {
            groups.push((i, j));
            last_end = j;
        }
    }
    groups
}

pub fn render_cd_svg(names: &[&str], mean_ranks: &[f64], cd: f64) -> String {
    let order = sorted_methods(names, mean_ranks);
    let m = order.len();
    let x = |rank: f64| {
        if m == 1 {
            (X_LEFT + X_RIGHT) / 2.0
        } else {
            X_LEFT + (rank - 1.0) / (m as f64 - 1.0) * (X_RIGHT - X_LEFT)
        }
    };
    let ranks: Vec<f64> = order.iter().map(|&(_, r)| r).collect();
    let groups = linked_groups(&ranks, cd);
    let bar_rows = groups.len();
    let label_rows = m.div_ceil(2);
    let height = AXIS_Y + 14.0 * bar_rows as f64 + 18.0 * label_rows as f64 + 40.0;

    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{height:.0}\" \
         font-family=\"monospace\" font-size=\"12\">"
    );
    let _ = writeln!(
        s,
        "  <line x1=\"{X_LEFT}\" y1=\"{AXIS_Y}\" x2=\"{X_RIGHT}\" y2=\"{AXIS_Y}\" \
         stroke=\"black\"/>"
    );
    for tick in 1..=m.max(1) {
        let tx = x(tick as f64);
        let _ = writeln!(
            s,
            "  <line x1=\"{tx:.2}\" y1=\"{}\" x2=\"{tx:.2}\" y2=\"{AXIS_Y}\" stroke=\"black\"/>",
            AXIS_Y - 6.0
        );
        let _ = writeln!(
            s,
            "  <text x=\"{tx:.2}\" y=\"{}\" text-anchor=\"middle\">{tick}</text>",
            AXIS_Y - 10.0
        );
    }
    if m > 1 && cd > 0.0 {
        let cx0 = x(1.0);
        let cx1 = x((1.0 + cd).min(m as f64));
        let cy = AXIS_Y - 36.0;
        let _ = writeln!(
            s,
            "  <line x1=\"{cx0:.2}\" y1=\"{cy}\" x2=\"{cx1:.2}\" y2=\"{cy}\" stroke=\"black\"/>"
        );
        for cx in [cx0, cx1] {
            let _ = writeln!(
                s,
                "  <line x1=\"{cx:.2}\" y1=\"{}\" x2=\"{cx:.2}\" y2=\"{}\" stroke=\"black\"/>",
                cy - 4.0,
                cy + 4.0
            );
        }
        let _ = writeln!(
            s,
            "  <text x=\"{:.2}\" y=\"{}\">CD = {cd:.4}</text>",
            cx1 + 8.0,
            cy + 4.0
        );
    }
    for (row, &(i, j)) in groups.iter().enumerate() {
        let by = AXIS_Y + 8.0 + 14.0 * row as f64;
        let _ = writeln!(
            s,
            "  <line x1=\"{:.2}\" y1=\"{by}\" x2=\"{:.2}\" y2=\"{by}\" \
             stroke=\"black\" stroke-width=\"4\"/>",
            x(ranks[i]) - 2.0,
            x(ranks[j]) + 2.0
        );
    }
    // best half labelled on the left, worst half on the right
    let stem_top = AXIS_Y + 8.0 + 14.0 * bar_rows as f64;
    for (pos, &(col, rank)) in order.iter().enumerate() {
        let left = pos < label_rows;
        let row = if left { pos } else { m - 1 - pos };
        let ly = stem_top + 12.0 + 18.0 * row as f64;
        let (lx, anchor) = if left {
            (X_LEFT - 10.0, "end")
        } else {
            (X_RIGHT + 10.0, "start")
        };
        let mx = x(rank);
        let _ = writeln!(
            s,
            "  <path d=\"M {mx:.2} {AXIS_Y} L {mx:.2} {ly:.1} L {lx:.1} {ly:.1}\" \
             fill=\"none\" stroke=\"black\"/>"
        );
        let _ = writeln!(
            s,
            "  <text x=\"{lx:.1}\" y=\"{:.1}\" text-anchor=\"{anchor}\">{} ({rank:.4})</text>",
            ly - 3.0,
            xml_escape(names[col])
        );
    }
    s.push_str("</svg>\n");
    s
}

pub fn render_cd_text(names: &[&str], mean_ranks: &[f64], cd: f64) -> String {
    let order = sorted_methods(names, mean_ranks);
    let ranks: Vec<f64> = order.iter().map(|&(_, r)| r).collect();
    let mut s = String::new();
    let _ = writeln!(s, "CD = {cd:.4}");
    for &(col, rank) in &order {
        let _ = writeln!(s, "  {rank:.4}  {}", names[col]);
    }
    let groups = linked_groups(&ranks, cd);
    if groups.is_empty() {
        let _ = writeln!(s, "no groups within one CD");
    } else {
        let _ = writeln!(s, "groups within one CD:");
        for (i, j) in groups {
            let members: Vec<&str> = order[i..=j].iter().map(|&(c, _)| names[c]).collect();
            let _ = writeln!(s, "  {}", members.join(" ~ "));
        }
    }
    s
}

/// Writes the SVG at `path` and a plain-text fallback next to it.
pub fn emit_cd_diagram(
    names: &[&str],
    mean_ranks: &[f64],
    cd: f64,
    path: &Path,
) -> io::Result<()> {
    fs::write(path, render_cd_svg(names, mean_ranks, cd))?;
    fs::write(path.with_extension("txt"), render_cd_text(names, mean_ranks, cd))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bars_link_adjacent_but_not_distant_methods() {
        let groups = linked_groups(&[1.0, 2.0, 3.0], 1.5);
        assert_eq!(groups, vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn nested_groups_are_not_repeated() {
        // the run from index 0 already spans index 1's reach
        let groups = linked_groups(&[1.0, 1.2, 1.4, 3.0], 0.5);
        assert_eq!(groups, vec![(0, 2)]);
    }

    #[test]
    fn single_method_renders_without_bars() {
        let svg = render_cd_svg(&["only"], &[1.0], 1.0);
        assert!(!svg.contains("stroke-width=\"4\""));
        assert!(svg.contains("only"));
    }

    #[test]
    fn output_is_byte_stable() {
        let names = ["alpha", "beta", "gamma"];
        let ranks = [1.2, 2.9, 1.9];
        let a = render_cd_svg(&names, &ranks, 1.5);
        let b = render_cd_svg(&names, &ranks, 1.5);
        assert_eq!(a, b);
        assert_eq!(
            render_cd_text(&names, &ranks, 1.5),
            render_cd_text(&names, &ranks, 1.5)
        );
    }

    #[test]
    fn text_fallback_lists_methods_best_first() {
        let txt = render_cd_text(&["worse", "best"], &[2.0, 1.0], 0.5);
        let best_at = txt.find("best").unwrap();
        let worse_at = txt.find("worse").unwrap();
        assert!(best_at < worse_at);
        assert!(txt.contains("no groups"));
    }

    #[test]
    fn emit_writes_both_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cd.svg");
        emit_cd_diagram(&["a", "b"], &[1.0, 2.0], 1.5, &path).unwrap();
        assert!(path.exists());
        assert!(path.with_extension("txt").exists());
        let svg = std::fs::read_to_string(&path).unwrap();
        assert!(svg.starts_with("<svg"));
    }
}
