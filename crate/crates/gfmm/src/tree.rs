//! Greedy Gini decision tree with native multiway categorical splits.
//!
//! Numeric features split on midpoint thresholds, categorical features
//! split multiway over the values present at the node. An impure node may
//! split on zero gain (parity-style problems need it); it turns into a
//! leaf only on purity, depth, or when no candidate split separates the
//! rows. Unseen or missing categorical values at prediction time route to
//! the child that held the largest training mass.

use crate::data::CatValue;

/// Row-major mixed-feature table: numeric columns first, then categorical.
#[derive(Debug, Clone, Default)]
pub struct TreeTable {
    n_numeric: usize,
    n_categorical: usize,
    numeric: Vec<f64>,
    categorical: Vec<CatValue>,
    rows: usize,
}

impl TreeTable {
    pub fn new(n_numeric: usize, n_categorical: usize) -> TreeTable {
        TreeTable {
            n_numeric,
            n_categorical,
            numeric: Vec::new(),
            categorical: Vec::new(),
            rows: 0,
        }
    }

    pub fn push_row(&mut self, num: &[f64], cat: &[CatValue]) {
        assert_eq!(num.len(), self.n_numeric);
        assert_eq!(cat.len(), self.n_categorical);
        self.numeric.extend_from_slice(num);
        self.categorical.extend_from_slice(cat);
        self.rows += 1;
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    fn num(&self, r: usize, j: usize) -> f64 {
        self.numeric[r * self.n_numeric + j]
    }

    fn cat(&self, r: usize, j: usize) -> CatValue {
        self.categorical[r * self.n_categorical + j]
    }
}

#[derive(Debug, Clone)]
enum Node {
    /// Class distribution of the training rows that reached this leaf.
    Leaf { counts: Vec<usize> },
    NumericSplit {
        feature: usize,
        threshold: f64,
        left: usize,
        right: usize,
    },
    CatSplit {
        feature: usize,
        /// Child per value present at the node during training.
        children: Vec<(u32, usize)>,
        /// Largest-mass child, taken by unseen or missing values.
        fallback: usize,
    },
}

#[derive(Debug, Clone)]
pub struct DecisionTree {
    nodes: Vec<Node>,
    n_classes: usize,
    n_numeric: usize,
    n_categorical: usize,
}

fn class_counts(rows: &[usize], labels: &[u32], n_classes: usize) -> Vec<usize> {
    let mut counts = vec![0usize; n_classes];
    for &r in rows {
        counts[labels[r] as usize] += 1;
    }
    counts
}

fn gini(counts: &[usize]) -> f64 {
    let n: usize = counts.iter().sum();
    if n == 0 {
        return 0.0;
    }
    let n = n as f64;
    1.0 - counts.iter().map(|&c| (c as f64 / n).powi(2)).sum::<f64>()
}

/// Mean child impurity weighted by child size.
fn weighted_gini(parts: &[Vec<usize>], labels: &[u32], n_classes: usize) -> f64 {
    let total: usize = parts.iter().map(|p| p.len()).sum();
    parts
        .iter()
        .map(|p| p.len() as f64 / total as f64 * gini(&class_counts(p, labels, n_classes)))
        .sum()
}

enum SplitPlan {
    Numeric {
        feature: usize,
        threshold: f64,
        left: Vec<usize>,
        right: Vec<usize>,
    },
    Categorical {
        feature: usize,
        groups: Vec<(u32, Vec<usize>)>,
    },
}

/// Best split at this node by Gini gain; features are scanned in order and
/// ties keep the first candidate, so training is deterministic.
fn best_split(
    table: &TreeTable,
    rows: &[usize],
    labels: &[u32],
    n_classes: usize,
) -> Option<SplitPlan> {
    let parent = gini(&class_counts(rows, labels, n_classes));
    let mut best: Option<(f64, SplitPlan)> = None;
    let consider = |gain: f64, plan: SplitPlan, best: &mut Option<(f64, SplitPlan)>| {
        if best.as_ref().is_none_or(|(g, _)| gain > *g) {
            *best = Some((gain, plan));
        }
    };

    for j in 0..table.n_numeric {
        let mut order: Vec<usize> = rows.to_vec();
        order.sort_by(|&a, &b| table.num(a, j).total_cmp(&table.num(b, j)));
        for cut in 1..order.len() {
            let lo = table.num(order[cut - 1], j);
            let hi = table.num(order[cut], j);
            if lo == hi {
                continue;
            }
            let threshold = lo + (hi - lo) / 2.0;
            let left = order[..cut].to_vec();
            let right = order[cut..].to_vec();
            let gain = parent
                - weighted_gini(&[left.clone(), right.clone()], labels, n_classes);
            consider(
                gain,
                SplitPlan::Numeric {
                    feature: j,
                    threshold,
                    left,
                    right,
                },
                &mut best,
            );
        }
    }

    for j in 0..table.n_categorical {
        let mut groups: Vec<(u32, Vec<usize>)> = Vec::new();
        for &r in rows {
            let v = table
                .cat(r, j)
                .expect("training categorical values must be concrete");
            match groups.iter_mut().find(|(g, _)| *g == v) {
                Some((_, members)) => members.push(r),
                None => groups.push((v, vec![r])),
            }
        }
        if groups.len() < 2 {
            continue;
        }
        let parts: Vec<Vec<usize>> = groups.iter().map(|(_, m)| m.clone()).collect();
        let gain = parent - weighted_gini(&parts, labels, n_classes);
        consider(gain, SplitPlan::Categorical { feature: j, groups }, &mut best);
    }

    best.map(|(_, plan)| plan)
}

pub fn train_tree(
    table: &TreeTable,
    labels: &[u32],
    n_classes: usize,
    max_depth: usize,
) -> DecisionTree {
    assert!(table.n_rows() >= 1, "tree training needs at least one row");
    assert_eq!(table.n_rows(), labels.len());
    let mut tree = DecisionTree {
        nodes: Vec::new(),
        n_classes,
        n_numeric: table.n_numeric,
        n_categorical: table.n_categorical,
    };
    let rows: Vec<usize> = (0..table.n_rows()).collect();
    build_node(&mut tree, table, &rows, labels, max_depth);
    tree
}

fn build_node(
    tree: &mut DecisionTree,
    table: &TreeTable,
    rows: &[usize],
    labels: &[u32],
    depth_left: usize,
) -> usize {
    let counts = class_counts(rows, labels, tree.n_classes);
    let pure = counts.iter().filter(|&&c| c > 0).count() <= 1;
    if pure || depth_left == 0 {
        tree.nodes.push(Node::Leaf { counts });
        return tree.nodes.len() - 1;
    }
    let Some(plan) = best_split(table, rows, labels, tree.n_classes) else {
        tree.nodes.push(Node::Leaf { counts });
        return tree.nodes.len() - 1;
    };
    match plan {
        SplitPlan::Numeric {
            feature,
            threshold,
            left,
            right,
        } => {
            let left = build_node(tree, table, &left, labels, depth_left - 1);
            let right = build_node(tree, table, &right, labels, depth_left - 1);
            tree.nodes.push(Node::NumericSplit {
                feature,
                threshold,
                left,
                right,
            });
        }
        SplitPlan::Categorical { feature, groups } => {
            let mut children = Vec::with_capacity(groups.len());
            let mut fallback = 0;
            let mut fallback_mass = 0;
            for (value, members) in groups {
                let child = build_node(tree, table, &members, labels, depth_left - 1);
                if members.len() > fallback_mass {
                    fallback_mass = members.len();
                    fallback = child;
                }
                children.push((value, child));
            }
            tree.nodes.push(Node::CatSplit {
                feature,
                children,
                fallback,
            });
        }
    }
    tree.nodes.len() - 1
}

impl DecisionTree {
    pub fn n_numeric(&self) -> usize {
        self.n_numeric
    }

    pub fn n_categorical(&self) -> usize {
        self.n_categorical
    }

    /// Class distribution of the leaf this sample lands in.
    pub fn leaf_counts(&self, num: &[f64], cat: &[CatValue]) -> &[usize] {
        assert_eq!(num.len(), self.n_numeric);
        assert_eq!(cat.len(), self.n_categorical);
        let mut at = self.nodes.len() - 1;
        loop {
            match &self.nodes[at] {
                Node::Leaf { counts } => return counts,
                Node::NumericSplit {
                    feature,
                    threshold,
                    left,
                    right,
                } => {
                    at = if num[*feature] <= *threshold {
                        *left
                    } else {
                        *right
                    };
                }
                Node::CatSplit {
                    feature,
                    children,
                    fallback,
                } => {
                    at = match cat[*feature] {
                        Some(v) => children
                            .iter()
                            .find(|(g, _)| *g == v)
                            .map(|(_, c)| *c)
                            .unwrap_or(*fallback),
                        None => *fallback,
                    };
                }
            }
        }
    }

    /// Majority class of the reached leaf; count ties keep the smallest
    /// class index.
    pub fn predict(&self, num: &[f64], cat: &[CatValue]) -> u32 {
        let counts = self.leaf_counts(num, cat);
        let mut best = 0;
        for (c, &n) in counts.iter().enumerate() {
            if n > counts[best] {
                best = c;
            }
        }
        best as u32
    }

    /// Longest root-to-leaf path measured in splits.
    pub fn depth(&self) -> usize {
        fn walk(nodes: &[Node], at: usize) -> usize {
            match &nodes[at] {
                Node::Leaf { .. } => 0,
                Node::NumericSplit { left, right, .. } => {
                    1 + walk(nodes, *left).max(walk(nodes, *right))
                }
                Node::CatSplit { children, .. } => {
                    1 + children.iter().map(|(_, c)| walk(nodes, *c)).max().unwrap()
                }
            }
        }
        walk(&self.nodes, self.nodes.len() - 1)
    }

    pub fn n_leaves(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| matches!(n, Node::Leaf { .. }))
            .count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat_table(rows: &[&[u32]]) -> TreeTable {
        let mut t = TreeTable::new(0, rows[0].len());
        for r in rows {
            let cat: Vec<CatValue> = r.iter().map(|&v| Some(v)).collect();
            t.push_row(&[], &cat);
        }
        t
    }

    fn num_table(rows: &[&[f64]]) -> TreeTable {
        let mut t = TreeTable::new(rows[0].len(), 0);
        for r in rows {
            t.push_row(r, &[]);
        }
        t
    }

    #[test]
    fn pure_input_is_a_single_leaf() {
        let t = cat_table(&[&[0], &[1], &[0]]);
        let tree = train_tree(&t, &[2, 2, 2], 3, 10);
        assert_eq!(tree.nodes.len(), 1);
        assert_eq!(tree.predict(&[], &[Some(0)]), 2);
    }

    #[test]
    fn max_depth_zero_is_a_majority_stump() {
        let t = cat_table(&[&[0], &[1], &[0], &[1]]);
        let tree = train_tree(&t, &[1, 0, 1, 1], 2, 0);
        assert_eq!(tree.depth(), 0);
        assert_eq!(tree.predict(&[], &[Some(1)]), 1);
    }

    #[test]
    fn xor_needs_exactly_depth_two_and_fits_perfectly() {
        let t = cat_table(&[&[0, 0], &[0, 1], &[1, 0], &[1, 1]]);
        let labels = [0, 1, 1, 0];
        let tree = train_tree(&t, &labels, 2, 10);
        assert_eq!(tree.depth(), 2);
        for (i, r) in [[0u32, 0], [0, 1], [1, 0], [1, 1]].iter().enumerate() {
            let cat: Vec<CatValue> = r.iter().map(|&v| Some(v)).collect();
            assert_eq!(tree.predict(&[], &cat), labels[i]);
        }
    }

    #[test]
    fn numeric_split_uses_the_midpoint_threshold() {
        let t = num_table(&[&[0.1], &[0.2], &[0.8], &[0.9]]);
        let tree = train_tree(&t, &[0, 0, 1, 1], 2, 10);
        assert_eq!(tree.depth(), 1);
        match &tree.nodes[tree.nodes.len() - 1] {
            Node::NumericSplit { threshold, .. } => assert_eq!(*threshold, 0.5),
            other => panic!("expected numeric split, got {other:?}"),
        }
        assert_eq!(tree.predict(&[0.49], &[]), 0);
        assert_eq!(tree.predict(&[0.51], &[]), 1);
    }

    #[test]
    fn unseen_value_routes_to_the_largest_mass_child() {
        let t = cat_table(&[&[0], &[0], &[0], &[1], &[1]]);
        let tree = train_tree(&t, &[1, 1, 1, 0, 0], 2, 10);
        assert_eq!(tree.predict(&[], &[Some(7)]), 1);
        assert_eq!(tree.predict(&[], &[None]), 1);
    }

    #[test]
    fn majority_tie_keeps_the_smallest_class() {
        let t = cat_table(&[&[0], &[0]]);
        let tree = train_tree(&t, &[1, 2], 3, 0);
        assert_eq!(tree.predict(&[], &[Some(0)]), 1);
    }

    #[test]
    fn leaf_distributions_sum_to_the_node_sample_counts() {
        let t = cat_table(&[&[0, 1], &[1, 0], &[0, 0], &[1, 1], &[0, 1]]);
        let tree = train_tree(&t, &[0, 1, 0, 1, 1], 2, 10);
        let total: usize = tree
            .nodes
            .iter()
            .filter_map(|n| match n {
                Node::Leaf { counts } => Some(counts.iter().sum::<usize>()),
                _ => None,
            })
            .sum();
        assert_eq!(total, 5);
    }

    struct XorShift(u64);

    impl XorShift {
        fn next(&mut self) -> u64 {
            let mut x = self.0;
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            self.0 = x;
            x
        }

        fn below(&mut self, n: usize) -> usize {
            (self.next() % n as u64) as usize
        }
    }

    #[test]
    fn consistent_tables_are_reproduced_exactly_without_a_depth_cap() {
        let mut rng = XorShift(0xabcdef12345);
        for _ in 0..50 {
            let feats = 1 + rng.below(3);
            let n = 2 + rng.below(30);
            let mut t = TreeTable::new(0, feats);
            let mut labels = Vec::new();
            let mut rows = Vec::new();
            for _ in 0..n {
                let row: Vec<u32> = (0..feats).map(|_| rng.below(3) as u32).collect();
                // label derived from the features keeps the table consistent
                let label = (row.iter().sum::<u32>() % 2) as u32;
                let cat: Vec<CatValue> = row.iter().map(|&v| Some(v)).collect();
                t.push_row(&[], &cat);
                labels.push(label);
                rows.push(row);
            }
            let tree = train_tree(&t, &labels, 2, usize::MAX);
            for (row, &label) in rows.iter().zip(&labels) {
                let cat: Vec<CatValue> = row.iter().map(|&v| Some(v)).collect();
                assert_eq!(tree.predict(&[], &cat), label);
            }
        }
    }

    #[test]
    fn chosen_root_split_matches_the_brute_force_best_gain() {
        let mut rng = XorShift(0x5eed);
        for _ in 0..60 {
            let n = 4 + rng.below(60);
            let mut t = TreeTable::new(1, 1);
            let mut labels = Vec::new();
            for _ in 0..n {
                let num = rng.below(10) as f64 / 10.0;
                let cat = rng.below(4) as u32;
                t.push_row(&[num], &[Some(cat)]);
                labels.push(rng.below(3) as u32);
            }
            let rows: Vec<usize> = (0..n).collect();
            let parent = gini(&class_counts(&rows, &labels, 3));

            // brute force over every numeric threshold and the multiway split
            let mut best = f64::NEG_INFINITY;
            let mut vals: Vec<f64> = rows.iter().map(|&r| t.num(r, 0)).collect();
            vals.sort_by(f64::total_cmp);
            vals.dedup();
            for w in vals.windows(2) {
                let thr = (w[0] + w[1]) / 2.0;
                let (l, r): (Vec<usize>, Vec<usize>) =
                    rows.iter().partition(|&&r| t.num(r, 0) <= thr);
                best = best.max(parent - weighted_gini(&[l, r], &labels, 3));
            }
            let mut groups: Vec<Vec<usize>> = Vec::new();
            for v in 0..4u32 {
                let g: Vec<usize> = rows
                    .iter()
                    .copied()
                    .filter(|&r| t.cat(r, 0) == Some(v))
                    .collect();
                if !g.is_empty() {
                    groups.push(g);
                }
            }
            if groups.len() >= 2 {
                best = best.max(parent - weighted_gini(&groups, &labels, 3));
            }

            let chosen = best_split(&t, &rows, &labels, 3);
            match chosen {
                None => assert_eq!(best, f64::NEG_INFINITY),
                Some(plan) => {
                    let parts: Vec<Vec<usize>> = match plan {
                        SplitPlan::Numeric { left, right, .. } => vec![left, right],
                        SplitPlan::Categorical { groups, .. } => {
                            groups.into_iter().map(|(_, m)| m).collect()
                        }
                    };
                    let gain = parent - weighted_gini(&parts, &labels, 3);
                    assert!((gain - best).abs() < 1e-12);
                }
            }
        }
    }
}
