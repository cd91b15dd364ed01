//! CART decision tree on Gini impurity, grown until leaves are pure.

use super::{Classifier, LabeledDataset};
use crate::error::Result;

pub const MIN_SAMPLES_SPLIT: usize = 2;

#[derive(Debug, Clone)]
enum Node {
    Leaf {
        positive_fraction: f64,
    },
    Split {
        feature: usize,
        threshold: f64,
        left: usize,
        right: usize,
    },
}

#[derive(Debug, Clone)]
pub struct DecisionTree {
    nodes: Vec<Node>,
}

fn gini(pos: usize, n: usize) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let p = pos as f64 / n as f64;
    2.0 * p * (1.0 - p)
}

struct Builder<'a> {
    xs: Vec<&'a [f64]>,
    ys: Vec<u8>,
    nodes: Vec<Node>,
}

impl Builder<'_> {
    /// Best `(feature, threshold)` by weighted child impurity; ties keep the
    /// first candidate in (feature, threshold) order.
    fn best_split(&self, idx: &[usize]) -> Option<(usize, f64)> {
        let n_features = self.xs[idx[0]].len();
        let mut best: Option<(f64, usize, f64)> = None;
        for f in 0..n_features {
            let mut order: Vec<usize> = idx.to_vec();
            order.sort_by(|&a, &b| self.xs[a][f].total_cmp(&self.xs[b][f]));
            let total_pos = order.iter().filter(|&&i| self.ys[i] == 1).count();
            let mut left_pos = 0;
            for cut in 1..order.len() {
                left_pos += usize::from(self.ys[order[cut - 1]] == 1);
                let (lo, hi) = (self.xs[order[cut - 1]][f], self.xs[order[cut]][f]);
                if lo == hi {
                    continue;
                }
                let mut threshold = lo + (hi - lo) / 2.0;
                if threshold >= hi {
                    threshold = lo;
                }
                let n_right = order.len() - cut;
                let cost = cut as f64 * gini(left_pos, cut)
                    + n_right as f64 * gini(total_pos - left_pos, n_right);
                if best.is_none_or(|(c, _, _)| cost < c) {
                    best = Some((cost, f, threshold));
                }
            }
        }
        best.map(|(_, f, t)| (f, t))
    }

    fn grow(&mut self, idx: Vec<usize>) -> usize {
        let pos = idx.iter().filter(|&&i| self.ys[i] == 1).count();
        let id = self.nodes.len();
        self.nodes.push(Node::Leaf {
            positive_fraction: pos as f64 / idx.len() as f64,
        });
        if pos == 0 || pos == idx.len() || idx.len() < MIN_SAMPLES_SPLIT {
            return id;
        }
        let Some((feature, threshold)) = self.best_split(&idx) else {
            return id;
        };
        let (l, r): (Vec<usize>, Vec<usize>) = idx
            .into_iter()
            .partition(|&i| self.xs[i][feature] <= threshold);
        let left = self.grow(l);
        let right = self.grow(r);
        self.nodes[id] = Node::Split {
            feature,
            threshold,
            left,
            right,
        };
        id
    }
}

impl DecisionTree {
    pub fn depth(&self) -> usize {
        fn walk(nodes: &[Node], id: usize) -> usize {
            match nodes[id] {
                Node::Leaf { .. } => 0,
                Node::Split { left, right, .. } => 1 + walk(nodes, left).max(walk(nodes, right)),
            }
        }
        walk(&self.nodes, 0)
    }
}

impl Classifier for DecisionTree {
    fn fit(train: &LabeledDataset) -> Result<Self> {
        let (xs, ys): (Vec<&[f64]>, Vec<u8>) = train
            .rows()
            .iter()
            .map(|(f, l)| (f.values.as_slice(), *l))
            .unzip();
        let mut b = Builder {
            xs,
            ys,
            nodes: Vec::new(),
        };
        b.grow((0..train.len()).collect());
        Ok(Self { nodes: b.nodes })
    }

    /// Class-1 fraction of the training rows in the reached leaf.
    fn score(&self, x: &[f64]) -> f64 {
        let mut id = 0;
        loop {
            match self.nodes[id] {
                Node::Leaf { positive_fraction } => return positive_fraction,
                Node::Split {
                    feature,
                    threshold,
                    left,
                    right,
                } => id = if x[feature] <= threshold { left } else { right },
            }
        }
    }
}
