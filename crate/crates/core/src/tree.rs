//! Axis-aligned threshold trees and the partitions they induce.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Dataset, Error, Result};

/// A test `x[dim] <= theta` attached to an internal node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisCut {
    pub dim: usize,
    pub theta: f64,
}

impl AxisCut {
    pub fn new(dim: usize, theta: f64) -> Self {
        AxisCut { dim, theta }
    }

    /// True when `x` is sent to the left child. Ties go left.
    #[inline]
    pub fn goes_left(&self, x: &[f64]) -> bool {
        x[self.dim] <= self.theta
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Node {
    Leaf(usize),
    Split {
        cut: AxisCut,
        left: Box<Node>,
        right: Box<Node>,
    },
}

impl Node {
    pub fn split(cut: AxisCut, left: Node, right: Node) -> Node {
        Node::Split {
            cut,
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    fn visit_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Node::Leaf(id) => out.push(*id),
            Node::Split { left, right, .. } => {
                left.visit_leaves(out);
                right.visit_leaves(out);
            }
        }
    }

    fn internal_count(&self) -> usize {
        match self {
            Node::Leaf(_) => 0,
            Node::Split { left, right, .. } => 1 + left.internal_count() + right.internal_count(),
        }
    }

    fn relabel(&mut self, next: &mut usize) {
        match self {
            Node::Leaf(id) => {
                *id = *next;
                *next += 1;
            }
            Node::Split { left, right, .. } => {
                left.relabel(next);
                right.relabel(next);
            }
        }
    }
}

/// A binary tree of [`AxisCut`]s whose `k` leaves carry the cluster ids `0..k`.
#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdTree {
    root: Node,
    leaves: usize,
}

impl ThresholdTree {
    /// Wraps a node, checking that leaf ids form a permutation of `0..k` and
    /// that all thresholds are finite.
    pub fn new(root: Node) -> Result<Self> {
        let mut ids = Vec::new();
        root.visit_leaves(&mut ids);
        let k = ids.len();
        let mut seen = vec![false; k];
        for &id in &ids {
            if id >= k || core::mem::replace(&mut seen[id], true) {
                return Err(Error::InvalidTree(format!(
                    "leaf ids must be a permutation of 0..{k}, got {ids:?}"
                )));
            }
        }
        let mut stack = vec![&root];
        while let Some(node) = stack.pop() {
            if let Node::Split { cut, left, right } = node {
                if !cut.theta.is_finite() {
                    return Err(Error::InvalidTree(format!(
                        "non-finite threshold on dimension {}",
                        cut.dim
                    )));
                }
                stack.push(left);
                stack.push(right);
            }
        }
        Ok(ThresholdTree { root, leaves: k })
    }

    /// Builds a tree from any node, renumbering the leaves left to right.
    pub fn with_dfs_ids(mut root: Node) -> Self {
        let mut next = 0;
        root.relabel(&mut next);
        ThresholdTree { root, leaves: next }
    }

    pub fn single_leaf() -> Self {
        ThresholdTree {
            root: Node::Leaf(0),
            leaves: 1,
        }
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    pub fn into_root(self) -> Node {
        self.root
    }

    pub fn num_leaves(&self) -> usize {
        self.leaves
    }

    pub fn num_internal(&self) -> usize {
        self.root.internal_count()
    }

    /// Leaf ids in left-to-right order.
    pub fn leaf_ids(&self) -> Vec<usize> {
        let mut ids = Vec::with_capacity(self.leaves);
        self.root.visit_leaves(&mut ids);
        ids
    }

    /// Internal-node cuts in preorder.
    pub fn cuts(&self) -> Vec<AxisCut> {
        let mut out = Vec::new();
        let mut stack = vec![&self.root];
        while let Some(node) = stack.pop() {
            if let Node::Split { cut, left, right } = node {
                out.push(*cut);
                stack.push(right);
                stack.push(left);
            }
        }
        out
    }

    /// Smallest point dimension this tree can route, i.e. max cut dimension + 1.
    pub fn required_dim(&self) -> usize {
        self.cuts().iter().map(|c| c.dim + 1).max().unwrap_or(0)
    }

    /// Checks the tree against a dataset dimension.
    pub fn check_dim(&self, d: usize) -> Result<()> {
        let need = self.required_dim();
        if need > d {
            return Err(Error::CutOutOfRange {
                dim: need - 1,
                len: d,
            });
        }
        Ok(())
    }

    /// Cluster id of the leaf that `x` reaches.
    pub fn route(&self, x: &[f64]) -> Result<usize> {
        let mut node = &self.root;
        loop {
            match node {
                Node::Leaf(id) => return Ok(*id),
                Node::Split { cut, left, right } => {
                    if cut.dim >= x.len() {
                        return Err(Error::CutOutOfRange {
                            dim: cut.dim,
                            len: x.len(),
                        });
                    }
                    node = if cut.goes_left(x) { left } else { right };
                }
            }
        }
    }

    /// Partition of the dataset by leaf. Clusters of leaves that no point
    /// reaches are kept (empty) and reported by [`Partition::empty_clusters`].
    pub fn induced_partition(&self, ds: &Dataset) -> Result<Partition> {
        self.check_dim(ds.dim())?;
        let mut clusters = vec![Vec::new(); self.leaves];
        for (i, x) in ds.points().enumerate() {
            clusters[self.route(x)?].push(i);
        }
        Ok(Partition {
            clusters,
            representatives: None,
        })
    }

    /// Fails unless every leaf receives at least one point of `ds`.
    pub fn validate_nonempty(&self, ds: &Dataset) -> Result<()> {
        let p = self.induced_partition(ds)?;
        match p.empty_clusters().first() {
            Some(&id) => Err(Error::EmptyCluster(id)),
            None => Ok(()),
        }
    }

    /// The axis-aligned box of every leaf, indexed by cluster id.
    pub fn leaf_boxes(&self, d: usize) -> Result<Vec<LeafBox>> {
        self.check_dim(d)?;
        let mut out = vec![LeafBox::unbounded(d); self.leaves];
        fn walk(node: &Node, b: LeafBox, out: &mut [LeafBox]) {
            match node {
                Node::Leaf(id) => out[*id] = b,
                Node::Split { cut, left, right } => {
                    let mut lb = b.clone();
                    lb.upper[cut.dim] = lb.upper[cut.dim].min(cut.theta);
                    let mut rb = b;
                    rb.lower[cut.dim] = rb.lower[cut.dim].max(cut.theta);
                    walk(left, lb, out);
                    walk(right, rb, out);
                }
            }
        }
        walk(&self.root, LeafBox::unbounded(d), &mut out);
        Ok(out)
    }
}

/// The region `lower[i] < x[i] <= upper[i]` for every dimension `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct LeafBox {
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
}

impl LeafBox {
    fn unbounded(d: usize) -> Self {
        LeafBox {
            lower: vec![f64::NEG_INFINITY; d],
            upper: vec![f64::INFINITY; d],
        }
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.iter()
            .zip(self.lower.iter().zip(&self.upper))
            .all(|(&v, (&lo, &hi))| lo < v && v <= hi)
    }
}

/// Disjoint index sets covering `0..n`, with optional representatives.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    clusters: Vec<Vec<usize>>,
    representatives: Option<Vec<Vec<f64>>>,
}

impl Partition {
    /// Validates disjointness and coverage of `0..n`. Empty clusters are allowed.
    pub fn new(clusters: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n];
        for c in &clusters {
            for &i in c {
                if i >= n {
                    return Err(Error::InvalidPartition(format!(
                        "index {i} out of range for {n} points"
                    )));
                }
                if core::mem::replace(&mut seen[i], true) {
                    return Err(Error::InvalidPartition(format!(
                        "index {i} appears in more than one cluster"
                    )));
                }
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("index {i} is not covered")));
        }
        Ok(Partition {
            clusters,
            representatives: None,
        })
    }

    /// Builds a partition from per-point cluster labels in `0..k`.
    pub fn from_labels(labels: &[usize], k: usize) -> Result<Self> {
        let mut clusters = vec![Vec::new(); k];
        for (i, &l) in labels.iter().enumerate() {
            if l >= k {
                return Err(Error::InvalidPartition(format!("label {l} >= k = {k}")));
            }
            clusters[l].push(i);
        }
        Ok(Partition {
            clusters,
            representatives: None,
        })
    }

    /// Attaches one representative per cluster, each of dimension `d`.
    pub fn with_representatives(mut self, reps: Vec<Vec<f64>>, d: usize) -> Result<Self> {
        if reps.len() != self.clusters.len() {
            return Err(Error::InvalidPartition(format!(
                "{} representatives for {} clusters",
                reps.len(),
                self.clusters.len()
            )));
        }
        if let Some(r) = reps.iter().find(|r| r.len() != d) {
            return Err(Error::DimensionMismatch {
                left: r.len(),
                right: d,
            });
        }
        self.representatives = Some(reps);
        Ok(self)
    }

    pub fn clusters(&self) -> &[Vec<usize>] {
        &self.clusters
    }

    pub fn representatives(&self) -> Option<&[Vec<f64>]> {
        self.representatives.as_deref()
    }

    pub fn len(&self) -> usize {
        self.clusters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }

    pub fn num_nonempty(&self) -> usize {
        self.clusters.iter().filter(|c| !c.is_empty()).count()
    }

    /// Ids of clusters with no points.
    pub fn empty_clusters(&self) -> Vec<usize> {
        self.clusters
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_empty())
            .map(|(i, _)| i)
            .collect()
    }

    /// Cluster label of every point.
    pub fn labels(&self) -> Vec<usize> {
        let n = self.clusters.iter().map(Vec::len).sum();
        let mut labels = vec![0; n];
        for (l, c) in self.clusters.iter().enumerate() {
            for &i in c {
                labels[i] = l;
            }
        }
        labels
    }

    /// The grouping with cluster order and empty clusters erased: each
    /// cluster sorted, clusters ordered by their smallest index.
    pub fn canonical(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self
            .clusters
            .iter()
            .filter(|c| !c.is_empty())
            .map(|c| {
                let mut c = c.clone();
                c.sort_unstable();
                c
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// True when both partitions group the points identically.
    pub fn same_grouping(&self, other: &Partition) -> bool {
        self.canonical() == other.canonical()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stump(theta: f64) -> ThresholdTree {
        ThresholdTree::new(Node::split(
            AxisCut::new(0, theta),
            Node::Leaf(0),
            Node::Leaf(1),
        ))
        .unwrap()
    }

    #[test]
    fn routing_examples() {
        assert_eq!(ThresholdTree::single_leaf().route(&[7.0]), Ok(0));
        let t = stump(2.0);
        assert_eq!(t.route(&[2.0]), Ok(0));
        assert_eq!(t.route(&[3.0]), Ok(1));
    }

    #[test]
    fn route_dimension_out_of_range() {
        let t = ThresholdTree::new(Node::split(AxisCut::new(2, 0.0), Node::Leaf(0), Node::Leaf(1)))
            .unwrap();
        assert_eq!(t.route(&[1.0, 1.0]), Err(Error::CutOutOfRange { dim: 2, len: 2 }));
        let ds = Dataset::new(vec![vec![0.0, 0.0]]).unwrap();
        assert!(t.induced_partition(&ds).is_err());
    }

    #[test]
    fn partition_examples() {
        let ds = Dataset::from_values(&[0.0, 1.0, 3.0]).unwrap();
        let p = ThresholdTree::single_leaf().induced_partition(&ds).unwrap();
        assert_eq!(p.clusters(), &[vec![0, 1, 2]]);
        let p = stump(2.0).induced_partition(&ds).unwrap();
        assert_eq!(p.clusters(), &[vec![0, 1], vec![2]]);
    }

    #[test]
    fn empty_leaves_are_flagged() {
        let ds = Dataset::from_values(&[0.0, 1.0]).unwrap();
        let t = stump(5.0);
        let p = t.induced_partition(&ds).unwrap();
        assert_eq!(p.empty_clusters(), vec![1]);
        assert_eq!(t.validate_nonempty(&ds), Err(Error::EmptyCluster(1)));
        assert!(stump(0.5).validate_nonempty(&ds).is_ok());
    }

    #[test]
    fn rejects_bad_leaf_ids() {
        let dup = Node::split(AxisCut::new(0, 0.0), Node::Leaf(0), Node::Leaf(0));
        assert!(matches!(ThresholdTree::new(dup), Err(Error::InvalidTree(_))));
        let gap = Node::split(AxisCut::new(0, 0.0), Node::Leaf(0), Node::Leaf(2));
        assert!(ThresholdTree::new(gap).is_err());
        let nan = Node::split(AxisCut::new(0, f64::NAN), Node::Leaf(0), Node::Leaf(1));
        assert!(ThresholdTree::new(nan).is_err());
    }

    #[test]
    fn dfs_relabel_and_counts() {
        let root = Node::split(
            AxisCut::new(0, 1.0),
            Node::split(AxisCut::new(1, 0.0), Node::Leaf(9), Node::Leaf(9)),
            Node::Leaf(9),
        );
        let t = ThresholdTree::with_dfs_ids(root);
        assert_eq!(t.leaf_ids(), vec![0, 1, 2]);
        assert_eq!(t.num_leaves(), 3);
        assert_eq!(t.num_internal(), 2);
        assert_eq!(t.required_dim(), 2);
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![vec![0, 1], vec![2]], 3).is_ok());
        assert!(Partition::new(vec![vec![0, 1], vec![1, 2]], 3).is_err());
        assert!(Partition::new(vec![vec![0], vec![2]], 3).is_err());
        assert!(Partition::new(vec![vec![0, 3]], 3).is_err());
        let p = Partition::from_labels(&[1, 0, 1], 2).unwrap();
        assert_eq!(p.clusters(), &[vec![1], vec![0, 2]]);
        assert_eq!(p.labels(), vec![1, 0, 1]);
        assert!(p.clone().with_representatives(vec![vec![0.0]], 1).is_err());
        assert!(p.with_representatives(vec![vec![0.0], vec![1.0, 2.0]], 1).is_err());
    }

    #[test]
    fn grouping_ignores_order() {
        let a = Partition::new(vec![vec![2], vec![1, 0]], 3).unwrap();
        let b = Partition::new(vec![vec![0, 1], vec![], vec![2]], 3).unwrap();
        assert!(a.same_grouping(&b));
    }
}
