//! Greedy construction of a threshold tree with maximum spacing.
//!
//! Each iteration splits one leaf with one axis-aligned cut, choosing the pair
//! that maximizes the spacing of the resulting partition. Splitting a leaf only
//! separates pairs that previously shared a leaf, so the spacing after a split
//! is `min(current spacing, cross distance of the split)`. The cross distances
//! of a leaf's cuts therefore depend only on the leaf and are computed once,
//! when the leaf is created.
//!
//! Ties are broken by lowest leaf position (left to right), then lowest
//! dimension, then lowest threshold.

use alloc::vec;
use alloc::vec::Vec;

use crate::tree::Node;
use crate::{AxisCut, Dataset, Error, Metric, Result, ThresholdTree};

/// Points reaching a leaf, with one sorted ordering per dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct LeafState {
    points: Vec<usize>,
    sorted: Vec<Vec<usize>>,
}

impl LeafState {
    pub fn new(mut points: Vec<usize>, ds: &Dataset) -> Self {
        points.sort_unstable();
        let sorted = (0..ds.dim())
            .map(|dim| {
                let mut order = points.clone();
                order.sort_by(|&a, &b| ds.point(a)[dim].total_cmp(&ds.point(b)[dim]));
                order
            })
            .collect();
        LeafState { points, sorted }
    }

    /// The root leaf holding every point.
    pub fn root(ds: &Dataset) -> Self {
        Self::new((0..ds.len()).collect(), ds)
    }

    /// Point indices in ascending order.
    pub fn points(&self) -> &[usize] {
        &self.points
    }

    /// Point indices ordered by coordinate `dim`.
    pub fn sorted(&self, dim: usize) -> &[usize] {
        &self.sorted[dim]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The two children produced by cutting `dim` after the first `at`
    /// points of the sorted order.
    fn split_at(&self, dim: usize, at: usize) -> (LeafState, LeafState) {
        let order = &self.sorted[dim];
        let n = order.iter().copied().max().map_or(0, |m| m + 1);
        let mut goes_left = vec![false; n];
        for &i in &order[..at] {
            goes_left[i] = true;
        }
        let part = |side: bool| {
            let points = self.points.iter().copied().filter(|&i| goes_left[i] == side).collect();
            let sorted = self
                .sorted
                .iter()
                .map(|o| o.iter().copied().filter(|&i| goes_left[i] == side).collect())
                .collect();
            LeafState { points, sorted }
        };
        (part(true), part(false))
    }
}

/// A cut that separates a leaf into two non-empty sides.
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub cut: AxisCut,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// Threshold strictly between `lo < hi` such that `lo <= t < hi`.
fn midpoint(lo: f64, hi: f64) -> f64 {
    let t = lo / 2.0 + hi / 2.0;
    if lo <= t && t < hi {
        t
    } else {
        lo
    }
}

/// Midpoint cuts between adjacent distinct values of every dimension, in
/// order of dimension then threshold. At most `(len - 1) * d` cuts.
pub fn candidate_cuts(leaf: &LeafState, ds: &Dataset) -> Vec<Candidate> {
    let mut out = Vec::new();
    for (dim, order) in leaf.sorted.iter().enumerate() {
        for at in 1..order.len() {
            let lo = ds.point(order[at - 1])[dim];
            let hi = ds.point(order[at])[dim];
            if lo < hi {
                out.push(Candidate {
                    cut: AxisCut::new(dim, midpoint(lo, hi)),
                    left: order[..at].to_vec(),
                    right: order[at..].to_vec(),
                });
            }
        }
    }
    out
}

/// Spacing of the frontier after separating `left` from `right`, given the
/// spacing `current` before the split (`+inf` for a single leaf).
pub fn split_spacing(
    current: f64,
    left: &[usize],
    right: &[usize],
    ds: &Dataset,
    metric: Metric,
) -> Result<f64> {
    if left.is_empty() || right.is_empty() {
        return Err(Error::EmptyCluster(if left.is_empty() { 0 } else { 1 }));
    }
    let mut best = current;
    for &a in left {
        for &b in right {
            if a == b {
                return Err(Error::InvalidPartition(alloc::format!(
                    "point {a} is on both sides of the split"
                )));
            }
            best = best.min(ds.distance(a, b, metric));
        }
    }
    Ok(best)
}

/// One cut of a leaf with its cross distance.
#[derive(Debug, Clone, Copy)]
struct ScoredCut {
    cut: AxisCut,
    at: usize,
    cross: f64,
}

/// Cross distances of every candidate cut of `leaf`, `O(len^2)` distance
/// evaluations per dimension.
fn score_cuts(leaf: &LeafState, ds: &Dataset, metric: Metric) -> Vec<ScoredCut> {
    let mut out = Vec::new();
    let mut col_min = Vec::new();
    for (dim, order) in leaf.sorted.iter().enumerate() {
        let m = order.len();
        // col_min[b] = min over a < at of dist(order[a], order[b])
        col_min.clear();
        col_min.resize(m, f64::INFINITY);
        for at in 1..m {
            let a = order[at - 1];
            let mut cross = f64::INFINITY;
            for b in at..m {
                let v = col_min[b].min(ds.distance(a, order[b], metric));
                col_min[b] = v;
                cross = cross.min(v);
            }
            let lo = ds.point(a)[dim];
            let hi = ds.point(order[at])[dim];
            if lo < hi {
                out.push(ScoredCut {
                    cut: AxisCut::new(dim, midpoint(lo, hi)),
                    at,
                    cross,
                });
            }
        }
    }
    out
}

/// Record of one greedy iteration.
#[derive(Debug, Clone, PartialEq)]
pub struct GreedyStep {
    /// Left-to-right position of the split leaf in the frontier.
    pub leaf: usize,
    pub cut: AxisCut,
    /// Spacing of the partition after this split.
    pub spacing: f64,
    /// Number of (leaf, cut) candidates compared in this iteration.
    pub candidates: usize,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct GreedyTrace {
    pub steps: Vec<GreedyStep>,
}

impl GreedyTrace {
    /// Spacing after each iteration; entry `i` belongs to `i + 2` groups.
    pub fn spacings(&self) -> Vec<f64> {
        self.steps.iter().map(|s| s.spacing).collect()
    }

    /// Spacing of the final partition.
    pub fn final_spacing(&self) -> Option<f64> {
        self.steps.last().map(|s| s.spacing)
    }
}

enum ArenaNode {
    Leaf,
    Split(AxisCut, usize, usize),
}

struct FrontierLeaf {
    state: LeafState,
    cuts: Vec<ScoredCut>,
    node: usize,
}

/// Runs `k - 1` greedy iterations and returns the tree with `k` non-empty
/// leaves (ids in left-to-right order) and the per-iteration trace.
pub fn fit(ds: &Dataset, k: usize, metric: Metric) -> Result<(ThresholdTree, GreedyTrace)> {
    if k < 2 {
        return Err(Error::InvalidK {
            k,
            reason: "at least two groups are required".into(),
        });
    }
    let distinct = ds.distinct_count();
    if k > distinct {
        return Err(Error::InvalidK {
            k,
            reason: alloc::format!("only {distinct} distinct points"),
        });
    }

    let root = LeafState::root(ds);
    let mut arena = vec![ArenaNode::Leaf];
    let mut frontier = vec![FrontierLeaf {
        cuts: score_cuts(&root, ds, metric),
        state: root,
        node: 0,
    }];
    let mut current = f64::INFINITY;
    let mut trace = GreedyTrace::default();

    for _ in 1..k {
        let mut best: Option<(usize, ScoredCut, f64)> = None;
        let mut candidates = 0;
        for (pos, leaf) in frontier.iter().enumerate() {
            for sc in &leaf.cuts {
                candidates += 1;
                let value = current.min(sc.cross);
                if best.as_ref().is_none_or(|&(_, _, v)| value > v) {
                    best = Some((pos, *sc, value));
                }
            }
        }
        let (pos, sc, value) =
            best.ok_or_else(|| Error::Infeasible("no leaf can be split further".into()))?;

        let parent = frontier.remove(pos);
        let (left, right) = parent.state.split_at(sc.cut.dim, sc.at);
        let (li, ri) = (arena.len(), arena.len() + 1);
        arena.push(ArenaNode::Leaf);
        arena.push(ArenaNode::Leaf);
        arena[parent.node] = ArenaNode::Split(sc.cut, li, ri);
        for (offset, (state, node)) in [(left, li), (right, ri)].into_iter().enumerate() {
            frontier.insert(
                pos + offset,
                FrontierLeaf {
                    cuts: score_cuts(&state, ds, metric),
                    state,
                    node,
                },
            );
        }
        current = value;
        trace.steps.push(GreedyStep {
            leaf: pos,
            cut: sc.cut,
            spacing: value,
            candidates,
        });
    }

    fn build(arena: &[ArenaNode], i: usize) -> Node {
        match arena[i] {
            ArenaNode::Leaf => Node::Leaf(0),
            ArenaNode::Split(cut, l, r) => Node::split(cut, build(arena, l), build(arena, r)),
        }
    }
    Ok((ThresholdTree::with_dfs_ids(build(&arena, 0)), trace))
}
