//! Ground-truth solvers for small instances.
//!
//! - [`optimal_explainable`]: exhaustive search over threshold trees with `k`
//!   non-empty leaves, memoized on point subsets.
//! - [`unrestricted_max_spacing`]: single-link spacing from a minimum spanning
//!   tree, the best spacing of any partition.
//! - [`optimal_unrestricted`]: best center-based cost over all partitions,
//!   by dynamic programming over subsets.
//! - [`min_vertex_cover`]: exact branch and bound.
//!
//! Every search cut is a midpoint between adjacent distinct values of the
//! current point subset; any axis-aligned tree induces a partition that such
//! cuts reproduce, so nothing is lost by the restriction.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::objectives::{self, optimal_cluster_cost};
use crate::reductions::Graph;
use crate::tree::Node;
use crate::{AxisCut, Dataset, Error, Metric, Objective, Result, ThresholdTree};

/// Guard rails for the exponential solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_points: usize,
    pub max_k: usize,
    pub max_dim: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_points: 12,
            max_k: 4,
            max_dim: 3,
        }
    }
}

impl Limits {
    /// Effectively no guard beyond the 63-point bitmask capacity.
    pub fn unbounded() -> Self {
        Limits {
            max_points: MAX_MASK_POINTS,
            max_k: usize::MAX,
            max_dim: usize::MAX,
        }
    }

    fn check(&self, ds: &Dataset, k: usize) -> Result<()> {
        let n = ds.len();
        if n > self.max_points.min(MAX_MASK_POINTS) {
            return Err(Error::LimitExceeded(format!(
                "{n} points > {}",
                self.max_points.min(MAX_MASK_POINTS)
            )));
        }
        if k > self.max_k {
            return Err(Error::LimitExceeded(format!("k = {k} > {}", self.max_k)));
        }
        if ds.dim() > self.max_dim {
            return Err(Error::LimitExceeded(format!("d = {} > {}", ds.dim(), self.max_dim)));
        }
        Ok(())
    }
}

const MAX_MASK_POINTS: usize = 63;

/// Best explainable clustering found by exhaustive search.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    pub tree: ThresholdTree,
    /// Objective value of the tree's induced partition.
    pub cost: f64,
    /// Number of (cut, leaf-budget split) combinations evaluated.
    pub examined: u64,
}

type Mask = u64;

fn indices(mask: Mask) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

#[derive(Debug, Clone, Copy)]
struct Split {
    cut: AxisCut,
    left: Mask,
    right: Mask,
    cross: f64,
}

#[derive(Debug, Clone, Copy)]
struct Choice {
    value: f64,
    split: Option<(Split, usize)>,
}

struct TreeSearch<'a> {
    ds: &'a Dataset,
    obj: Objective,
    splits: BTreeMap<Mask, Vec<Split>>,
    leaf: BTreeMap<Mask, f64>,
    distinct: BTreeMap<Mask, usize>,
    memo: BTreeMap<(Mask, usize), Option<Choice>>,
    examined: u64,
}

impl<'a> TreeSearch<'a> {
    fn new(ds: &'a Dataset, obj: Objective) -> Self {
        TreeSearch {
            ds,
            obj,
            splits: BTreeMap::new(),
            leaf: BTreeMap::new(),
            distinct: BTreeMap::new(),
            memo: BTreeMap::new(),
            examined: 0,
        }
    }

    fn distinct(&mut self, mask: Mask) -> usize {
        let ds = self.ds;
        *self.distinct.entry(mask).or_insert_with(|| {
            let idx = indices(mask);
            idx.iter()
                .enumerate()
                .filter(|&(pos, &i)| idx[..pos].iter().all(|&j| ds.point(j) != ds.point(i)))
                .count()
        })
    }

    fn splits(&mut self, mask: Mask) -> Vec<Split> {
        if let Some(s) = self.splits.get(&mask) {
            return s.clone();
        }
        let ds = self.ds;
        let pts = indices(mask);
        let mut out = Vec::new();
        for dim in 0..ds.dim() {
            let mut order = pts.clone();
            order.sort_by(|&a, &b| ds.point(a)[dim].total_cmp(&ds.point(b)[dim]));
            for at in 1..order.len() {
                let lo = ds.point(order[at - 1])[dim];
                let hi = ds.point(order[at])[dim];
                if lo == hi {
                    continue;
                }
                let mut theta = lo / 2.0 + hi / 2.0;
                if !(lo <= theta && theta < hi) {
                    theta = lo;
                }
                let left: Mask = order[..at].iter().fold(0, |m, &i| m | 1 << i);
                let right = mask & !left;
                let cross = match self.obj {
                    Objective::Spacing(metric) => {
                        let mut best = f64::INFINITY;
                        for &a in &order[..at] {
                            for &b in &order[at..] {
                                best = best.min(ds.distance(a, b, metric));
                            }
                        }
                        best
                    }
                    _ => 0.0,
                };
                out.push(Split {
                    cut: AxisCut::new(dim, theta),
                    left,
                    right,
                    cross,
                });
            }
        }
        self.splits.insert(mask, out.clone());
        out
    }

    fn leaf_value(&mut self, mask: Mask) -> Result<f64> {
        if let Objective::Spacing(_) = self.obj {
            return Ok(f64::INFINITY);
        }
        if let Some(&v) = self.leaf.get(&mask) {
            return Ok(v);
        }
        let v = optimal_cluster_cost(&indices(mask), self.ds, self.obj)?;
        self.leaf.insert(mask, v);
        Ok(v)
    }

    fn combine(&self, cross: f64, left: f64, right: f64) -> f64 {
        match self.obj {
            Objective::Spacing(_) => cross.min(left).min(right),
            Objective::KCenters => left.max(right),
            Objective::KMeans | Objective::KMedians => left + right,
        }
    }

    /// Best tree over the points of `mask` with exactly `leaves` non-empty leaves.
    fn solve(&mut self, mask: Mask, leaves: usize) -> Result<Option<Choice>> {
        if let Some(&c) = self.memo.get(&(mask, leaves)) {
            return Ok(c);
        }
        let result = if leaves > self.distinct(mask) {
            None
        } else if leaves == 1 {
            Some(Choice {
                value: self.leaf_value(mask)?,
                split: None,
            })
        } else {
            let mut best: Option<Choice> = None;
            for split in self.splits(mask) {
                for left_leaves in 1..leaves {
                    self.examined += 1;
                    let Some(l) = self.solve(split.left, left_leaves)? else {
                        continue;
                    };
                    let Some(r) = self.solve(split.right, leaves - left_leaves)? else {
                        continue;
                    };
                    let value = self.combine(split.cross, l.value, r.value);
                    if best.is_none_or(|b| self.obj.better(value, b.value)) {
                        best = Some(Choice {
                            value,
                            split: Some((split, left_leaves)),
                        });
                    }
                }
            }
            best
        };
        self.memo.insert((mask, leaves), result);
        Ok(result)
    }

    fn build(&self, mask: Mask, leaves: usize) -> Node {
        match self.memo[&(mask, leaves)].and_then(|c| c.split) {
            None => Node::Leaf(0),
            Some((s, l)) => Node::split(s.cut, self.build(s.left, l), self.build(s.right, leaves - l)),
        }
    }
}

fn full_mask(n: usize) -> Mask {
    if n == 64 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

/// Optimal explainable clustering with `k` non-empty leaves under the default [`Limits`].
pub fn optimal_explainable(ds: &Dataset, k: usize, obj: Objective) -> Result<OracleResult> {
    optimal_explainable_with(ds, k, obj, Limits::default())
}

/// Optimal explainable clustering with `k` non-empty leaves: minimal cost for
/// the center-based objectives, maximal spacing for spacing.
pub fn optimal_explainable_with(
    ds: &Dataset,
    k: usize,
    obj: Objective,
    limits: Limits,
) -> Result<OracleResult> {
    if k == 0 {
        return Err(Error::InvalidK {
            k,
            reason: "at least one group is required".into(),
        });
    }
    if obj.is_maximized() && k < 2 {
        return Err(Error::TooFewGroups(k));
    }
    limits.check(ds, k)?;
    let mut search = TreeSearch::new(ds, obj);
    let all = full_mask(ds.len());
    if search.solve(all, k)?.is_none() {
        return Err(Error::InvalidK {
            k,
            reason: format!("only {} distinct points", ds.distinct_count()),
        });
    }
    let tree = ThresholdTree::with_dfs_ids(search.build(all, k));
    let cost = objectives::cost(&tree.induced_partition(ds)?, ds, obj)?;
    Ok(OracleResult {
        tree,
        cost,
        examined: search.examined,
    })
}

/// Optimal explainable spacings for `2..=k` groups; entry `i` holds the
/// value for `i + 2` groups. One memo table serves all group counts.
pub fn optimal_spacing_profile(
    ds: &Dataset,
    k: usize,
    metric: Metric,
    limits: Limits,
) -> Result<Vec<f64>> {
    if k < 2 {
        return Err(Error::TooFewGroups(k));
    }
    limits.check(ds, k)?;
    let mut search = TreeSearch::new(ds, Objective::Spacing(metric));
    let all = full_mask(ds.len());
    (2..=k)
        .map(|g| {
            search.solve(all, g)?.map(|c| c.value).ok_or(Error::InvalidK {
                k: g,
                reason: "not enough distinct points".into(),
            })
        })
        .collect()
}

/// Weights of a minimum spanning tree of the complete graph (dense Prim).
fn mst_weights(ds: &Dataset, metric: Metric) -> Vec<f64> {
    let n = ds.len();
    let mut in_tree = vec![false; n];
    let mut best = vec![f64::INFINITY; n];
    let mut weights = Vec::with_capacity(n.saturating_sub(1));
    let mut current = 0;
    in_tree[0] = true;
    for _ in 1..n {
        let mut next = usize::MAX;
        for j in 0..n {
            if in_tree[j] {
                continue;
            }
            best[j] = best[j].min(ds.distance(current, j, metric));
            if next == usize::MAX || best[j] < best[next] {
                next = j;
            }
        }
        in_tree[next] = true;
        weights.push(best[next]);
        current = next;
    }
    weights
}

/// Largest spacing of any partition into `k` groups: the `(k-1)`-th largest
/// minimum spanning tree edge.
pub fn unrestricted_max_spacing(ds: &Dataset, k: usize, metric: Metric) -> Result<f64> {
    if k < 2 || k > ds.len() {
        return Err(Error::InvalidK {
            k,
            reason: format!("need 2 <= k <= {}", ds.len()),
        });
    }
    let mut w = mst_weights(ds, metric);
    w.sort_by(|a, b| b.total_cmp(a));
    Ok(w[k - 2])
}

/// Optimal center-based cost over all partitions into `k` non-empty groups.
/// Spacing is delegated to [`unrestricted_max_spacing`].
pub fn optimal_unrestricted(ds: &Dataset, k: usize, obj: Objective, limits: Limits) -> Result<f64> {
    if let Objective::Spacing(metric) = obj {
        return unrestricted_max_spacing(ds, k, metric);
    }
    let n = ds.len();
    if k == 0 || k > n {
        return Err(Error::InvalidK {
            k,
            reason: format!("need 1 <= k <= {n}"),
        });
    }
    limits.check(ds, k)?;
    if n > 20 {
        return Err(Error::LimitExceeded(format!("{n} points > 20 for subset enumeration")));
    }
    let full = full_mask(n) as usize;
    let mut single = vec![0.0; full + 1];
    for (mask, slot) in single.iter_mut().enumerate().skip(1) {
        *slot = optimal_cluster_cost(&indices(mask as Mask), ds, obj)?;
    }
    let combine = |a: f64, b: f64| match obj {
        Objective::KCenters => a.max(b),
        _ => a + b,
    };
    let mut dp = single.clone();
    for _ in 2..=k {
        let mut next = vec![f64::INFINITY; full + 1];
        for mask in 1..=full {
            let low = mask & mask.wrapping_neg();
            let rest = mask ^ low;
            // the group holding the lowest point: low plus any subset of rest
            let mut sub = rest;
            loop {
                let group = sub | low;
                let other = mask ^ group;
                if other != 0 && dp[other].is_finite() {
                    let v = combine(single[group], dp[other]);
                    if v < next[mask] {
                        next[mask] = v;
                    }
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
        }
        dp = next;
    }
    Ok(dp[full])
}

/// Exact minimum vertex cover for graphs up to 30 vertices.
pub fn min_vertex_cover(g: &Graph) -> Result<Vec<usize>> {
    min_vertex_cover_with(g, 30)
}

/// Exact minimum vertex cover by branch and bound on an uncovered edge, with
/// a greedy maximal matching as lower bound. Vertex ids are 1-based.
///
/// The result is also minimal: no vertex can be dropped.
pub fn min_vertex_cover_with(g: &Graph, max_vertices: usize) -> Result<Vec<usize>> {
    let n = g.num_vertices();
    if n > max_vertices.min(64) {
        return Err(Error::LimitExceeded(format!(
            "{n} vertices > {}",
            max_vertices.min(64)
        )));
    }
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (u - 1, v - 1)).collect();

    struct Bb<'e> {
        edges: &'e [(usize, usize)],
        best: u64,
        best_size: u32,
    }

    impl Bb<'_> {
        fn matching_bound(&self, chosen: u64) -> u32 {
            let mut used = chosen;
            let mut size = 0;
            for &(u, v) in self.edges {
                if used >> u & 1 == 0 && used >> v & 1 == 0 {
                    used |= 1 << u | 1 << v;
                    size += 1;
                }
            }
            size
        }

        fn search(&mut self, chosen: u64) {
            let size = chosen.count_ones();
            let uncovered = self
                .edges
                .iter()
                .find(|&&(u, v)| chosen >> u & 1 == 0 && chosen >> v & 1 == 0);
            let Some(&(u, v)) = uncovered else {
                if size < self.best_size {
                    self.best = chosen;
                    self.best_size = size;
                }
                return;
            };
            if size + self.matching_bound(chosen) >= self.best_size {
                return;
            }
            self.search(chosen | 1 << u);
            self.search(chosen | 1 << v);
        }
    }

    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut bb = Bb {
        edges: &edges,
        best: all,
        best_size: n as u32 + 1,
    };
    bb.search(0);
    let mut cover = bb.best;
    // drop redundant vertices (a no-op for a true minimum)
    for x in 0..n {
        if cover >> x & 1 == 1 {
            let without = cover & !(1 << x);
            if edges.iter().all(|&(u, v)| without >> u & 1 == 1 || without >> v & 1 == 1) {
                cover = without;
            }
        }
    }
    Ok((0..n).filter(|&x| cover >> x & 1 == 1).map(|x| x + 1).collect())
}

/// Brute-force partition enumeration, kept next to the solvers it checks.
#[cfg(test)]
pub(crate) fn all_partitions(n: usize, k: usize) -> Vec<crate::Partition> {
    use crate::Partition;
    fn rec(i: usize, n: usize, k: usize, labels: &mut Vec<usize>, used: usize, out: &mut Vec<Partition>) {
        if i == n {
            if used == k {
                out.push(Partition::from_labels(labels, k).unwrap());
            }
            return;
        }
        for l in 0..(used + 1).min(k) {
            labels.push(l);
            rec(i + 1, n, k, labels, used.max(l + 1), out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), 0, &mut out);
    out
}
