#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand::rngs::StdRng;
use xclust_core::{AxisCut, Dataset, Metric, Node, Partition, ThresholdTree};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn uniform_dataset(rng: &mut StdRng, n: usize, d: usize) -> Dataset {
    Dataset::new(
        (0..n)
            .map(|_| (0..d).map(|_| rng.gen::<f64>()).collect())
            .collect(),
    )
    .unwrap()
}

/// Random tree with `leaves` leaves on dimensions `0..d`, thresholds in [0, 1].
pub fn random_tree(rng: &mut StdRng, leaves: usize, d: usize) -> ThresholdTree {
    fn grow(rng: &mut StdRng, leaves: usize, d: usize) -> Node {
        if leaves == 1 {
            return Node::Leaf(0);
        }
        let left = rng.gen_range(1..leaves);
        Node::split(
            AxisCut::new(rng.gen_range(0..d), rng.gen::<f64>()),
            grow(rng, left, d),
            grow(rng, leaves - left, d),
        )
    }
    ThresholdTree::with_dfs_ids(grow(rng, leaves, d))
}

/// O(n^2) spacing straight from the definition.
pub fn naive_spacing(ds: &Dataset, labels: &[usize], metric: Metric) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..ds.len() {
        for j in 0..ds.len() {
            if labels[i] != labels[j] {
                best = best.min(metric.eval(ds.point(i), ds.point(j)));
            }
        }
    }
    best
}

/// Every partition of `0..n` into exactly `k` non-empty groups.
pub fn all_partitions(n: usize, k: usize) -> Vec<Partition> {
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

/// Minimum enclosing ball radius by trying every support set of up to d+1
/// points: circumcenter in the affine hull via normal equations, keep the
/// smallest ball that encloses everything.
pub fn brute_force_meb_radius(points: &[Vec<f64>]) -> f64 {
    let d = points[0].len();
    let n = points.len();
    let mut best = f64::INFINITY;
    let max = (d + 1).min(n);
    let mut subset = Vec::new();
    fn sq(a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
    }
    fn visit(
        start: usize,
        max: usize,
        points: &[Vec<f64>],
        subset: &mut Vec<usize>,
        best: &mut f64,
    ) {
        if !subset.is_empty() {
            if let Some(c) = circumcenter(points, subset) {
                let r2 = subset.iter().map(|&i| sq(&points[i], &c)).fold(0.0, f64::max);
                let all = points.iter().map(|p| sq(p, &c)).fold(0.0, f64::max);
                if all <= r2 * (1.0 + 1e-9) + 1e-12 {
                    *best = best.min(all.sqrt());
                }
            }
        }
        if subset.len() == max {
            return;
        }
        for i in start..points.len() {
            subset.push(i);
            visit(i + 1, max, points, subset, best);
            subset.pop();
        }
    }
    visit(0, max, points, &mut subset, &mut best);
    best
}

/// Solves 2 G lambda = diag(G) with G the Gram matrix of offsets; None if singular.
fn circumcenter(points: &[Vec<f64>], subset: &[usize]) -> Option<Vec<f64>> {
    let o = &points[subset[0]];
    let offs: Vec<Vec<f64>> = subset[1..]
        .iter()
        .map(|&i| points[i].iter().zip(o).map(|(a, b)| a - b).collect())
        .collect();
    let m = offs.len();
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    let mut a: Vec<Vec<f64>> = (0..m)
        .map(|i| {
            let mut row: Vec<f64> = (0..m).map(|j| 2.0 * dot(&offs[i], &offs[j])).collect();
            row.push(dot(&offs[i], &offs[i]));
            row
        })
        .collect();
    for col in 0..m {
        let piv = (col..m).max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))?;
        if a[piv][col].abs() < 1e-9 {
            return None;
        }
        a.swap(col, piv);
        for r in 0..m {
            if r != col {
                let f = a[r][col] / a[col][col];
                for c in col..=m {
                    a[r][c] -= f * a[col][c];
                }
            }
        }
    }
    let mut c = o.clone();
    for (i, off) in offs.iter().enumerate() {
        let lambda = a[i][m] / a[i][i];
        for (x, v) in c.iter_mut().zip(off) {
            *x += lambda * v;
        }
    }
    Some(c)
}
