//! Minimum enclosing L2 ball via Welzl's recursion with the move-to-front
//! heuristic. Boundary sets that are affinely dependent are reduced to an
//! independent subset before the circumcenter is solved, so degenerate inputs
//! such as 0/1 incidence vectors are handled.

use alloc::vec;
use alloc::vec::Vec;

struct Ball {
    center: Vec<f64>,
    radius_sq: f64,
}

impl Ball {
    fn contains(&self, p: &[f64]) -> bool {
        sq_dist(&self.center, p) <= self.radius_sq * (1.0 + 1e-10) + 1e-14
    }
}

fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Smallest ball whose boundary passes through every support point.
fn circumball(support: &[&[f64]], d: usize) -> Ball {
    let Some((&origin, rest)) = support.split_first() else {
        return Ball {
            center: vec![0.0; d],
            radius_sq: -1.0,
        };
    };
    // Orthonormal basis of the affine hull; `coords[i]` are the basis
    // coordinates of the i-th independent offset (lower triangular).
    let mut basis: Vec<Vec<f64>> = Vec::new();
    let mut coords: Vec<Vec<f64>> = Vec::new();
    let scale = rest
        .iter()
        .map(|p| sq_dist(p, origin))
        .fold(0.0, f64::max);
    let tol = 1e-20 * scale.max(1e-300);
    for p in rest {
        let v: Vec<f64> = p.iter().zip(origin).map(|(a, b)| a - b).collect();
        let mut resid = v.clone();
        let mut y = Vec::with_capacity(basis.len() + 1);
        for q in &basis {
            let c = dot(&resid, q);
            y.push(c);
            for (r, qi) in resid.iter_mut().zip(q) {
                *r -= c * qi;
            }
        }
        let norm_sq = dot(&resid, &resid);
        if norm_sq <= tol {
            continue;
        }
        let norm = libm::sqrt(norm_sq);
        y.push(norm);
        basis.push(resid.into_iter().map(|r| r / norm).collect());
        coords.push(y);
    }
    // Solve 2 c.y_i = |y_i|^2 by forward substitution.
    let mut c = Vec::with_capacity(coords.len());
    for y in &coords {
        let i = c.len();
        let partial: f64 = c.iter().zip(y).map(|(cb, yb)| cb * yb).sum();
        c.push((0.5 * dot(y, y) - partial) / y[i]);
    }
    let mut center = origin.to_vec();
    for (cb, q) in c.iter().zip(&basis) {
        for (x, qi) in center.iter_mut().zip(q) {
            *x += cb * qi;
        }
    }
    let radius_sq = support
        .iter()
        .map(|p| sq_dist(p, &center))
        .fold(0.0, f64::max);
    Ball { center, radius_sq }
}

fn move_to_front<'a>(
    order: &mut [&'a [f64]],
    end: usize,
    support: &mut Vec<&'a [f64]>,
    d: usize,
) -> Ball {
    let mut ball = circumball(support, d);
    if support.len() == d + 1 {
        return ball;
    }
    for i in 0..end {
        let p = order[i];
        if !ball.contains(p) {
            support.push(p);
            ball = move_to_front(order, i, support, d);
            support.pop();
            order[..=i].rotate_right(1);
        }
    }
    ball
}

/// Center and radius of the smallest L2 ball containing all `points`.
///
/// The radius is the exact maximum distance from the returned center to the
/// points. `points` must be non-empty and share a dimension.
pub(crate) fn min_enclosing_ball(points: &[&[f64]]) -> (Vec<f64>, f64) {
    debug_assert!(!points.is_empty());
    let d = points[0].len();
    let mut order = points.to_vec();
    let mut support = Vec::with_capacity(d + 1);
    let ball = move_to_front(&mut order, points.len(), &mut support, d);
    let radius = points
        .iter()
        .map(|p| sq_dist(p, &ball.center))
        .fold(0.0, f64::max);
    (ball.center, libm::sqrt(radius))
}
