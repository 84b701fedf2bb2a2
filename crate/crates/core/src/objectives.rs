//! Clustering costs and their optimal per-cluster representatives.
//!
//! | objective | per-point term         | aggregate      | optimal representative |
//! |-----------|------------------------|----------------|------------------------|
//! | k-means   | `‖x − μ‖₂²`            | sum            | centroid               |
//! | k-medians | `‖x − μ‖₁`             | sum            | coordinate-wise median |
//! | k-centers | `‖x − μ‖₂`             | max            | minimum enclosing ball |
//! | spacing   | cross-cluster distance | min, maximized | none                   |

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::meb::min_enclosing_ball;
use crate::{Dataset, Error, Metric, Partition, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Objective {
    KMeans,
    KMedians,
    KCenters,
    Spacing(Metric),
}

impl Objective {
    /// Spacing is maximized, the center-based costs are minimized.
    pub fn is_maximized(self) -> bool {
        matches!(self, Objective::Spacing(_))
    }

    pub fn is_center_based(self) -> bool {
        !self.is_maximized()
    }

    pub fn name(self) -> &'static str {
        match self {
            Objective::KMeans => "kmeans",
            Objective::KMedians => "kmedians",
            Objective::KCenters => "kcenters",
            Objective::Spacing(_) => "spacing",
        }
    }

    /// True when `a` is strictly better than `b` under this objective.
    pub fn better(self, a: f64, b: f64) -> bool {
        if self.is_maximized() {
            a > b
        } else {
            a < b
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Objective::Spacing(m) => write!(f, "spacing[{m}]"),
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for Objective {
    type Err = String;

    /// Accepts `kmeans`, `kmedians`, `kcenters`, `spacing` or `spacing:<metric>`.
    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        let (head, metric) = match lower.split_once(':') {
            Some((h, m)) => (h, Some(m.parse::<Metric>()?)),
            None => (lower.as_str(), None),
        };
        let obj = match head.replace(['-', '_'], "").as_str() {
            "kmeans" => Objective::KMeans,
            "kmedians" => Objective::KMedians,
            "kcenters" => Objective::KCenters,
            "spacing" => return Ok(Objective::Spacing(metric.unwrap_or_default())),
            _ => return Err(alloc::format!("unknown objective `{s}`")),
        };
        match metric {
            Some(_) => Err(alloc::format!("objective `{head}` takes no metric")),
            None => Ok(obj),
        }
    }
}

fn non_empty(cluster: &[usize]) -> Result<()> {
    if cluster.is_empty() {
        Err(Error::EmptyCluster(0))
    } else {
        Ok(())
    }
}

/// Coordinate-wise arithmetic mean.
pub fn centroid(cluster: &[usize], ds: &Dataset) -> Result<Vec<f64>> {
    non_empty(cluster)?;
    let mut mean = alloc::vec![0.0; ds.dim()];
    for &i in cluster {
        for (m, x) in mean.iter_mut().zip(ds.point(i)) {
            *m += x;
        }
    }
    let n = cluster.len() as f64;
    mean.iter_mut().for_each(|m| *m /= n);
    Ok(mean)
}

/// Coordinate-wise median; the lower median for even counts.
pub fn coordinate_median(cluster: &[usize], ds: &Dataset) -> Result<Vec<f64>> {
    non_empty(cluster)?;
    let mid = (cluster.len() - 1) / 2;
    let mut column = Vec::with_capacity(cluster.len());
    Ok((0..ds.dim())
        .map(|j| {
            column.clear();
            column.extend(cluster.iter().map(|&i| ds.point(i)[j]));
            *column.select_nth_unstable_by(mid, f64::total_cmp).1
        })
        .collect())
}

/// Center and radius of the smallest L2 ball containing the cluster.
pub fn meb_center(cluster: &[usize], ds: &Dataset) -> Result<(Vec<f64>, f64)> {
    non_empty(cluster)?;
    let pts: Vec<&[f64]> = cluster.iter().map(|&i| ds.point(i)).collect();
    Ok(min_enclosing_ball(&pts))
}

/// The cost-minimizing representative for a center-based objective.
pub fn optimal_representative(cluster: &[usize], ds: &Dataset, obj: Objective) -> Result<Vec<f64>> {
    match obj {
        Objective::KMeans => centroid(cluster, ds),
        Objective::KMedians => coordinate_median(cluster, ds),
        Objective::KCenters => meb_center(cluster, ds).map(|(c, _)| c),
        Objective::Spacing(_) => Err(Error::InvalidPartition(
            "spacing has no representatives".into(),
        )),
    }
}

/// Cost of one cluster against a fixed representative: the sum of per-point
/// terms for k-means and k-medians, the maximum distance for k-centers.
/// Empty clusters cost 0.
pub fn cluster_cost(cluster: &[usize], ds: &Dataset, obj: Objective, rep: &[f64]) -> f64 {
    let terms = cluster.iter().map(|&i| ds.point(i));
    match obj {
        Objective::KMeans => terms.map(|x| Metric::L2Squared.eval(x, rep)).sum(),
        Objective::KMedians => terms.map(|x| Metric::L1.eval(x, rep)).sum(),
        Objective::KCenters => terms.map(|x| Metric::L2.eval(x, rep)).fold(0.0, f64::max),
        Objective::Spacing(_) => 0.0,
    }
}

/// Optimal cost of a single non-empty cluster.
pub fn optimal_cluster_cost(cluster: &[usize], ds: &Dataset, obj: Objective) -> Result<f64> {
    match obj {
        Objective::KCenters => meb_center(cluster, ds).map(|(_, r)| r),
        _ => {
            let rep = optimal_representative(cluster, ds, obj)?;
            Ok(cluster_cost(cluster, ds, obj, &rep))
        }
    }
}

/// Representatives used by [`cost`]: the partition's own when present,
/// otherwise the optimal ones. Fails on an empty cluster without a supplied
/// representative.
pub fn representatives(partition: &Partition, ds: &Dataset, obj: Objective) -> Result<Vec<Vec<f64>>> {
    if let Some(reps) = partition.representatives() {
        return Ok(reps.to_vec());
    }
    partition
        .clusters()
        .iter()
        .enumerate()
        .map(|(id, c)| {
            optimal_representative(c, ds, obj).map_err(|e| match e {
                Error::EmptyCluster(_) => Error::EmptyCluster(id),
                e => e,
            })
        })
        .collect()
}

/// Minimum distance between two points in distinct clusters.
///
/// Duplicate points split across clusters give 0.
pub fn spacing(partition: &Partition, ds: &Dataset, metric: Metric) -> Result<f64> {
    let groups = partition.num_nonempty();
    if groups < 2 {
        return Err(Error::TooFewGroups(groups));
    }
    let labels = partition.labels();
    let mut best = f64::INFINITY;
    for i in 0..ds.len() {
        for j in i + 1..ds.len() {
            if labels[i] != labels[j] {
                best = best.min(ds.distance(i, j, metric));
            }
        }
    }
    Ok(best)
}

/// The objective value of a partition.
///
/// Center-based objectives use the partition's representatives when present
/// (empty clusters then contribute nothing) and the optimal ones otherwise.
pub fn cost(partition: &Partition, ds: &Dataset, obj: Objective) -> Result<f64> {
    if partition.labels().len() != ds.len() {
        return Err(Error::InvalidPartition(alloc::format!(
            "partition covers {} points, dataset has {}",
            partition.labels().len(),
            ds.len()
        )));
    }
    if let Objective::Spacing(m) = obj {
        return spacing(partition, ds, m);
    }
    let per_cluster: Vec<f64> = match (obj, partition.representatives()) {
        (Objective::KCenters, None) => partition
            .clusters()
            .iter()
            .enumerate()
            .map(|(id, c)| {
                if c.is_empty() {
                    Err(Error::EmptyCluster(id))
                } else {
                    meb_center(c, ds).map(|(_, r)| r)
                }
            })
            .collect::<Result<_>>()?,
        _ => {
            let reps = representatives(partition, ds, obj)?;
            partition
                .clusters()
                .iter()
                .zip(&reps)
                .map(|(c, r)| cluster_cost(c, ds, obj, r))
                .collect()
        }
    };
    Ok(match obj {
        Objective::KCenters => per_cluster.into_iter().fold(0.0, f64::max),
        _ => per_cluster.into_iter().sum(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn star3() -> Dataset {
        // K_{1,3} centered at vertex 1 embedded in {0,1}^4
        Dataset::new(vec![
            vec![1.0, 1.0, 0.0, 0.0],
            vec![1.0, 0.0, 1.0, 0.0],
            vec![1.0, 0.0, 0.0, 1.0],
        ])
        .unwrap()
    }

    #[test]
    fn centroid_examples() {
        let ds = Dataset::from_values(&[0.0, 2.0]).unwrap();
        assert_eq!(centroid(&[0, 1], &ds).unwrap(), vec![1.0]);
        assert_eq!(centroid(&[1], &ds).unwrap(), vec![2.0]);
        let c = centroid(&[0, 1, 2], &star3()).unwrap();
        assert_eq!(c[0], 1.0);
        for v in &c[1..] {
            assert!((v - 1.0 / 3.0).abs() < 1e-15);
        }
        assert_eq!(centroid(&[], &ds), Err(Error::EmptyCluster(0)));
    }

    #[test]
    fn median_examples() {
        let ds = Dataset::from_values(&[0.0, 1.0, 5.0]).unwrap();
        assert_eq!(coordinate_median(&[0, 1, 2], &ds).unwrap(), vec![1.0]);
        assert_eq!(coordinate_median(&[0, 1], &ds).unwrap(), vec![0.0]);
        assert_eq!(cluster_cost(&[0, 1], &ds, Objective::KMedians, &[0.0]), 1.0);
        assert_eq!(cluster_cost(&[0, 1], &ds, Objective::KMedians, &[0.37]), 1.0);
        assert_eq!(cluster_cost(&[0, 1], &ds, Objective::KMedians, &[1.0]), 1.0);
        assert_eq!(coordinate_median(&[0, 1, 2], &star3()).unwrap(), vec![1.0, 0.0, 0.0, 0.0]);
        assert!(coordinate_median(&[], &ds).is_err());
    }

    #[test]
    fn meb_examples() {
        let ds = Dataset::from_values(&[0.0, 2.0]).unwrap();
        assert_eq!(meb_center(&[0, 1], &ds).unwrap(), (vec![1.0], 1.0));
        assert_eq!(meb_center(&[1], &ds).unwrap().1, 0.0);
        // three points pairwise at distance sqrt(2): circumradius sqrt(2)/sqrt(3)
        let (_, r) = meb_center(&[0, 1, 2], &star3()).unwrap();
        assert!((r - libm::sqrt(2.0 / 3.0)).abs() < 1e-12, "{r}");
        assert!((r - 0.816_496_6).abs() < 1e-7);
    }

    #[test]
    fn cost_examples() {
        let star = star3();
        let p = Partition::new(vec![vec![0, 1, 2]], 3).unwrap();
        assert!((cost(&p, &star, Objective::KMeans).unwrap() - 2.0).abs() < 1e-12);
        assert_eq!(cost(&p, &star, Objective::KMedians).unwrap(), 3.0);

        let ds = Dataset::from_values(&[0.0, 1.0, 3.0]).unwrap();
        let p = Partition::new(vec![vec![0, 1], vec![2]], 3).unwrap();
        assert_eq!(cost(&p, &ds, Objective::Spacing(Metric::L2)).unwrap(), 2.0);

        let ds = Dataset::from_values(&[0.0, 2.0, 10.0]).unwrap();
        let p = Partition::new(vec![vec![0, 1], vec![2]], 3).unwrap();
        assert_eq!(cost(&p, &ds, Objective::KCenters).unwrap(), 1.0);
    }

    #[test]
    fn cost_errors() {
        let ds = Dataset::from_values(&[0.0, 1.0, 3.0]).unwrap();
        let single = Partition::new(vec![vec![0, 1, 2]], 3).unwrap();
        assert_eq!(
            cost(&single, &ds, Objective::Spacing(Metric::L2)),
            Err(Error::TooFewGroups(1))
        );
        let with_empty = Partition::new(vec![vec![0, 1, 2], vec![]], 3).unwrap();
        assert_eq!(
            cost(&with_empty, &ds, Objective::Spacing(Metric::L2)),
            Err(Error::TooFewGroups(1))
        );
        for obj in [Objective::KMeans, Objective::KMedians, Objective::KCenters] {
            assert_eq!(cost(&with_empty, &ds, obj), Err(Error::EmptyCluster(1)));
        }
    }

    #[test]
    fn supplied_representatives_and_empty_clusters() {
        let ds = Dataset::from_values(&[0.0, 1.0, 3.0]).unwrap();
        let p = Partition::new(vec![vec![0, 1, 2], vec![]], 3)
            .unwrap()
            .with_representatives(vec![vec![1.0], vec![100.0]], 1)
            .unwrap();
        assert_eq!(cost(&p, &ds, Objective::KMeans).unwrap(), 1.0 + 0.0 + 4.0);
        assert_eq!(cost(&p, &ds, Objective::KMedians).unwrap(), 3.0);
        assert_eq!(cost(&p, &ds, Objective::KCenters).unwrap(), 2.0);
    }

    #[test]
    fn duplicate_points_across_clusters() {
        let ds = Dataset::from_values(&[1.0, 1.0, 4.0]).unwrap();
        let p = Partition::new(vec![vec![0], vec![1, 2]], 3).unwrap();
        assert_eq!(cost(&p, &ds, Objective::Spacing(Metric::L2)).unwrap(), 0.0);
    }

    #[test]
    fn parse_objectives() {
        assert_eq!("kmeans".parse::<Objective>(), Ok(Objective::KMeans));
        assert_eq!("k-medians".parse::<Objective>(), Ok(Objective::KMedians));
        assert_eq!("kcenters".parse::<Objective>(), Ok(Objective::KCenters));
        assert_eq!("spacing".parse::<Objective>(), Ok(Objective::Spacing(Metric::L2)));
        assert_eq!("spacing:l1".parse::<Objective>(), Ok(Objective::Spacing(Metric::L1)));
        assert!("kmeans:l1".parse::<Objective>().is_err());
        assert!("wat".parse::<Objective>().is_err());
    }
}
