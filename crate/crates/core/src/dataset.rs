//! Point sets and distance metrics.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// An immutable set of `n` points in `d` dimensions.
///
/// Point indices `0..n` are stable for the life of the dataset. Coordinates
/// are stored row-major in a single buffer.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    coords: Vec<f64>,
    n: usize,
    d: usize,
    feature_names: Option<Vec<String>>,
}

impl Dataset {
    /// Builds a dataset, rejecting empty input, ragged rows and non-finite values.
    pub fn new(points: Vec<Vec<f64>>) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyDataset)?;
        let d = first.len();
        if d == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut coords = Vec::with_capacity(points.len() * d);
        for (index, p) in points.iter().enumerate() {
            if p.len() != d {
                return Err(Error::RaggedPoint {
                    index,
                    expected: d,
                    found: p.len(),
                });
            }
            if p.iter().any(|v| !v.is_finite()) {
                return Err(Error::NonFinite { index });
            }
            coords.extend_from_slice(p);
        }
        Ok(Dataset {
            coords,
            n: points.len(),
            d,
            feature_names: None,
        })
    }

    /// Convenience constructor for one-dimensional data.
    pub fn from_values(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| alloc::vec![v]).collect())
    }

    pub fn with_feature_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.d {
            return Err(Error::FeatureNames {
                expected: self.d,
                found: names.len(),
            });
        }
        self.feature_names = Some(names);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    /// Always false: a dataset holds at least one point.
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn feature_names(&self) -> Option<&[String]> {
        self.feature_names.as_deref()
    }

    /// Coordinates of point `i`.
    ///
    /// # Panics
    /// If `i >= self.len()`.
    #[inline]
    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.d..(i + 1) * self.d]
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = &[f64]> + '_ {
        self.coords.chunks_exact(self.d)
    }

    /// Distance between points `i` and `j` under `metric`.
    #[inline]
    pub fn distance(&self, i: usize, j: usize, metric: Metric) -> f64 {
        metric.eval(self.point(i), self.point(j))
    }

    /// Number of pairwise distinct points.
    pub fn distinct_count(&self) -> usize {
        let mut idx: Vec<usize> = (0..self.n).collect();
        idx.sort_unstable_by(|&a, &b| cmp_points(self.point(a), self.point(b)));
        1 + idx
            .windows(2)
            .filter(|w| self.point(w[0]) != self.point(w[1]))
            .count()
    }

    /// A new dataset holding the given rows, in order.
    pub fn subset(&self, indices: &[usize]) -> Result<Self> {
        let mut ds = Self::new(indices.iter().map(|&i| self.point(i).to_vec()).collect())?;
        ds.feature_names = self.feature_names.clone();
        Ok(ds)
    }
}

fn cmp_points(a: &[f64], b: &[f64]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.total_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Distance functions between points.
///
/// `L2Squared` violates the triangle inequality; it backs the k-means cost and
/// is only used for spacing when requested explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Metric {
    L1,
    #[default]
    L2,
    L2Squared,
    LInf,
}

impl Metric {
    pub const ALL: [Metric; 4] = [Metric::L1, Metric::L2, Metric::L2Squared, Metric::LInf];

    /// Evaluates the metric on two slices of equal length.
    ///
    /// Extra coordinates in the longer slice are ignored; use [`dist`] for a
    /// checked variant.
    #[inline]
    pub fn eval(self, a: &[f64], b: &[f64]) -> f64 {
        let diffs = a.iter().zip(b).map(|(x, y)| x - y);
        match self {
            Metric::L1 => diffs.map(f64::abs).sum(),
            Metric::L2 => libm::sqrt(diffs.map(|t| t * t).sum()),
            Metric::L2Squared => diffs.map(|t| t * t).sum(),
            Metric::LInf => diffs.map(f64::abs).fold(0.0, f64::max),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Metric::L1 => "l1",
            Metric::L2 => "l2",
            Metric::L2Squared => "l2sq",
            Metric::LInf => "linf",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = String;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "l1" | "manhattan" => Ok(Metric::L1),
            "l2" | "euclidean" => Ok(Metric::L2),
            "l2sq" | "l2-squared" | "sqeuclidean" => Ok(Metric::L2Squared),
            "linf" | "l-infinity" | "chebyshev" => Ok(Metric::LInf),
            other => Err(alloc::format!("unknown metric `{other}`")),
        }
    }
}

/// Checked distance between two points.
pub fn dist(a: &[f64], b: &[f64], metric: Metric) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(metric.eval(a, b))
}
