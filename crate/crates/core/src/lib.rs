//! Explainable clustering through axis-aligned threshold trees.
//!
//! A threshold tree routes a point left when `x[dim] <= theta` and right
//! otherwise; its leaves induce a partition of the data. This crate provides:
//!
//! - [`dataset`]: the point set and the distance metrics,
//! - [`tree`]: threshold trees, routing and induced partitions,
//! - [`objectives`]: k-means, k-medians, k-centers and spacing costs together
//!   with their optimal representatives,
//! - [`max_spacing`]: the greedy fitter that builds a tree of maximum spacing,
//! - [`oracle`]: exhaustive ground-truth solvers for small instances,
//! - [`reductions`]: graph to clustering-instance constructions built around
//!   vertex covers.
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the command
//! line live in the `xclust` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod dataset;
mod error;
pub mod max_spacing;
mod meb;
pub mod objectives;
pub mod oracle;
pub mod reductions;
pub mod tree;

pub use crate::dataset::{dist, Dataset, Metric};
pub use crate::error::Error;
pub use crate::max_spacing::{fit, GreedyStep, GreedyTrace};
pub use crate::objectives::Objective;
pub use crate::tree::{AxisCut, Node, Partition, ThresholdTree};

pub type Result<T, E = Error> = core::result::Result<T, E>;
