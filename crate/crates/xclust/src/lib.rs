//! File formats, reports and the command line around `xclust-core`.
//!
//! - datasets: CSV, comma separated, optional single header row;
//! - trees: JSON, `{"leaf":0}` or
//!   `{"cut":{"dim":0,"theta":0.5},"left":{..},"right":{..}}`;
//! - graphs: text, `n m` followed by `m` lines `u v` with 1-based ids.

pub mod cli;
pub mod csv_io;
mod error;
pub mod graph_io;
pub mod report;
pub mod tree_json;

pub use crate::error::Error;
pub use xclust_core as core;

pub type Result<T, E = Error> = std::result::Result<T, E>;
