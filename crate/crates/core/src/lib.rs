//! Minimum-rank toolkit for the graphs of order at most seven.
//!
//! - [`graph`]: bitset graphs, graph6, isomorphism, cliques.
//! - [`bounds`]: the bound strategies and their combination into a table row.
//! - [`linalg`]: exact rational matrices and rank.
//! - [`witness`]: certificate matrices and their verification.
//! - [`catalog`]: bundled data, the full-table pipeline and the diff report.

pub mod bounds;
pub mod catalog;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod witness;

pub use error::{Error, Result};
