//! Ground truth by exhaustive search.
//!
//! Enumerates every perfect matching of a torus strip graph, tallies the
//! weight histogram, builds the Newton polygon with internal/boundary
//! classification, and verifies the feedback-arc-set correspondence on the
//! dual digraph. Everything here is exact and deliberately brute-force: the
//! other crates are validated against these counts.

mod enumerate;
mod fas;
mod histogram;
mod polygon;

use thiserror::Error;

pub use enumerate::{enumerate_matchings, visit_matchings, MAX_NODES};
pub use fas::{count_fas, fas_breakdown, is_fas, minimum_fas_census, FasBreakdown, FasCensus};
pub use histogram::WeightHistogram;
pub use polygon::{newton_polygon, NewtonPolygon, PointClass};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {nodes} nodes; exhaustive matching search is limited to {MAX_NODES}")]
    TooLarge { nodes: usize },
    #[error("graph has {arcs} dual arcs; exhaustive subset search is limited to {limit}")]
    SubsetSearchTooLarge { arcs: usize, limit: usize },
    #[error("edge set is not a perfect matching")]
    NotAMatching,
}
