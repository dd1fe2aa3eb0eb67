//! Curvature-driven graph coarsening.
//!
//! The crate computes the Balanced Forman curvature of every edge of a
//! simple undirected graph and pools nodes across edges selected by
//! curvature thresholds, producing a coarser graph together with
//! aggregated node features. Negative-curvature edges are the
//! bottlenecks that cause over-squashing in message passing; high
//! curvature marks densely connected clusters prone to over-smoothing.
//! Pooling either kind reshapes the graph before any optimization
//! starts, so the whole pipeline here is precompute: pure functions of
//! the graph structure, no training anywhere.
//!
//! Module map:
//!
//! * [`graph`]: graphs with sorted adjacency lists and feature matrices
//! * [`curvature`]: Balanced Forman curvature per edge
//! * [`pooling`]: threshold strategies, overlap merge, aggregation, remap
//! * [`cliques`]: CliquePool baseline on maximal cliques
//! * [`generators`]: connected caveman graphs and test fixtures
//! * [`analysis`]: histograms, threshold recommendation, pooling reports
//!
//! ```
//! use curvpool_core::{barbell, curvpool, degree_features, Aggregator, Strategy};
//!
//! // two 4-cliques joined by a bridge; pooling across high-curvature
//! // edges collapses each clique into one node
//! let g = barbell(4).unwrap();
//! let feats = degree_features(&g);
//! let (pooled, pooled_feats) =
//!     curvpool(&g, &feats, Strategy::High { t_high: 0.0 }, Aggregator::Sum).unwrap();
//! assert_eq!(pooled.graph.num_nodes(), 2);
//! assert_eq!(pooled_feats.row(0), &[13.0]);
//! ```
//!
//! The crate is `no_std` (with `alloc`); file formats and the command
//! line front end live in the companion `curvpool-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod cliques;
pub mod curvature;
pub mod error;
pub mod generators;
pub mod graph;
pub mod pooling;

pub use analysis::{
    histogram, mean_curvature, pooling_report, recommend_threshold, CurvatureHistogram,
    PoolingReport,
};
pub use cliques::{clique_pool, maximal_cliques, CliqueSet};
pub use curvature::{bfc_all, bfc_edge, square_stats, EdgeCurvature, SquareStats};
pub use error::Error;
pub use generators::{
    barbell, caveman, complete, cycle, degree_features, erdos_renyi, path, star, CavemanSpec,
};
pub use graph::{Edge, FeatureMatrix, Graph};
pub use pooling::{
    aggregate_features, candidate_pairs, curvpool, curvpool_precomputed, merge_pools, remap_edges,
    Aggregator, PoolAssignment, PooledGraph, Strategy,
};
