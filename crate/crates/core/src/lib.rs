//! Weighted Szeged and PI indices of connected graphs by the quotient-graph
//! cut method.
//!
//! For a connected graph `G` and a partition `{F_1, .., F_k}` of its edges
//! that is coarser than the Θ*-partition, each of wSz, wPI_v, wSz_e and wPI
//! is the sum of matching indices of the weighted quotient graphs `G/F_i`.
//! On benzenoid systems and phenylenes the edge-direction classes give tree
//! quotients and the whole suite runs in linear time.
//!
//! ```
//! use szeged_cut::{molgen, oracle};
//!
//! let ph3 = molgen::linear_phenylene(3).unwrap();
//! let cut = ph3.suite(false).unwrap();
//! assert_eq!(cut.values(), [7560, 2016, 7360, 2112]);
//! assert_eq!(oracle::oracle_suite(&ph3.graph, false).unwrap().values(), cut.values());
//! ```

pub mod cli;
pub mod decimal;
mod dsu;
pub mod error;
pub mod graph;
pub mod indices;
pub mod molgen;
pub mod oracle;
pub mod quotient;
pub mod theta;

pub use error::{Error, Result};
pub use graph::{all_pairs_distances, bfs_distances, edge_vertex_distance, DistanceMatrix, Graph};
pub use indices::{
    edge_sides, first_zagreb, general_cut_index, weighted_index, weighted_suite_cut,
    weighted_suite_direct, EdgeSides, IndexKind, IndexReport, Method,
};
pub use quotient::{quotient_graph, QuotientGraph, WeightAssignment};
pub use theta::{
    coarsen, is_partial_cube, theta_related, theta_star_partition, validate_c_partition,
    EdgePartition,
};
