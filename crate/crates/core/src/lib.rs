//! Cluster vertex deletion: graph primitives, reductions, local-ratio
//! weightings, the 9/4-approximation and exact oracles for testing.

pub mod approx;
pub mod graph;
pub mod hitting_set;
pub mod oracle;
pub mod reduction;
pub mod structure;
pub mod weighting;

pub use approx::{
    cluster_vd_apx, cluster_vd_apx_with_mode, hitting_p3_subgraphs_apx, hitting_p3_subgraphs_apx_traced,
    naive_3apx, naive_3apx_traced, LocalRatioTrace, SolveError, TraceStep,
};
pub use graph::{int, ratio, Graph, GraphError, Rational, VertexId, WeightedGraph};
pub use hitting_set::{
    verify_feasible, verify_minimal, verify_p3_subgraph_feasible, verify_p3_subgraph_minimal, HittingSet,
    VerifyError,
};
pub use oracle::{OracleBudget, OracleError};
pub use weighting::{LocalWeighting, Mode, Provenance, WeightingError};
