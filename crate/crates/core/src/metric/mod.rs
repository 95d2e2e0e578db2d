//! Resolving, doubly resolving and strong resolving sets, and the exact
//! searches for the corresponding minimum cardinalities.

mod cover;
mod resolve;
mod search;
mod strong;

pub use cover::minimum_vertex_cover;
pub use resolve::{
    doubly_resolves, is_doubly_resolving, is_resolving, is_strong_resolving, metric_vector,
    strongly_resolves, MetricVector, ReportJson, ResolutionKind, ResolutionReport, VertexSet,
};
pub use search::{
    metric_dimension, min_doubly_resolving, refute_size, strong_metric_dimension,
    strong_metric_dimension_brute_force, strong_metric_dimension_by_cover, subsets_of_size,
    DimensionResult, Refutation,
};
pub use strong::{mutually_maximally_distant, strong_resolving_graph};
