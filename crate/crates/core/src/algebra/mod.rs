//! Exact spectra, distance-regularity, automorphism groups and isomorphism.

mod automorphism;
mod drg;
mod poly;
mod refine;

pub use automorphism::{
    are_isomorphic, automorphism_group, automorphism_order_by_sweep, group_order_by_closure,
    is_vertex_transitive, predicted_aut_order, AutomorphismReport,
};
pub use drg::{
    distance_regularity_check, distinct_eigenvalue_count_vs_diameter, DistanceRegularityReport,
    DrgWitness, EigenvalueDiameter, IntersectionArray,
};
pub use poly::{characteristic_polynomial, evaluate, integer_spectrum, SpectrumReport};
