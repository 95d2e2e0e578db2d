//! Exact computations on the Cayley graph `Cay(D_2n, Ψ)` of the dihedral
//! group, where `Ψ` is every reflection together with the half turn
//! `a^{n/2}`, and on the Toeplitz, circulant and cocktail party graphs that
//! describe it.
//!
//! Everything here is exact: distances by BFS, spectra from the integer
//! characteristic polynomial, automorphism groups by partition backtracking,
//! and metric dimensions by exhaustive subset search or exact vertex cover.

pub mod algebra;
pub mod claims;
pub mod dihedral;
pub mod distance;
pub mod error;
pub mod graph;
pub mod metric;
pub mod profile;

pub use dihedral::DihedralElement;
pub use distance::{all_pairs_distances, DistanceMatrix};
pub use error::{Error, Result};
pub use graph::{
    circulant, cocktail_circulant_set, cocktail_party, complement, complete, cycle,
    dihedral_cayley, dihedral_toeplitz_window, disjoint_union, path, toeplitz, Graph, GraphJson,
};
pub use profile::{profile, GraphProfile};
