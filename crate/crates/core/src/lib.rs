//! Coloured triangulations encoded as colourful graphs.
//!
//! A `(d+1)`-colourful graph is a bipartite `(d+1)`-regular multigraph whose
//! edges are properly coloured by `1..=d+1`; it is the dual graph of a
//! coloured `d`-dimensional triangulation of an orientable space. This crate
//! computes residues and component counts, decides or semi-decides whether
//! the triangulated space is a sphere or a manifold, builds explicit manifold
//! families, and enumerates small graphs exhaustively.

pub mod census;
pub mod colours;
pub mod constructions;
pub mod format;
pub mod genus;
pub mod graph;
pub mod perm;
pub mod residues;
pub mod topology;
mod union_find;

pub use colours::ColourSet;
pub use graph::{ColourfulGraph, GraphError};
pub use residues::{kappa_table, residues, KappaTable, ResiduePartition};
