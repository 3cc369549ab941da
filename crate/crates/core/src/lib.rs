//! Weisfeiler-Lehman color refinement over combinatorial complexes.
//!
//! A [`CombinatorialComplex`] is a set of vertex subsets ("cells") with an
//! order-preserving rank. The [`engine`] refines cell colors from any subset of
//! the boundary, coboundary, lower-adjacency and upper-adjacency multisets and
//! compares complexes by their color histograms. [`lifting`] builds complexes
//! from graphs and hypergraphs, and [`baselines`] holds reference WL tests.

pub mod baselines;
pub mod complex;
pub mod engine;
pub mod fixtures;
pub mod generators;
pub mod graph;
pub mod io;
pub mod lifting;
pub mod neighborhood;

pub use complex::{
    build_complex, disjoint_union, relabel_vertices, Cell, CombinatorialComplex, ComplexError, Side,
};
pub use engine::{distinguish, InitScheme, RefinementRule, Verdict};
pub use graph::{Graph, Hypergraph};
pub use neighborhood::NeighborhoodIndex;
