//! Exact solvers and certification machinery for nonclassical Ramsey numbers.
//!
//! The crate computes the independence number, the upper domination number,
//! and the upper irredundance number of small graphs exactly, detects the
//! structural configurations those parameters interact with (induced
//! patterns, near-complete bipartite graphs minus a matching, upper
//! domination perfection), and certifies small Ramsey-type values by
//! isomorph-free exhaustive search over edge 2-colorings of complete graphs.
//!
//! Everything operates on graphs of at most 32 vertices stored as one
//! adjacency bit mask per vertex. All values are immutable after
//! construction; searches are deterministic for every worker count.

pub mod canon;
pub mod graph;
pub mod graph6;
pub mod set;
pub mod solvers;

pub use canon::{canonical_form, canonical_graph, CanonicalCode};
pub use graph::{EdgeColoring, Graph, GraphError};
pub use set::VertexSet;
pub use solvers::ParameterResult;
