//! Exact domination and packing invariants of digraphs and their products.

pub mod auxgraph;
pub mod bitset;
pub mod error;
pub mod family;
pub mod graph;
pub mod io;
pub mod product;
pub mod record;
pub mod solve;
pub mod verify;

pub use bitset::VertexSet;
pub use error::{FamilyError, GraphError, SolveError};
pub use graph::{build_digraph, Digraph, UndirectedGraph};
