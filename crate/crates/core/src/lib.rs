//! Strong metric dimension of graphs and simultaneous strong metric dimension
//! of graph families on a common vertex set.
//!
//! The pipeline is: distances by BFS, mutually maximally distant pairs, the
//! strong resolving graph, and an exact minimum vertex cover of that graph (or
//! of the edge union over a whole family). Every reported dimension carries a
//! witness that is re-checked against the definition before it is returned.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod bounds;
pub mod cover;
pub mod dimension;
pub mod distance;
mod error;
pub mod families;
pub mod graph;
pub mod strong;

pub use error::{Error, Result};
pub use graph::{GraphFamily, LabeledGraph, TwinRelation, Vertex, VertexSubset};
