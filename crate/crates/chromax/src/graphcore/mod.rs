//! Simple graphs on at most 64 vertices, their invariants, ear
//! decompositions, canonical forms, and graph6 I/O.

mod ear;
mod graph;
mod graph6;
mod invariants;
mod iso;

pub use ear::{blocks_bounded_by_ears, ear_decomposition, Block, BlockSet, EarDecomposition};
pub(crate) use graph::BitIter;
pub use graph::SimpleGraph;
pub use graph6::{parse_graph6, write_graph6};
pub use invariants::{
    chromatic_number, clique_number, independence_number, is_2_connected, l_core,
    vertex_connectivity,
};
pub use iso::{canonical_form, canonical_graph, is_isomorphic};
