//! Structural tools: nested neighborhoods, biconvex orders, the three
//! binary operations, decomposition trees and letter representations.

mod biconvex;
mod decompose;
mod letter;
mod nested;
mod ops;

pub use biconvex::{find_biconvex_order, s_graph_order, verify_biconvex_order, BICONVEX_SEARCH_LIMIT};
pub use decompose::{decompose, random_tree, recompose, DecompositionTree, Op, DECOMPOSE_LIMIT};
pub use letter::{
    decode_letter, letter_representation_grid, verify_letter, Decoder, LetterRepresentation, PartKind,
};
pub use nested::{incomparability_graph, neighborhoods_nested};
pub use ops::{disjoint_union, join, k1, skew_join};
