//! Induced-subgraph tooling for bipartite graphs: an exact embedding
//! matcher, permutation utilities, named families, structural checks and
//! a verification harness.

pub mod error;
pub mod families;
pub mod graph;
pub mod harness;
pub mod matcher;
pub mod perm;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{Bigraph, Bipartition, Graph, GraphBuilder, Side};
pub use matcher::{Embedding, SearchOptions, SearchOutcome};
pub use perm::Permutation;
