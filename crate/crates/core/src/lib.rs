//! Wiener complexity and eccentric complexity of graphs: invariants, graph
//! classes, constructions, isomorph-free enumeration and search tasks.

pub mod classify;
pub mod cli;
pub mod codec;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod verify;

pub use classify::{classify, ClassificationReport};
pub use error::{CodecError, GraphError};
pub use graph::{DistanceMatrix, Graph, GraphBuilder};
pub use invariants::{profile, InvariantProfile};
