//! Search kernels and constructive procedures around ordered Ramsey numbers
//! of path powers: exact pattern finders, proof-following witness
//! extractors, exhaustive small-case Ramsey computation with CNF export,
//! big-integer bound evaluation, lower-bound constructions, and the
//! tournament reduction.
//!
//! All core data types are immutable once built (mutators take `&mut self`
//! during construction only) and hold no interior mutability, so shared
//! references are safe across threads.

pub mod bits;
pub mod bounds;
pub mod chain;
pub mod coloring;
pub mod error;
pub mod exact;
pub mod extractors;
pub mod finders;
pub mod graph;
pub mod pattern;
pub mod tournament;
pub mod verify;
pub mod witness;

pub use chain::{validate_chain, ChainLink, ChainParams, ChainWitness};
pub use coloring::{EdgeColoring, BLUE, RED};
pub use error::{Error, Result};
pub use graph::{build_q_graph, OrderedGraph};
pub use pattern::Pattern;
pub use witness::{validate_witness, Host, Witness};
