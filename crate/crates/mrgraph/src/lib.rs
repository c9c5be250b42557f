//! File formats and the command line for the `mrgraph` path engine.
//!
//! The algebra, query language and engine live in `mrgraph-core`; this crate
//! adds edge-list IO and the `mrgraph` binary.

pub mod cli;
pub mod edgelist;

pub use edgelist::{load_graph, parse_edge_list, write_edge_list, LoadError};
