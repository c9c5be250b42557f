//! Path algebra and regular path expressions over multi-relational graphs.
//!
//! A graph here is a vertex set `V`, a label set `Ω` and a ternary edge
//! relation `E ⊆ V × Ω × V`. Paths are strings over `E`; path sets are
//! combined with union, concatenative join (`⋈∘`) and concatenative product
//! (`×∘`). Regular path expressions over edge patterns compile to a
//! Thompson-style automaton which the [`engine`] uses both to recognize a
//! given path and to generate every matching path in a graph.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! ```
//! use mrgraph_core::engine::generate;
//! use mrgraph_core::regex::{compile_nfa, parse_query};
//! use mrgraph_core::{GenerationConfig, Graph};
//!
//! let g = Graph::from_triples([("i", "a", "j"), ("j", "b", "k")]).unwrap();
//! let nfa = compile_nfa(&parse_query("[_,a,_][_,b,_]").unwrap());
//! let paths = generate(&g, &nfa, &GenerationConfig::bounded(2)).unwrap();
//! assert_eq!(paths.len(), 1);
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod engine;
pub mod graph;
pub mod regex;

pub use algebra::{EdgePattern, LabelSet, PartPattern, PathSet, SetFilter, VertexSet};
pub use engine::{EngineError, GenerationConfig, ProjectedEdgeSet};
pub use graph::{Edge, Graph, GraphBuilder, GraphError, LabelId, Path, PathError, VertexId};
pub use regex::{Boundary, Nfa, ParseError, PathExpr};

/// Returns true when `token` is a valid identifier for the query language and
/// the edge-list format: one or more of `[A-Za-z0-9_-]`, and not the
/// wildcard `_` on its own.
pub fn is_ident(token: &str) -> bool {
    !token.is_empty()
        && token != "_"
        && token
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || b == b'_' || b == b'-')
}
