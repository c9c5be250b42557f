//! The regular path expression language: syntax tree, parser, desugaring and
//! compilation to an automaton.

mod ast;
mod nfa;
mod parser;

pub use ast::PathExpr;
pub use nfa::{AtomMove, Boundary, BoundaryTag, EpsilonMove, Nfa, StateId};
pub use parser::{parse_query, ParseError, ParseErrorKind};

/// Desugars `x` and compiles it.
pub fn compile_nfa(x: &PathExpr) -> Nfa {
    Nfa::compile(&x.desugar())
}
