//! Thompson-style automaton over edge-pattern atoms.
//!
//! Atom moves consume one edge that satisfies their pattern. Epsilon moves
//! compiled at a join, a product or a star iteration carry a [`Boundary`]
//! together with the nesting depth of the connective that produced them.
//! Between two consumed edges a run may cross several boundaries; the one
//! with the smallest depth belongs to the connective that actually separates
//! the two edges and decides whether they must be adjacent.

use alloc::vec::Vec;

use super::ast::PathExpr;
use crate::algebra::EdgePattern;

pub type StateId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Boundary {
    /// Compiled from `⋈∘` (join or star iteration): the edges on either side
    /// must share their join vertex.
    Adjacent,
    /// Compiled from `×∘`: no adjacency requirement.
    Detached,
}

/// A boundary tag with the nesting depth of its connective.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundaryTag {
    pub kind: Boundary,
    pub depth: u32,
}

impl BoundaryTag {
    /// Combines the pending tag of a run with a newly crossed one, keeping the
    /// outermost. Ties keep the earlier tag.
    pub fn merge(
        pending: Option<BoundaryTag>,
        crossed: Option<BoundaryTag>,
    ) -> Option<BoundaryTag> {
        match (pending, crossed) {
            (Some(p), Some(c)) if c.depth < p.depth => Some(c),
            (Some(p), _) => Some(p),
            (None, c) => c,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonMove {
    pub from: StateId,
    pub to: StateId,
    /// `None` for structural moves (union branches, star entry and exit).
    pub boundary: Option<BoundaryTag>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomMove {
    pub from: StateId,
    pub pattern: EdgePattern,
    pub to: StateId,
}

/// A compiled path expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    state_count: usize,
    start: StateId,
    accepting: Vec<bool>,
    epsilon_moves: Vec<EpsilonMove>,
    atom_moves: Vec<AtomMove>,
    max_path_len: Option<usize>,
}

struct Fragment {
    start: StateId,
    accept: StateId,
}

#[derive(Default)]
struct Builder {
    state_count: usize,
    epsilon_moves: Vec<EpsilonMove>,
    atom_moves: Vec<AtomMove>,
}

impl Builder {
    fn state(&mut self) -> StateId {
        self.state_count += 1;
        self.state_count - 1
    }

    fn epsilon(&mut self, from: StateId, to: StateId, boundary: Option<(Boundary, u32)>) {
        self.epsilon_moves.push(EpsilonMove {
            from,
            to,
            boundary: boundary.map(|(kind, depth)| BoundaryTag { kind, depth }),
        });
    }

    fn fragment(&mut self, x: &PathExpr, depth: u32) -> Fragment {
        use PathExpr::*;
        match x {
            Empty => Fragment {
                start: self.state(),
                accept: self.state(),
            },
            Epsilon => {
                let (start, accept) = (self.state(), self.state());
                self.epsilon(start, accept, None);
                Fragment { start, accept }
            }
            Atom(pattern) => {
                let (start, accept) = (self.state(), self.state());
                self.atom_moves.push(AtomMove {
                    from: start,
                    pattern: pattern.clone(),
                    to: accept,
                });
                Fragment { start, accept }
            }
            Union(a, b) => {
                let start = self.state();
                let a = self.fragment(a, depth + 1);
                let b = self.fragment(b, depth + 1);
                let accept = self.state();
                self.epsilon(start, a.start, None);
                self.epsilon(start, b.start, None);
                self.epsilon(a.accept, accept, None);
                self.epsilon(b.accept, accept, None);
                Fragment { start, accept }
            }
            Join(a, b) | Product(a, b) => {
                let kind = if matches!(x, Join(..)) {
                    Boundary::Adjacent
                } else {
                    Boundary::Detached
                };
                let a = self.fragment(a, depth + 1);
                let b = self.fragment(b, depth + 1);
                self.epsilon(a.accept, b.start, Some((kind, depth)));
                Fragment {
                    start: a.start,
                    accept: b.accept,
                }
            }
            Star(a) => {
                let start = self.state();
                let inner = self.fragment(a, depth + 1);
                let accept = self.state();
                self.epsilon(start, inner.start, None);
                self.epsilon(inner.accept, inner.start, Some((Boundary::Adjacent, depth)));
                self.epsilon(inner.accept, accept, None);
                self.epsilon(start, accept, None);
                Fragment { start, accept }
            }
            Plus(_) | Optional(_) | Repeat(..) => self.fragment(&x.desugar(), depth),
        }
    }
}

impl Nfa {
    /// Compiles an expression. Sugar is expanded first, so a desugared input
    /// is not required.
    pub fn compile(x: &PathExpr) -> Nfa {
        let mut b = Builder::default();
        let root = b.fragment(x, 0);

        // A state is accepting when it reaches the final state through epsilon
        // moves alone; this marks the ends of union arms as accepting.
        let mut accepting = alloc::vec![false; b.state_count];
        accepting[root.accept] = true;
        let mut stack = alloc::vec![root.accept];
        while let Some(s) = stack.pop() {
            for mv in b.epsilon_moves.iter().filter(|m| m.to == s) {
                if !accepting[mv.from] {
                    accepting[mv.from] = true;
                    stack.push(mv.from);
                }
            }
        }

        Nfa {
            state_count: b.state_count,
            start: root.start,
            accepting,
            epsilon_moves: b.epsilon_moves,
            atom_moves: b.atom_moves,
            max_path_len: x.max_atoms(),
        }
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    pub fn is_accepting(&self, s: StateId) -> bool {
        self.accepting[s]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = StateId> + '_ {
        self.accepting
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(s, _)| s)
    }

    pub fn epsilon_moves(&self) -> &[EpsilonMove] {
        &self.epsilon_moves
    }

    pub fn atom_moves(&self) -> &[AtomMove] {
        &self.atom_moves
    }

    /// Longest path the automaton can accept, or `None` if it contains a loop.
    pub fn max_path_len(&self) -> Option<usize> {
        self.max_path_len
    }

    /// Epsilon moves grouped by source state.
    pub(crate) fn epsilon_table(&self) -> Vec<Vec<&EpsilonMove>> {
        let mut t = alloc::vec![Vec::new(); self.state_count];
        for m in &self.epsilon_moves {
            t[m.from].push(m);
        }
        t
    }

    /// Indices into [`Nfa::atom_moves`] grouped by source state.
    pub(crate) fn atom_table(&self) -> Vec<Vec<usize>> {
        let mut t = alloc::vec![Vec::new(); self.state_count];
        for (n, m) in self.atom_moves.iter().enumerate() {
            t[m.from].push(n);
        }
        t
    }
}
