//! Running compiled expressions against a graph: recognition, bounded
//! generation and projection to single-relational edge sets.
//!
//! Generation follows the single-stack procedure: every branch starts from
//! `{ε}`, and each atom transition joins the branch's current path set on the
//! right with the atom's edge set. Branches are grouped by configuration
//! (automaton state plus pending boundary) and explored one path length at a
//! time, so a configuration holds one path set per length and identical
//! frontiers are never derived twice.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{EdgeFilter, PathSet};
use crate::graph::{Edge, Graph, GraphError, Path, VertexId};
use crate::regex::{Boundary, BoundaryTag, Nfa, StateId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EngineError {
    Graph(GraphError),
    /// The expression has a star and no length bound was given.
    Unbounded,
    /// `ε` has no endpoints to project.
    EpsilonInInput,
}

impl From<GraphError> for EngineError {
    fn from(e: GraphError) -> Self {
        EngineError::Graph(e)
    }
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::Graph(e) => e.fmt(f),
            EngineError::Unbounded => {
                f.write_str("expression contains a star; a maximum path length is required")
            }
            EngineError::EpsilonInInput => f.write_str("cannot project the empty path"),
        }
    }
}

impl core::error::Error for EngineError {}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GenerationConfig {
    /// Longest path to emit. Required for starred expressions; otherwise it
    /// defaults to the longest path the expression can denote.
    pub max_len: Option<usize>,
}

impl GenerationConfig {
    pub fn bounded(max_len: usize) -> Self {
        GenerationConfig {
            max_len: Some(max_len),
        }
    }

    pub fn unbounded() -> Self {
        GenerationConfig { max_len: None }
    }

    fn resolve(&self, nfa: &Nfa) -> Result<usize, EngineError> {
        self.max_len
            .or_else(|| nfa.max_path_len())
            .ok_or(EngineError::Unbounded)
    }
}

type Pending = Option<BoundaryTag>;

/// The boundary governing the next consumed edge. A run with no recorded
/// boundary is treated as adjacent.
fn requires_adjacency(pending: Pending) -> bool {
    pending.is_none_or(|t| t.kind == Boundary::Adjacent)
}

/// The automaton bound to one graph.
struct Bound<'a> {
    filters: Vec<EdgeFilter>,
    epsilon: Vec<Vec<&'a crate::regex::EpsilonMove>>,
    atoms: Vec<Vec<usize>>,
}

impl<'a> Bound<'a> {
    fn new(graph: &Graph, nfa: &'a Nfa) -> Result<Self, GraphError> {
        let filters = nfa
            .atom_moves()
            .iter()
            .map(|m| m.pattern.resolve(graph))
            .collect::<Result<_, _>>()?;
        Ok(Bound {
            filters,
            epsilon: nfa.epsilon_table(),
            atoms: nfa.atom_table(),
        })
    }

    fn closure(&self, configs: &mut BTreeSet<(StateId, Pending)>) {
        let mut stack: Vec<_> = configs.iter().copied().collect();
        while let Some((s, p)) = stack.pop() {
            for m in &self.epsilon[s] {
                let next = (m.to, BoundaryTag::merge(p, m.boundary));
                if configs.insert(next) {
                    stack.push(next);
                }
            }
        }
    }
}

/// Decides whether the automaton accepts `path`. Every edge of the path must
/// belong to the graph.
pub fn recognize(graph: &Graph, nfa: &Nfa, path: &Path) -> Result<bool, EngineError> {
    if let Some(e) = path.edges().iter().find(|e| !graph.contains_edge(e)) {
        return Err(GraphError::UnknownEdge {
            tail: graph.vertex_name(e.tail).to_string(),
            label: graph.label_name(e.label).to_string(),
            head: graph.vertex_name(e.head).to_string(),
        }
        .into());
    }
    let bound = Bound::new(graph, nfa)?;

    let mut configs = BTreeSet::from([(nfa.start(), None)]);
    bound.closure(&mut configs);
    let mut previous: Option<&Edge> = None;
    for edge in path.edges() {
        let mut next = BTreeSet::new();
        for &(s, pending) in &configs {
            let adjacent_ok = match previous {
                Some(prev) if requires_adjacency(pending) => prev.head == edge.tail,
                _ => true,
            };
            if !adjacent_ok {
                continue;
            }
            for &m in &bound.atoms[s] {
                if bound.filters[m].matches(edge) {
                    next.insert((nfa.atom_moves()[m].to, None));
                }
            }
        }
        if next.is_empty() {
            return Ok(false);
        }
        bound.closure(&mut next);
        configs = next;
        previous = Some(edge);
    }
    Ok(configs.iter().any(|&(s, _)| nfa.is_accepting(s)))
}

/// Every path of length at most the configured bound that the automaton
/// accepts over `graph`.
pub fn generate(
    graph: &Graph,
    nfa: &Nfa,
    config: &GenerationConfig,
) -> Result<PathSet, EngineError> {
    let max_len = config.resolve(nfa)?;
    let bound = Bound::new(graph, nfa)?;
    let atom_sets: Vec<PathSet> = bound
        .filters
        .iter()
        .map(|f| PathSet::from_edges(f.select(graph)))
        .collect();

    let mut result = PathSet::new();
    let mut layer: BTreeMap<(StateId, Pending), PathSet> =
        BTreeMap::from([((nfa.start(), None), PathSet::epsilon())]);

    for len in 0..=max_len {
        epsilon_closure(&bound, &mut layer);

        for (&(s, _), paths) in &layer {
            if nfa.is_accepting(s) {
                result.extend(paths.iter().cloned());
            }
        }
        if len == max_len {
            break;
        }

        let mut next: BTreeMap<(StateId, Pending), PathSet> = BTreeMap::new();
        for (&(s, pending), frontier) in &layer {
            for &m in &bound.atoms[s] {
                let edges = &atom_sets[m];
                if edges.is_empty() {
                    continue;
                }
                let extended = if requires_adjacency(pending) {
                    frontier.concat_join(edges)
                } else {
                    frontier.concat_product(edges)
                };
                if !extended.is_empty() {
                    next.entry((nfa.atom_moves()[m].to, None))
                        .or_default()
                        .absorb(extended);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layer = next;
    }
    Ok(result)
}

/// Pushes path sets along epsilon moves until no configuration grows.
fn epsilon_closure(bound: &Bound<'_>, layer: &mut BTreeMap<(StateId, Pending), PathSet>) {
    let mut work: Vec<((StateId, Pending), PathSet)> =
        layer.iter().map(|(&k, v)| (k, v.clone())).collect();
    while let Some(((s, pending), delta)) = work.pop() {
        for m in &bound.epsilon[s] {
            let key = (m.to, BoundaryTag::merge(pending, m.boundary));
            let entry = layer.entry(key).or_default();
            let fresh = delta.difference(entry);
            if !fresh.is_empty() {
                entry.extend(fresh.iter().cloned());
                work.push((key, fresh));
            }
        }
    }
}

/// A single-relational edge set of `(tail, head)` pairs, sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProjectedEdgeSet(BTreeSet<(VertexId, VertexId)>);

impl ProjectedEdgeSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, tail: VertexId, head: VertexId) -> bool {
        self.0.contains(&(tail, head))
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.0.iter().copied()
    }

    /// Token pairs in canonical order.
    pub fn named<'g>(&'g self, graph: &'g Graph) -> impl Iterator<Item = (&'g str, &'g str)> + 'g {
        self.iter()
            .map(|(t, h)| (graph.vertex_name(t), graph.vertex_name(h)))
    }

    /// Renders one `tail<TAB>head` line per pair.
    pub fn to_tsv(&self, graph: &Graph) -> String {
        let mut out = String::new();
        for (t, h) in self.named(graph) {
            out.push_str(t);
            out.push('\t');
            out.push_str(h);
            out.push('\n');
        }
        out
    }
}

impl FromIterator<(VertexId, VertexId)> for ProjectedEdgeSet {
    fn from_iter<I: IntoIterator<Item = (VertexId, VertexId)>>(iter: I) -> Self {
        ProjectedEdgeSet(iter.into_iter().collect())
    }
}

/// The endpoint pairs `(γ⁻(a), γ⁺(a))` of every path in `paths`.
pub fn project_paths(paths: &PathSet) -> Result<ProjectedEdgeSet, EngineError> {
    paths
        .iter()
        .map(|p| match (p.tail(), p.head()) {
            (Ok(t), Ok(h)) => Ok((t, h)),
            _ => Err(EngineError::EpsilonInInput),
        })
        .collect()
}

/// `E_α`: endpoint pairs of the edges labeled `label`.
pub fn project_label(graph: &Graph, label: &str) -> Result<ProjectedEdgeSet, EngineError> {
    let l = graph.try_label(label)?;
    Ok(graph.labeled(l).iter().map(|e| (e.tail, e.head)).collect())
}
