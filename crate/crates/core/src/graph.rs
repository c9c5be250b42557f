//! Graph, edge and path model.
//!
//! Vertex and label tokens are interned into dense handles when a [`Graph`] is
//! built. Handles are assigned in sorted token order, so comparing handles
//! compares tokens, and the derived ordering on [`Edge`] and [`Path`] is the
//! canonical ordering used for all output: lexicographic over the flattened
//! `(tail, label, head)` token sequence, with a prefix sorting first.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// Handle of a vertex in a specific [`Graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(u32);

/// Handle of an edge label in a specific [`Graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelId(u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl LabelId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A labeled, directed edge `(tail, label, head)`. Self-loops are allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub tail: VertexId,
    pub label: LabelId,
    pub head: VertexId,
}

impl Edge {
    pub fn new(tail: VertexId, label: LabelId, head: VertexId) -> Self {
        Edge { tail, label, head }
    }

    /// The label projection `ω`.
    pub fn label(&self) -> LabelId {
        self.label
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathError {
    /// Edge positions are 1-indexed; `index` was 0 or past the end.
    IndexOutOfRange { index: usize, len: usize },
    /// Tail and head are not defined on the empty path.
    UndefinedOnEpsilon,
}

impl fmt::Display for PathError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathError::IndexOutOfRange { index, len } => {
                write!(
                    f,
                    "edge index {index} out of range for path of length {len}"
                )
            }
            PathError::UndefinedOnEpsilon => f.write_str("operation undefined on the empty path"),
        }
    }
}

impl core::error::Error for PathError {}

/// A finite sequence of edges. The empty path is `ε`.
///
/// Paths may repeat edges and need not be joint.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path(Vec<Edge>);

impl Path {
    pub fn epsilon() -> Self {
        Path(Vec::new())
    }

    pub fn from_edges(edges: impl IntoIterator<Item = Edge>) -> Self {
        Path(edges.into_iter().collect())
    }

    pub fn edges(&self) -> &[Edge] {
        &self.0
    }

    pub fn is_epsilon(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of edges, `‖a‖`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation `a ∘ b`. No adjacency requirement.
    pub fn concat(&self, other: &Path) -> Path {
        let mut edges = Vec::with_capacity(self.0.len() + other.0.len());
        edges.extend_from_slice(&self.0);
        edges.extend_from_slice(&other.0);
        Path(edges)
    }

    /// Appends a single edge in place.
    pub fn push(&mut self, edge: Edge) {
        self.0.push(edge);
    }

    /// The 1-indexed edge projection `σ(a, n)`.
    pub fn edge_at(&self, n: usize) -> Result<Edge, PathError> {
        if n == 0 || n > self.0.len() {
            return Err(PathError::IndexOutOfRange {
                index: n,
                len: self.0.len(),
            });
        }
        Ok(self.0[n - 1])
    }

    /// First vertex of the path, `γ⁻`.
    pub fn tail(&self) -> Result<VertexId, PathError> {
        self.0
            .first()
            .map(|e| e.tail)
            .ok_or(PathError::UndefinedOnEpsilon)
    }

    /// Last vertex of the path, `γ⁺`.
    pub fn head(&self) -> Result<VertexId, PathError> {
        self.0
            .last()
            .map(|e| e.head)
            .ok_or(PathError::UndefinedOnEpsilon)
    }

    /// The path label `ω′`: the labels of the edges in order.
    pub fn path_label(&self) -> Vec<LabelId> {
        self.0.iter().map(Edge::label).collect()
    }

    /// True when every consecutive pair of edges shares its join vertex.
    /// Paths of length 0 and 1 are joint.
    pub fn is_joint(&self) -> bool {
        self.0.windows(2).all(|w| w[0].head == w[1].tail)
    }
}

impl From<Edge> for Path {
    fn from(edge: Edge) -> Self {
        Path(alloc::vec![edge])
    }
}

impl FromIterator<Edge> for Path {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        Path::from_edges(iter)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// Vertex and label tokens must be non-empty.
    EmptyToken,
    /// `_` is reserved for the wildcard.
    ReservedToken,
    UnknownVertex(String),
    UnknownLabel(String),
    /// A path or lookup named an edge that is not in `E`.
    UnknownEdge {
        tail: String,
        label: String,
        head: String,
    },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::EmptyToken => f.write_str("empty vertex or label token"),
            GraphError::ReservedToken => f.write_str("`_` is reserved for the wildcard"),
            GraphError::UnknownVertex(v) => write!(f, "unknown vertex `{v}`"),
            GraphError::UnknownLabel(l) => write!(f, "unknown label `{l}`"),
            GraphError::UnknownEdge { tail, label, head } => {
                write!(f, "edge ({tail},{label},{head}) is not in the graph")
            }
        }
    }
}

impl core::error::Error for GraphError {}

fn check_token(token: &str) -> Result<(), GraphError> {
    if token.is_empty() {
        Err(GraphError::EmptyToken)
    } else if token == "_" {
        Err(GraphError::ReservedToken)
    } else {
        Ok(())
    }
}

/// Collects vertices, labels and edges by token, then interns them.
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    vertices: BTreeSet<String>,
    labels: BTreeSet<String>,
    edges: BTreeSet<(String, String, String)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, vertex: &str) -> Result<&mut Self, GraphError> {
        check_token(vertex)?;
        self.vertices.insert(vertex.to_string());
        Ok(self)
    }

    /// Declares a label even if no edge carries it.
    pub fn add_label(&mut self, label: &str) -> Result<&mut Self, GraphError> {
        check_token(label)?;
        self.labels.insert(label.to_string());
        Ok(self)
    }

    /// Adds `(tail, label, head)`, declaring its endpoints and label.
    /// Re-adding an existing edge is a no-op.
    pub fn add_edge(
        &mut self,
        tail: &str,
        label: &str,
        head: &str,
    ) -> Result<&mut Self, GraphError> {
        self.add_vertex(tail)?;
        self.add_vertex(head)?;
        self.add_label(label)?;
        self.edges
            .insert((tail.to_string(), label.to_string(), head.to_string()));
        Ok(self)
    }

    pub fn build(self) -> Graph {
        let vertices: Vec<String> = self.vertices.into_iter().collect();
        let labels: Vec<String> = self.labels.into_iter().collect();
        let vid =
            |t: &str| VertexId(vertices.binary_search_by(|v| v.as_str().cmp(t)).unwrap() as u32);
        let lid = |t: &str| LabelId(labels.binary_search_by(|l| l.as_str().cmp(t)).unwrap() as u32);

        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|(t, l, h)| Edge::new(vid(t), lid(l), vid(h)))
            .collect();
        edges.sort_unstable();

        let mut outgoing = alloc::vec![Vec::new(); vertices.len()];
        let mut incoming = alloc::vec![Vec::new(); vertices.len()];
        let mut labeled = alloc::vec![Vec::new(); labels.len()];
        for &e in &edges {
            outgoing[e.tail.index()].push(e);
            incoming[e.head.index()].push(e);
            labeled[e.label.index()].push(e);
        }

        Graph {
            vertices,
            labels,
            edges,
            outgoing,
            incoming,
            labeled,
        }
    }
}

/// An immutable multi-relational graph `G = (V, E)` with `E ⊆ V × Ω × V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    labels: Vec<String>,
    edges: Vec<Edge>,
    outgoing: Vec<Vec<Edge>>,
    incoming: Vec<Vec<Edge>>,
    labeled: Vec<Vec<Edge>>,
}

impl Graph {
    pub fn builder() -> GraphBuilder {
        GraphBuilder::new()
    }

    /// Builds a graph from `(tail, label, head)` token triples.
    pub fn from_triples<'a, I>(triples: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (&'a str, &'a str, &'a str)>,
    {
        let mut b = GraphBuilder::new();
        for (t, l, h) in triples {
            b.add_edge(t, l, h)?;
        }
        Ok(b.build())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn label_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + '_ {
        (0..self.vertices.len() as u32).map(VertexId)
    }

    pub fn labels(&self) -> impl ExactSizeIterator<Item = LabelId> + '_ {
        (0..self.labels.len() as u32).map(LabelId)
    }

    /// All edges in canonical order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex(&self, token: &str) -> Option<VertexId> {
        self.vertices
            .binary_search_by(|v| v.as_str().cmp(token))
            .ok()
            .map(|i| VertexId(i as u32))
    }

    pub fn label(&self, token: &str) -> Option<LabelId> {
        self.labels
            .binary_search_by(|l| l.as_str().cmp(token))
            .ok()
            .map(|i| LabelId(i as u32))
    }

    pub fn try_vertex(&self, token: &str) -> Result<VertexId, GraphError> {
        self.vertex(token)
            .ok_or_else(|| GraphError::UnknownVertex(token.to_string()))
    }

    pub fn try_label(&self, token: &str) -> Result<LabelId, GraphError> {
        self.label(token)
            .ok_or_else(|| GraphError::UnknownLabel(token.to_string()))
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.index()]
    }

    pub fn label_name(&self, l: LabelId) -> &str {
        &self.labels[l.index()]
    }

    pub fn contains_edge(&self, edge: &Edge) -> bool {
        self.edges.binary_search(edge).is_ok()
    }

    /// Looks up the edge `(tail, label, head)` by tokens.
    pub fn edge(&self, tail: &str, label: &str, head: &str) -> Result<Edge, GraphError> {
        let unknown = || GraphError::UnknownEdge {
            tail: tail.to_string(),
            label: label.to_string(),
            head: head.to_string(),
        };
        let e = Edge::new(
            self.vertex(tail).ok_or_else(unknown)?,
            self.label(label).ok_or_else(unknown)?,
            self.vertex(head).ok_or_else(unknown)?,
        );
        if self.contains_edge(&e) {
            Ok(e)
        } else {
            Err(unknown())
        }
    }

    /// Builds a path from token triples, each of which must be an edge of the graph.
    pub fn path<'a, I>(&self, triples: I) -> Result<Path, GraphError>
    where
        I: IntoIterator<Item = (&'a str, &'a str, &'a str)>,
    {
        triples
            .into_iter()
            .map(|(t, l, h)| self.edge(t, l, h))
            .collect()
    }

    pub fn outgoing(&self, v: VertexId) -> &[Edge] {
        &self.outgoing[v.index()]
    }

    pub fn incoming(&self, v: VertexId) -> &[Edge] {
        &self.incoming[v.index()]
    }

    pub fn labeled(&self, l: LabelId) -> &[Edge] {
        &self.labeled[l.index()]
    }

    /// Renders a path as `(t,l,h)(t,l,h)…`; `ε` renders as `e`.
    pub fn display_path<'a>(&'a self, path: &'a Path) -> DisplayPath<'a> {
        DisplayPath { graph: self, path }
    }
}

pub struct DisplayPath<'a> {
    graph: &'a Graph,
    path: &'a Path,
}

impl fmt::Display for DisplayPath<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_epsilon() {
            return f.write_str("e");
        }
        for e in self.path.edges() {
            write!(
                f,
                "({},{},{})",
                self.graph.vertex_name(e.tail),
                self.graph.label_name(e.label),
                self.graph.vertex_name(e.head)
            )?;
        }
        Ok(())
    }
}
