//! Path sets and the set-level operations over them: union, concatenative
//! join, concatenative product, pattern-based edge selection and the basic
//! traversal idioms (complete, source, destination, labeled).

use alloc::collections::{btree_set, BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Edge, Graph, GraphError, LabelId, Path, VertexId};

/// A finite, duplicate-free set of paths iterated in canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathSet(BTreeSet<Path>);

impl PathSet {
    /// The empty set `∅`.
    pub fn new() -> Self {
        PathSet(BTreeSet::new())
    }

    /// `{ε}`, the two-sided identity of [`PathSet::concat_join`].
    pub fn epsilon() -> Self {
        PathSet(BTreeSet::from([Path::epsilon()]))
    }

    /// Each edge as a length-1 path.
    pub fn from_edges<'a>(edges: impl IntoIterator<Item = &'a Edge>) -> Self {
        edges.into_iter().map(|&e| Path::from(e)).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, path: &Path) -> bool {
        self.0.contains(path)
    }

    pub fn insert(&mut self, path: Path) -> bool {
        self.0.insert(path)
    }

    pub fn iter(&self) -> btree_set::Iter<'_, Path> {
        self.0.iter()
    }

    pub fn is_subset(&self, other: &PathSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Moves every path of `other` into `self`.
    pub fn absorb(&mut self, other: PathSet) {
        let mut other = other.0;
        self.0.append(&mut other);
    }

    /// Paths of `self` that are not in `other`.
    pub fn difference(&self, other: &PathSet) -> PathSet {
        PathSet(self.0.difference(&other.0).cloned().collect())
    }

    /// Standard set union `A ∪ B`.
    pub fn union(&self, other: &PathSet) -> PathSet {
        PathSet(self.0.union(&other.0).cloned().collect())
    }

    /// Concatenative join `A ⋈∘ B`: every `a ∘ b` where `a` or `b` is `ε`, or
    /// the head of `a` equals the tail of `b`.
    pub fn concat_join(&self, other: &PathSet) -> PathSet {
        let eps = Path::epsilon();
        let mut out = BTreeSet::new();
        if self.contains(&eps) {
            out.extend(other.iter().cloned());
        }
        if other.contains(&eps) {
            out.extend(self.iter().cloned());
        }

        // Index the smaller operand by its join vertex.
        if self.len() <= other.len() {
            let mut by_head: BTreeMap<VertexId, Vec<&Path>> = BTreeMap::new();
            for a in self.iter() {
                if let Ok(h) = a.head() {
                    by_head.entry(h).or_default().push(a);
                }
            }
            for b in other.iter() {
                let Ok(t) = b.tail() else { continue };
                for a in by_head.get(&t).into_iter().flatten() {
                    out.insert(a.concat(b));
                }
            }
        } else {
            let mut by_tail: BTreeMap<VertexId, Vec<&Path>> = BTreeMap::new();
            for b in other.iter() {
                if let Ok(t) = b.tail() {
                    by_tail.entry(t).or_default().push(b);
                }
            }
            for a in self.iter() {
                let Ok(h) = a.head() else { continue };
                for b in by_tail.get(&h).into_iter().flatten() {
                    out.insert(a.concat(b));
                }
            }
        }
        PathSet(out)
    }

    /// Concatenative product `A ×∘ B`: every `a ∘ b`, joint or not.
    pub fn concat_product(&self, other: &PathSet) -> PathSet {
        let mut out = BTreeSet::new();
        for a in self.iter() {
            for b in other.iter() {
                out.insert(a.concat(b));
            }
        }
        PathSet(out)
    }
}

impl FromIterator<Path> for PathSet {
    fn from_iter<I: IntoIterator<Item = Path>>(iter: I) -> Self {
        PathSet(iter.into_iter().collect())
    }
}

impl Extend<Path> for PathSet {
    fn extend<I: IntoIterator<Item = Path>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl IntoIterator for PathSet {
    type Item = Path;
    type IntoIter = btree_set::IntoIter<Path>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a PathSet {
    type Item = &'a Path;
    type IntoIter = btree_set::Iter<'a, Path>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// A set of handles with a polarity. A complemented set is taken relative to
/// whatever graph it is evaluated against, so it is never materialized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFilter<T: Ord> {
    members: BTreeSet<T>,
    complemented: bool,
}

pub type VertexSet = SetFilter<VertexId>;
pub type LabelSet = SetFilter<LabelId>;

impl<T: Ord + Copy> SetFilter<T> {
    pub fn of(members: impl IntoIterator<Item = T>) -> Self {
        SetFilter {
            members: members.into_iter().collect(),
            complemented: false,
        }
    }

    /// The empty selection.
    pub fn none() -> Self {
        Self::of([])
    }

    /// Everything: the complement of the empty selection.
    pub fn all() -> Self {
        Self::none().complement()
    }

    pub fn complement(mut self) -> Self {
        self.complemented = !self.complemented;
        self
    }

    pub fn is_complemented(&self) -> bool {
        self.complemented
    }

    pub fn members(&self) -> impl Iterator<Item = T> + '_ {
        self.members.iter().copied()
    }

    pub fn contains(&self, x: T) -> bool {
        self.members.contains(&x) != self.complemented
    }

    /// The single member of a non-complemented singleton.
    fn single(&self) -> Option<T> {
        match (self.complemented, self.members.len()) {
            (false, 1) => self.members.first().copied(),
            _ => None,
        }
    }
}

/// One position of an [`EdgePattern`], referring to vertices or labels by token.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PartPattern {
    /// `_`
    Any,
    /// `x`
    Exact(String),
    /// `!x` or `!{x,y}`
    Not(BTreeSet<String>),
}

impl PartPattern {
    pub fn exact(token: impl Into<String>) -> Self {
        PartPattern::Exact(token.into())
    }

    pub fn not<S: Into<String>>(tokens: impl IntoIterator<Item = S>) -> Self {
        PartPattern::Not(tokens.into_iter().map(Into::into).collect())
    }

    fn resolve<T: Ord + Copy>(
        &self,
        lookup: impl Fn(&str) -> Result<T, GraphError>,
    ) -> Result<SetFilter<T>, GraphError> {
        Ok(match self {
            PartPattern::Any => SetFilter::all(),
            PartPattern::Exact(t) => SetFilter::of([lookup(t)?]),
            PartPattern::Not(ts) => ts
                .iter()
                .map(|t| lookup(t))
                .collect::<Result<Vec<_>, _>>()
                .map(|v| SetFilter::of(v).complement())?,
        })
    }
}

impl fmt::Display for PartPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartPattern::Any => f.write_str("_"),
            PartPattern::Exact(t) => f.write_str(t),
            PartPattern::Not(ts) if ts.len() == 1 => write!(f, "!{}", ts.first().unwrap()),
            PartPattern::Not(ts) => {
                f.write_str("!{")?;
                for (n, t) in ts.iter().enumerate() {
                    if n > 0 {
                        f.write_str(",")?;
                    }
                    f.write_str(t)?;
                }
                f.write_str("}")
            }
        }
    }
}

/// A per-position constraint `[tail, label, head]` selecting a subset of `E`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgePattern {
    pub tail: PartPattern,
    pub label: PartPattern,
    pub head: PartPattern,
}

impl EdgePattern {
    pub fn new(tail: PartPattern, label: PartPattern, head: PartPattern) -> Self {
        EdgePattern { tail, label, head }
    }

    /// `[_,_,_]`, which denotes all of `E`.
    pub fn any() -> Self {
        Self::new(PartPattern::Any, PartPattern::Any, PartPattern::Any)
    }

    /// Resolves the tokens against `graph`. Every named vertex or label,
    /// including those inside complements, must exist.
    pub fn resolve(&self, graph: &Graph) -> Result<EdgeFilter, GraphError> {
        Ok(EdgeFilter {
            tail: self.tail.resolve(|t| graph.try_vertex(t))?,
            label: self.label.resolve(|t| graph.try_label(t))?,
            head: self.head.resolve(|t| graph.try_vertex(t))?,
        })
    }
}

impl fmt::Display for EdgePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.tail, self.label, self.head)
    }
}

/// An [`EdgePattern`] bound to the handles of one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeFilter {
    pub tail: VertexSet,
    pub label: LabelSet,
    pub head: VertexSet,
}

impl EdgeFilter {
    pub fn matches(&self, e: &Edge) -> bool {
        self.tail.contains(e.tail) && self.label.contains(e.label) && self.head.contains(e.head)
    }

    /// The matching edges of `graph`, using its adjacency indexes when a
    /// position is exact.
    pub fn select<'a>(&'a self, graph: &'a Graph) -> impl Iterator<Item = &'a Edge> + 'a {
        let candidates: &'a [Edge] = if let Some(v) = self.tail.single() {
            graph.outgoing(v)
        } else if let Some(v) = self.head.single() {
            graph.incoming(v)
        } else if let Some(l) = self.label.single() {
            graph.labeled(l)
        } else {
            graph.edges()
        };
        candidates.iter().filter(move |e| self.matches(e))
    }
}

/// All edges of `graph` matching `pattern`, as length-1 paths.
pub fn match_edges(graph: &Graph, pattern: &EdgePattern) -> Result<PathSet, GraphError> {
    let filter = pattern.resolve(graph)?;
    Ok(PathSet::from_edges(filter.select(graph)))
}

/// `E` as a path set.
pub fn edge_set(graph: &Graph) -> PathSet {
    PathSet::from_edges(graph.edges())
}

/// Edges whose tail is in `sources`.
pub fn source_edges(graph: &Graph, sources: &VertexSet) -> PathSet {
    PathSet::from_edges(graph.edges().iter().filter(|e| sources.contains(e.tail)))
}

/// Edges whose head is in `destinations`.
pub fn dest_edges(graph: &Graph, destinations: &VertexSet) -> PathSet {
    PathSet::from_edges(
        graph
            .edges()
            .iter()
            .filter(|e| destinations.contains(e.head)),
    )
}

/// Edges whose label is in `labels`.
pub fn labeled_edges(graph: &Graph, labels: &LabelSet) -> PathSet {
    PathSet::from_edges(graph.edges().iter().filter(|e| labels.contains(e.label)))
}

/// `E ⋈∘ … ⋈∘ E` with `n` factors: every joint path of length `n`.
/// `n = 0` yields `{ε}`.
pub fn complete_paths(graph: &Graph, n: usize) -> PathSet {
    let e = edge_set(graph);
    let mut acc = PathSet::epsilon();
    for _ in 0..n {
        acc = acc.concat_join(&e);
        if acc.is_empty() {
            break;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    /// The seven edges used by the worked join example.
    pub(crate) fn worked_graph() -> Graph {
        Graph::from_triples([
            ("i", "alpha", "j"),
            ("j", "beta", "k"),
            ("k", "alpha", "j"),
            ("j", "beta", "j"),
            ("j", "beta", "i"),
            ("i", "alpha", "k"),
            ("i", "beta", "k"),
        ])
        .unwrap()
    }

    fn set(g: &Graph, paths: &[&[(&str, &str, &str)]]) -> PathSet {
        paths
            .iter()
            .map(|p| g.path(p.iter().copied()).unwrap())
            .collect()
    }

    fn render(g: &Graph, s: &PathSet) -> Vec<String> {
        s.iter().map(|p| g.display_path(p).to_string()).collect()
    }

    fn worked_operands(g: &Graph) -> (PathSet, PathSet) {
        let a = set(
            g,
            &[
                &[("i", "alpha", "j")],
                &[("j", "beta", "k"), ("k", "alpha", "j")],
            ],
        );
        let b = set(
            g,
            &[
                &[("j", "beta", "j")],
                &[("j", "beta", "i"), ("i", "alpha", "k")],
                &[("i", "beta", "k")],
            ],
        );
        (a, b)
    }

    #[test]
    fn worked_join_example() {
        let g = worked_graph();
        let (a, b) = worked_operands(&g);
        assert_eq!(
            render(&g, &a.concat_join(&b)),
            [
                "(i,alpha,j)(j,beta,i)(i,alpha,k)",
                "(i,alpha,j)(j,beta,j)",
                "(j,beta,k)(k,alpha,j)(j,beta,i)(i,alpha,k)",
                "(j,beta,k)(k,alpha,j)(j,beta,j)",
            ]
        );
    }

    #[test]
    fn product_contains_join_on_worked_example() {
        let g = worked_graph();
        let (a, b) = worked_operands(&g);
        let product = a.concat_product(&b);
        assert_eq!(product.len(), 6);
        assert_eq!(a.concat_join(&b).len(), 4);
        assert!(a.concat_join(&b).is_subset(&product));
        assert!(PathSet::new().concat_product(&b).is_empty());
    }

    #[test]
    fn join_identity_and_disjoint_pairs() {
        let g = worked_graph();
        let (a, _) = worked_operands(&g);
        assert_eq!(PathSet::epsilon().concat_join(&a), a);
        assert_eq!(a.concat_join(&PathSet::epsilon()), a);
        let ij = set(&g, &[&[("i", "alpha", "j")]]);
        let ik = set(&g, &[&[("i", "beta", "k")]]);
        assert!(ij.concat_join(&ik).is_empty());
        assert_eq!(
            render(&g, &ij.concat_product(&ik)),
            ["(i,alpha,j)(i,beta,k)"]
        );
    }

    #[test]
    fn union_cases() {
        let g = worked_graph();
        let ij = set(&g, &[&[("i", "alpha", "j")]]);
        let jk = set(&g, &[&[("j", "beta", "k")]]);
        assert_eq!(render(&g, &ij.union(&jk)), ["(i,alpha,j)", "(j,beta,k)"]);
        assert_eq!(ij.union(&PathSet::new()), ij);
        assert_eq!(ij.union(&ij), ij);
    }

    #[test]
    fn match_edges_cases() {
        let g = worked_graph();
        assert_eq!(match_edges(&g, &EdgePattern::any()).unwrap(), edge_set(&g));
        let from_i = EdgePattern::new(PartPattern::exact("i"), PartPattern::Any, PartPattern::Any);
        assert_eq!(
            render(&g, &match_edges(&g, &from_i).unwrap()),
            ["(i,alpha,j)", "(i,alpha,k)", "(i,beta,k)"]
        );
        let exact = |t: &str, l: &str, h: &str| {
            EdgePattern::new(
                PartPattern::exact(t),
                PartPattern::exact(l),
                PartPattern::exact(h),
            )
        };
        assert_eq!(
            render(&g, &match_edges(&g, &exact("j", "beta", "i")).unwrap()),
            ["(j,beta,i)"]
        );
        assert!(match_edges(&g, &exact("k", "beta", "i"))
            .unwrap()
            .is_empty());
        assert_eq!(
            match_edges(&g, &exact("q", "beta", "i")),
            Err(GraphError::UnknownVertex("q".into()))
        );
        assert_eq!(
            match_edges(&g, &exact("i", "gamma", "i")),
            Err(GraphError::UnknownLabel("gamma".into()))
        );
        let not_j = EdgePattern::new(
            PartPattern::Any,
            PartPattern::not(["beta"]),
            PartPattern::not(["j", "i"]),
        );
        assert_eq!(
            render(&g, &match_edges(&g, &not_j).unwrap()),
            ["(i,alpha,k)"]
        );
    }

    #[test]
    fn source_dest_labeled() {
        let g = worked_graph();
        let e = edge_set(&g);
        let v = VertexSet::of(g.vertices());
        assert_eq!(source_edges(&g, &v), e);
        assert_eq!(dest_edges(&g, &v), e);
        assert_eq!(labeled_edges(&g, &LabelSet::of(g.labels())), e);
        assert_eq!(source_edges(&g, &VertexSet::all()), e);
        assert!(source_edges(&g, &VertexSet::none()).is_empty());
        assert!(dest_edges(&g, &VertexSet::none()).is_empty());
        assert!(labeled_edges(&g, &LabelSet::none()).is_empty());

        let i = g.vertex("i").unwrap();
        let not_i = source_edges(&g, &VertexSet::of([i]).complement());
        assert_eq!(not_i.len(), 4);
        assert!(not_i.iter().all(|p| p.tail().unwrap() != i));

        let k = g.vertex("k").unwrap();
        assert_eq!(
            render(&g, &dest_edges(&g, &VertexSet::of([k]))),
            ["(i,alpha,k)", "(i,beta,k)", "(j,beta,k)"]
        );
        let alpha = g.label("alpha").unwrap();
        assert_eq!(
            render(&g, &labeled_edges(&g, &LabelSet::of([alpha]))),
            ["(i,alpha,j)", "(i,alpha,k)", "(k,alpha,j)"]
        );
    }

    #[test]
    fn complete_paths_cases() {
        let g = worked_graph();
        assert_eq!(complete_paths(&g, 1), edge_set(&g));
        let line = Graph::from_triples([("i", "alpha", "j"), ("j", "beta", "k")]).unwrap();
        assert_eq!(
            render(&line, &complete_paths(&line, 2)),
            ["(i,alpha,j)(j,beta,k)"]
        );
        let cycle = Graph::from_triples([
            ("i", "alpha", "j"),
            ("j", "alpha", "k"),
            ("k", "alpha", "i"),
        ])
        .unwrap();
        assert_eq!(
            render(&cycle, &complete_paths(&cycle, 3)),
            [
                "(i,alpha,j)(j,alpha,k)(k,alpha,i)",
                "(j,alpha,k)(k,alpha,i)(i,alpha,j)",
                "(k,alpha,i)(i,alpha,j)(j,alpha,k)",
            ]
        );
        assert_eq!(complete_paths(&g, 0), PathSet::epsilon());
    }

    #[test]
    fn pattern_display() {
        let p = EdgePattern::new(
            PartPattern::exact("i"),
            PartPattern::not(["a"]),
            PartPattern::not(["x", "y"]),
        );
        assert_eq!(p.to_string(), "[i,!a,!{x,y}]");
    }
}
