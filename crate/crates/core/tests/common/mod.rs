//! Test oracles shared by the integration and acceptance suites.
//!
//! Nothing here goes through the automaton or the engine: paths are
//! enumerated with plain loops over `E`, and expressions are evaluated
//! directly with the path-set operations.

#![allow(dead_code)]

use mrgraph_core::algebra::match_edges;
use mrgraph_core::{EdgePattern, Graph, PartPattern, Path, PathExpr, PathSet};
use rand::seq::SliceRandom;
use rand::Rng;

pub const LABELS: [&str; 3] = ["a", "b", "c"];

/// A random graph with up to `max_vertices` vertices `v0…` and up to three
/// labels; each possible triple is an edge with probability `density`. All
/// vertices and labels are declared even when no edge uses them.
pub fn random_graph<R: Rng>(rng: &mut R, max_vertices: usize, density: f64) -> Graph {
    let n = rng.gen_range(1..=max_vertices);
    let labels = &LABELS[..rng.gen_range(1..=LABELS.len())];
    let mut b = Graph::builder();
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    for v in &names {
        b.add_vertex(v).unwrap();
    }
    for l in labels {
        b.add_label(l).unwrap();
    }
    for t in &names {
        for l in labels {
            for h in &names {
                if rng.gen_bool(density) {
                    b.add_edge(t, l, h).unwrap();
                }
            }
        }
    }
    b.build()
}

fn vertex_names(g: &Graph) -> Vec<String> {
    g.vertices().map(|v| g.vertex_name(v).to_string()).collect()
}

fn label_names(g: &Graph) -> Vec<String> {
    g.labels().map(|l| g.label_name(l).to_string()).collect()
}

fn random_part<R: Rng>(rng: &mut R, pool: &[String]) -> PartPattern {
    match rng.gen_range(0..10) {
        0..=4 => PartPattern::Any,
        5..=7 => PartPattern::exact(pool.choose(rng).unwrap().clone()),
        _ => {
            let k = rng.gen_range(1..=pool.len().min(2));
            PartPattern::not(pool.choose_multiple(rng, k).cloned())
        }
    }
}

pub fn random_pattern<R: Rng>(rng: &mut R, g: &Graph) -> EdgePattern {
    let vs = vertex_names(g);
    let ls = label_names(g);
    EdgePattern::new(
        random_part(rng, &vs),
        random_part(rng, &ls),
        random_part(rng, &vs),
    )
}

/// A random expression of depth at most `depth`, possibly with sugar.
pub fn random_expr<R: Rng>(rng: &mut R, g: &Graph, depth: usize, products: bool) -> PathExpr {
    if depth <= 1 {
        return match rng.gen_range(0..12) {
            0 => PathExpr::Empty,
            1 => PathExpr::Epsilon,
            _ => PathExpr::Atom(random_pattern(rng, g)),
        };
    }
    let sub = |rng: &mut R| random_expr(rng, g, depth - 1, products);
    match rng.gen_range(0..11) {
        0 | 1 => PathExpr::Atom(random_pattern(rng, g)),
        2 => PathExpr::union(sub(rng), sub(rng)),
        3 | 4 => PathExpr::join(sub(rng), sub(rng)),
        5 if products => PathExpr::product(sub(rng), sub(rng)),
        5 => PathExpr::join(sub(rng), sub(rng)),
        6 | 7 => PathExpr::star(sub(rng)),
        8 => PathExpr::plus(sub(rng)),
        9 => PathExpr::optional(sub(rng)),
        _ => PathExpr::repeat(sub(rng), rng.gen_range(1..=3)),
    }
}

/// Every edge sequence of length `0..=max_len` whose consecutive edges share
/// their join vertex.
pub fn brute_joint_paths(g: &Graph, max_len: usize) -> Vec<Path> {
    let mut out = vec![Path::epsilon()];
    let mut frontier = vec![Path::epsilon()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            for e in g.edges() {
                let ok = match p.edges().last() {
                    None => true,
                    Some(last) => last.head == e.tail,
                };
                if ok {
                    let mut q = p.clone();
                    q.push(*e);
                    next.push(q);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Every edge sequence of length `0..=max_len`, joint or not.
pub fn brute_all_sequences(g: &Graph, max_len: usize) -> Vec<Path> {
    let mut out = vec![Path::epsilon()];
    let mut frontier = vec![Path::epsilon()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            for e in g.edges() {
                let mut q = p.clone();
                q.push(*e);
                next.push(q);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Brute-force pairwise scan for jointness.
pub fn brute_is_joint(p: &Path) -> bool {
    let edges = p.edges();
    for n in 1..edges.len() {
        if edges[n - 1].head != edges[n].tail {
            return false;
        }
    }
    true
}

fn truncate(s: PathSet, max_len: usize) -> PathSet {
    s.into_iter().filter(|p| p.len() <= max_len).collect()
}

fn star_of(inner: &PathSet, max_len: usize) -> PathSet {
    let mut acc = PathSet::epsilon();
    loop {
        let next = acc.union(&truncate(acc.concat_join(inner), max_len));
        if next == acc {
            return acc;
        }
        acc = next;
    }
}

/// Evaluates an expression as path-set algebra, keeping only paths of length
/// at most `max_len`. `*` is the least fixpoint of `S = {ε} ∪ S ⋈∘ A`.
pub fn reference_eval(x: &PathExpr, g: &Graph, max_len: usize) -> PathSet {
    use PathExpr::*;
    match x {
        Empty => PathSet::new(),
        Epsilon => PathSet::epsilon(),
        Atom(p) => truncate(match_edges(g, p).unwrap(), max_len),
        Union(a, b) => reference_eval(a, g, max_len).union(&reference_eval(b, g, max_len)),
        Join(a, b) => truncate(
            reference_eval(a, g, max_len).concat_join(&reference_eval(b, g, max_len)),
            max_len,
        ),
        Product(a, b) => truncate(
            reference_eval(a, g, max_len).concat_product(&reference_eval(b, g, max_len)),
            max_len,
        ),
        Star(a) => star_of(&reference_eval(a, g, max_len), max_len),
        Plus(a) => {
            let a = reference_eval(a, g, max_len);
            truncate(a.concat_join(&star_of(&a, max_len)), max_len)
        }
        Optional(a) => reference_eval(a, g, max_len).union(&PathSet::epsilon()),
        Repeat(a, n) => {
            let a = reference_eval(a, g, max_len);
            let mut acc = a.clone();
            for _ in 1..*n {
                acc = truncate(acc.concat_join(&a), max_len);
            }
            acc
        }
    }
}

/// A random path set drawn from joint and disjoint sequences over `g`, with
/// `ε` sometimes included.
pub fn random_path_set<R: Rng>(
    rng: &mut R,
    g: &Graph,
    max_paths: usize,
    max_len: usize,
) -> PathSet {
    let mut s = PathSet::new();
    if g.edge_count() == 0 {
        return PathSet::epsilon();
    }
    for _ in 0..rng.gen_range(0..=max_paths) {
        s.insert(random_path(rng, g, max_len));
    }
    if rng.gen_bool(0.2) {
        s.insert(Path::epsilon());
    }
    s
}

/// A random path; joint with probability one half.
pub fn random_path<R: Rng>(rng: &mut R, g: &Graph, max_len: usize) -> Path {
    let len = rng.gen_range(0..=max_len);
    let joint = rng.gen_bool(0.5);
    let mut p = Path::epsilon();
    for _ in 0..len {
        let e = match (joint, p.edges().last()) {
            (true, Some(last)) => {
                let outs = g.outgoing(last.head);
                if outs.is_empty() {
                    break;
                }
                *outs.choose(rng).unwrap()
            }
            _ => *g.edges().choose(rng).unwrap(),
        };
        p.push(e);
    }
    p
}

pub fn render(g: &Graph, s: &PathSet) -> Vec<String> {
    s.iter().map(|p| g.display_path(p).to_string()).collect()
}
