//! The TAB-separated edge-list format.
//!
//! ```text
//! # comment
//! %vertex lonely
//! i	alpha	j
//! j	beta	k
//! ```
//!
//! Each data line is `tail<TAB>label<TAB>head`. `%vertex <id>` declares a
//! vertex that may have no edges. Blank lines are ignored and duplicate edges
//! collapse.

#![allow(clippy::tabs_in_doc_comments)]

use std::fs;
use std::path::{Path, PathBuf};

use mrgraph_core::{is_ident, Graph, GraphBuilder};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

fn field_error(field: &str) -> String {
    if field.is_empty() {
        "empty field".to_string()
    } else if field == "_" {
        "`_` is reserved for the wildcard".to_string()
    } else {
        format!("invalid identifier `{field}`")
    }
}

/// Parses an edge-list document.
pub fn parse_edge_list(text: &str) -> Result<Graph, LoadError> {
    let mut builder = GraphBuilder::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let err = |message: String| LoadError::Parse { line, message };
        let record = raw.strip_suffix('\r').unwrap_or(raw);
        if record.trim().is_empty() || record.starts_with('#') {
            continue;
        }
        if let Some(rest) = record.strip_prefix('%') {
            let mut words = rest.split_whitespace();
            match (words.next(), words.next(), words.next()) {
                (Some("vertex"), Some(id), None) => {
                    if !is_ident(id) {
                        return Err(err(field_error(id)));
                    }
                    builder.add_vertex(id).map_err(|e| err(e.to_string()))?;
                }
                (Some("vertex"), _, _) => {
                    return Err(err("`%vertex` takes exactly one identifier".into()))
                }
                _ => return Err(err(format!("unknown directive `%{rest}`"))),
            }
            continue;
        }
        let fields: Vec<&str> = record.split('\t').collect();
        if fields.len() != 3 {
            return Err(err(format!(
                "expected 3 TAB-separated fields, found {}",
                fields.len()
            )));
        }
        if let Some(bad) = fields.iter().find(|f| !is_ident(f)) {
            return Err(err(field_error(bad)));
        }
        builder
            .add_edge(fields[0], fields[1], fields[2])
            .map_err(|e| err(e.to_string()))?;
    }
    Ok(builder.build())
}

pub fn load_graph(path: &Path) -> Result<Graph, LoadError> {
    let text = fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_edge_list(&text)
}

/// Serializes a graph: isolated vertices first as `%vertex` records, then one
/// line per edge in canonical order. Labels that no edge carries are not
/// representable and are dropped.
pub fn write_edge_list(graph: &Graph) -> String {
    let mut touched = vec![false; graph.vertex_count()];
    for e in graph.edges() {
        touched[e.tail.index()] = true;
        touched[e.head.index()] = true;
    }
    let mut out = String::new();
    for v in graph.vertices().filter(|v| !touched[v.index()]) {
        out.push_str("%vertex ");
        out.push_str(graph.vertex_name(v));
        out.push('\n');
    }
    for e in graph.edges() {
        out.push_str(graph.vertex_name(e.tail));
        out.push('\t');
        out.push_str(graph.label_name(e.label));
        out.push('\t');
        out.push_str(graph.vertex_name(e.head));
        out.push('\n');
    }
    out
}
