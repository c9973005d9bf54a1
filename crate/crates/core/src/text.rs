//! Line-oriented graph files.
//!
//! ```text
//! # a lollipop
//! a a
//! a b
//! v lonely
//! ```
//!
//! Blank lines and `#` comments are ignored. `v NAME` declares a vertex
//! (needed only for isolated ones); any other line names the two ends of one
//! edge, so repeating a line adds a parallel edge and `a a` is a loop.
//! Because of the declaration syntax an edge cannot start at a vertex
//! literally named `v`.

use std::collections::HashMap;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Edge, Multigraph, VertexId};

pub fn parse_graph(src: &str) -> Result<Multigraph> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut declared: Vec<bool> = Vec::new();
    let mut edges = Vec::new();
    let mut intern = |name: &str, labels: &mut Vec<String>, declared: &mut Vec<bool>| -> usize {
        *index.entry(name.to_string()).or_insert_with(|| {
            labels.push(name.to_string());
            declared.push(false);
            labels.len() - 1
        })
    };
    for (i, raw) in src.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let err = |msg: String| Error::Parse { line: i + 1, msg };
        match tokens.as_slice() {
            [] => {}
            ["v", name] => {
                let before = labels.len();
                let v = intern(name, &mut labels, &mut declared);
                if labels.len() == before || declared[v] {
                    return Err(err(Error::DuplicateVertex(name.to_string()).to_string()));
                }
                declared[v] = true;
            }
            [a, b] => {
                let a = intern(a, &mut labels, &mut declared);
                let b = intern(b, &mut labels, &mut declared);
                edges.push(Edge { a: VertexId(a), b: VertexId(b) });
            }
            _ => return Err(err(format!("expected `A B` or `v NAME`, found {} tokens", tokens.len()))),
        }
    }
    Multigraph::with_labels(labels, edges)
}

pub fn read_graph(path: &Path) -> Result<Multigraph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

fn usable_label(l: &str) -> bool {
    !l.is_empty() && l != "v" && !l.contains('#') && !l.chars().any(char::is_whitespace)
}

/// Text form that [`parse_graph`] reads back to an isomorphic graph.
/// Labels are kept when they are valid tokens, otherwise vertices are
/// written by index.
pub fn to_text(g: &Multigraph) -> String {
    let keep = g.labels().iter().all(|l| usable_label(l))
        && g.labels().len() == g.labels().iter().collect::<std::collections::HashSet<_>>().len();
    let name = |v: VertexId| if keep { g.label(v).to_string() } else { format!("n{}", v.0) };
    let mut out = String::new();
    for v in g.isolated_vertices() {
        out.push_str(&format!("v {}\n", name(v)));
    }
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", name(e.a), name(e.b)));
    }
    out
}
