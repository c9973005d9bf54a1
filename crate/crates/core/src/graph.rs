//! Finite multigraphs with loops and parallel edges, viewed as topological
//! graphs: every edge is an arc, a loop is a circle through its vertex.
//!
//! Vertices and edges are addressed by dense indices ([`VertexId`],
//! [`EdgeId`]); every vertex also carries a textual label used by the file
//! format and in reports.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// An edge record. `a == b` encodes a loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub a: VertexId,
    pub b: VertexId,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.a == self.b
    }

    /// The endpoint opposite to `v` (for a loop, `v` itself).
    pub fn other(&self, v: VertexId) -> VertexId {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }

    pub fn touches(&self, v: VertexId) -> bool {
        self.a == v || self.b == v
    }

    /// Endpoints with the smaller index first.
    pub fn ordered(&self) -> (VertexId, VertexId) {
        if self.a <= self.b {
            (self.a, self.b)
        } else {
            (self.b, self.a)
        }
    }
}

/// A validated finite multigraph with at least one edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    labels: Vec<String>,
    edges: Vec<Edge>,
}

impl Multigraph {
    /// Builds a graph from labelled vertices and label pairs. Every label used
    /// by an edge must be declared in `vertices`.
    pub fn build<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.as_ref().to_string(), i).is_some() {
                return Err(Error::DuplicateVertex(v.as_ref().to_string()));
            }
        }
        let mut out = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let lookup = |s: &S| {
                index
                    .get(s.as_ref())
                    .copied()
                    .map(VertexId)
                    .ok_or_else(|| Error::DanglingEndpoint(s.as_ref().to_string()))
            };
            out.push(Edge { a: lookup(a)?, b: lookup(b)? });
        }
        Self::with_labels(vertices.iter().map(|s| s.as_ref().to_string()).collect(), out)
    }

    /// Builds a graph on vertices `0..vertex_count` labelled by their index.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let labels = (0..vertex_count).map(|i| i.to_string()).collect();
        let edges = edges
            .iter()
            .map(|&(a, b)| Edge { a: VertexId(a), b: VertexId(b) })
            .collect();
        Self::with_labels(labels, edges)
    }

    pub(crate) fn with_labels(labels: Vec<String>, edges: Vec<Edge>) -> Result<Self> {
        if edges.is_empty() {
            return Err(Error::NoEdges);
        }
        let mut seen = HashSet::with_capacity(labels.len());
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        for e in &edges {
            for v in [e.a, e.b] {
                if v.0 >= labels.len() {
                    return Err(Error::DanglingEndpoint(v.to_string()));
                }
            }
        }
        Ok(Self { labels, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.labels.len()).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Result<Edge> {
        self.edges.get(e.0).copied().ok_or(Error::UnknownEdge(e.0))
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| l == label).map(VertexId)
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.0 < self.labels.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v.0))
        }
    }

    /// Number of edge-ends at `v`; a loop counts twice.
    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.degrees()[v.0])
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.labels.len()];
        for e in &self.edges {
            deg[e.a.0] += 1;
            deg[e.b.0] += 1;
        }
        deg
    }

    /// Edges incident to `v`, each listed once (loops included once).
    pub fn incident(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(move |(_, e)| e.touches(v))
            .map(|(i, _)| EdgeId(i))
    }

    /// Vertices that carry no edge.
    pub fn isolated_vertices(&self) -> Vec<VertexId> {
        let deg = self.degrees();
        self.vertices().filter(|v| deg[v.0] == 0).collect()
    }

    /// True iff the graph has a single connected component. Isolated vertices
    /// count as components of their own.
    pub fn is_connected(&self) -> bool {
        self.components() == 1
    }

    pub fn components(&self) -> usize {
        let n = self.labels.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut count = n;
        for e in &self.edges {
            let (ra, rb) = (find(&mut parent, e.a.0), find(&mut parent, e.b.0));
            if ra != rb {
                parent[ra] = rb;
                count -= 1;
            }
        }
        count
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Returns a label not yet used by the graph, derived from `base`.
    fn fresh_label(&self, taken: &HashSet<String>, base: &str, counter: &mut usize) -> String {
        loop {
            let cand = format!("{base}.{counter}");
            *counter += 1;
            if !taken.contains(&cand) {
                return cand;
            }
        }
    }

    /// Replaces edge `e` by a path of `k + 1` edges through `k` fresh
    /// degree-2 vertices. The first segment keeps id `e`; the others are
    /// appended. Fresh vertices are returned in order from endpoint `a`.
    pub fn subdivide(&self, e: EdgeId, k: usize) -> Result<(Multigraph, Vec<VertexId>)> {
        let edge = self.edge(e)?;
        if k == 0 {
            return Ok((self.clone(), Vec::new()));
        }
        let mut labels = self.labels.clone();
        let mut edges = self.edges.clone();
        let mut taken: HashSet<String> = labels.iter().cloned().collect();
        let mut counter = 0;
        let base = format!("{}~{}", self.label(edge.a), self.label(edge.b));
        let mut fresh = Vec::with_capacity(k);
        for _ in 0..k {
            let l = self.fresh_label(&taken, &base, &mut counter);
            taken.insert(l.clone());
            fresh.push(VertexId(labels.len()));
            labels.push(l);
        }
        edges[e.0] = Edge { a: edge.a, b: fresh[0] };
        for w in fresh.windows(2) {
            edges.push(Edge { a: w[0], b: w[1] });
        }
        edges.push(Edge { a: fresh[k - 1], b: edge.b });
        Ok((Multigraph { labels, edges }, fresh))
    }

    /// Subdivides every edge `k` times.
    pub fn subdivide_all(&self, k: usize) -> Multigraph {
        let mut g = self.clone();
        for e in 0..self.edge_count() {
            g = g.subdivide(EdgeId(e), k).expect("edge ids are valid").0;
        }
        g
    }

    /// Suppresses every degree-2 vertex whose two edge-ends lie on distinct
    /// edges. A cycle ends up as a single vertex carrying one loop.
    /// Isolated vertices are kept.
    pub fn smooth(&self) -> Multigraph {
        let n = self.labels.len();
        let mut alive = vec![true; n];
        let mut edges: Vec<Option<Edge>> = self.edges.iter().copied().map(Some).collect();
        let mut inc: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, e) in self.edges.iter().enumerate() {
            inc[e.a.0].push(i);
            if !e.is_loop() {
                inc[e.b.0].push(i);
            }
        }
        let mut changed = true;
        while changed {
            changed = false;
            for v in 0..n {
                if !alive[v] || inc[v].len() != 2 {
                    continue;
                }
                let (i, j) = (inc[v][0], inc[v][1]);
                let (ei, ej) = (edges[i].unwrap(), edges[j].unwrap());
                if ei.is_loop() || ej.is_loop() {
                    continue;
                }
                let vid = VertexId(v);
                let (x, y) = (ei.other(vid), ej.other(vid));
                edges[i] = Some(Edge { a: x, b: y });
                edges[j] = None;
                alive[v] = false;
                inc[v].clear();
                // Edge j disappears from y's list; edge i now ends at y.
                if x == y {
                    inc[y.0].retain(|&k| k != j);
                    // x had both i and j; a loop is listed once.
                    inc[x.0].dedup();
                } else {
                    for k in inc[y.0].iter_mut() {
                        if *k == j {
                            *k = i;
                        }
                    }
                }
                changed = true;
            }
        }
        let mut remap = vec![usize::MAX; n];
        let mut labels = Vec::new();
        for v in 0..n {
            if alive[v] {
                remap[v] = labels.len();
                labels.push(self.labels[v].clone());
            }
        }
        let edges = edges
            .into_iter()
            .flatten()
            .map(|e| Edge { a: VertexId(remap[e.a.0]), b: VertexId(remap[e.b.0]) })
            .collect();
        Multigraph { labels, edges }
    }

    /// Degree-2 vertices whose edge-ends belong to two different edges.
    pub fn suppressible_vertices(&self) -> Vec<VertexId> {
        let deg = self.degrees();
        self.vertices()
            .filter(|&v| deg[v.0] == 2 && self.incident(v).count() == 2)
            .collect()
    }

    /// Vertices of degree at least 3 (degree is unchanged by smoothing for
    /// these).
    pub fn branch_points(&self) -> Vec<VertexId> {
        let deg = self.degrees();
        self.vertices().filter(|v| deg[v.0] >= 3).collect()
    }

    /// Degree-1 vertices.
    pub fn graph_endpoints(&self) -> Vec<VertexId> {
        let deg = self.degrees();
        self.vertices().filter(|v| deg[v.0] == 1).collect()
    }

    /// Edges of the smoothed graph incident to an endpoint, as ids into
    /// `self.smooth()`.
    pub fn terminal_edges(&self) -> Vec<EdgeId> {
        let s = self.smooth();
        let deg = s.degrees();
        s.edge_ids()
            .filter(|&e| {
                let ed = s.edges[e.0];
                deg[ed.a.0] == 1 || deg[ed.b.0] == 1
            })
            .collect()
    }

    /// Removes the given edges and any vertex left without edges. Returns
    /// `None` when nothing remains.
    pub fn without_edges(&self, drop: &[EdgeId]) -> Option<Multigraph> {
        let drop: HashSet<usize> = drop.iter().map(|e| e.0).collect();
        let kept: Vec<Edge> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !drop.contains(i))
            .map(|(_, e)| *e)
            .collect();
        if kept.is_empty() {
            return None;
        }
        let mut used = vec![false; self.labels.len()];
        for e in &kept {
            used[e.a.0] = true;
            used[e.b.0] = true;
        }
        Some(self.restrict(&used, kept))
    }

    fn restrict(&self, keep: &[bool], edges: Vec<Edge>) -> Multigraph {
        let mut remap = vec![usize::MAX; self.labels.len()];
        let mut labels = Vec::new();
        for (v, &k) in keep.iter().enumerate() {
            if k {
                remap[v] = labels.len();
                labels.push(self.labels[v].clone());
            }
        }
        let edges = edges
            .into_iter()
            .map(|e| Edge { a: VertexId(remap[e.a.0]), b: VertexId(remap[e.b.0]) })
            .collect();
        Multigraph { labels, edges }
    }

    /// Multiplicity matrix: `m[i][j]` is the number of edges between `i` and
    /// `j`; the diagonal counts loops.
    pub fn multiplicity_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.labels.len();
        let mut m = vec![vec![0u8; n]; n];
        for e in &self.edges {
            m[e.a.0][e.b.0] += 1;
            if !e.is_loop() {
                m[e.b.0][e.a.0] += 1;
            }
        }
        m
    }

    /// Applies a vertex relabelling: vertex `v` becomes `perm[v]`. Labels
    /// move with their vertices.
    pub fn permuted(&self, perm: &[usize]) -> Multigraph {
        let mut labels = vec![String::new(); self.labels.len()];
        for (v, l) in self.labels.iter().enumerate() {
            labels[perm[v]] = l.clone();
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge { a: VertexId(perm[e.a.0]), b: VertexId(perm[e.b.0]) })
            .collect();
        Multigraph { labels, edges }
    }
}
