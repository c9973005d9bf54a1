//! Realizing placements as subdivided graphs and searching for a simple path
//! through every marked vertex.
//!
//! In a loop-free graph whose marked points are vertices, an arc with marked
//! endpoints is exactly a simple vertex path. The search is exhaustive
//! backtracking from marked start vertices with two cuts: every unvisited
//! marked vertex must stay reachable from the live end through unvisited
//! vertices, and at most one unvisited marked vertex may be a dead end.

use crate::arc::placement::Placement;
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeId, Multigraph, VertexId};

/// Largest realized graph the bitset search handles.
pub const MAX_SEARCH_VERTICES: usize = 128;

/// A placement turned into vertices: every interior point becomes a fresh
/// marked vertex, and loops are cut into at least three edges.
#[derive(Clone, Debug)]
pub struct Realized {
    pub graph: Multigraph,
    pub marked: Vec<VertexId>,
}

/// A simple path in a realized graph certifying that all marked vertices lie
/// on one arc.
#[derive(Clone, Debug)]
pub struct ArcWitness {
    pub graph: Multigraph,
    pub marked: Vec<VertexId>,
    pub start: VertexId,
    /// Each step: the edge taken and the vertex reached.
    pub steps: Vec<(EdgeId, VertexId)>,
}

impl ArcWitness {
    pub fn vertices(&self) -> Vec<VertexId> {
        std::iter::once(self.start).chain(self.steps.iter().map(|s| s.1)).collect()
    }

    pub fn end(&self) -> VertexId {
        self.steps.last().map_or(self.start, |s| s.1)
    }

    /// Checks the witness from scratch: steps follow real edges, no vertex
    /// repeats, both ends are marked, every marked vertex is visited.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let mut cur = self.start;
        let mut seen = vec![false; self.graph.vertex_count()];
        seen[cur.0] = true;
        for &(e, v) in &self.steps {
            let edge = self.graph.edge(e).map_err(|x| x.to_string())?;
            if edge.is_loop() || !edge.touches(cur) || edge.other(cur) != v {
                return Err(format!("edge {e} does not join {cur} and {v}"));
            }
            if seen[v.0] {
                return Err(format!("vertex {v} repeats"));
            }
            seen[v.0] = true;
            cur = v;
        }
        let is_marked = |v: VertexId| self.marked.contains(&v);
        if !is_marked(self.start) || !is_marked(self.end()) {
            return Err("path endpoint is not marked".into());
        }
        if let Some(m) = self.marked.iter().find(|m| !seen[m.0]) {
            return Err(format!("marked vertex {m} not on path"));
        }
        Ok(())
    }
}

fn check_placement(g: &Multigraph, p: &Placement) -> Result<()> {
    p.validate(g)
}

/// Subdivides each edge once per interior point (loops at least twice) and
/// marks the placement's vertices together with the new interior points.
pub fn realize(g: &Multigraph, p: &Placement) -> Result<Realized> {
    check_placement(g, p)?;
    let mut labels: Vec<String> = g.labels().to_vec();
    let mut taken: std::collections::HashSet<String> = labels.iter().cloned().collect();
    let mut edges = Vec::new();
    let mut marked: Vec<VertexId> = p.vertex_marks.clone();
    for (i, e) in g.edges().iter().enumerate() {
        let c = p.interior[i] as usize;
        let k = if e.is_loop() { c.max(2) } else { c };
        if k == 0 {
            edges.push(*e);
            continue;
        }
        let mut prev = e.a;
        for j in 0..k {
            let mut idx = 0;
            let label = loop {
                let l = format!("{}:{}.{}", i, j, idx);
                if !taken.contains(&l) {
                    break l;
                }
                idx += 1;
            };
            taken.insert(label.clone());
            let v = VertexId(labels.len());
            labels.push(label);
            if j < c {
                marked.push(v);
            }
            edges.push(Edge { a: prev, b: v });
            prev = v;
        }
        edges.push(Edge { a: prev, b: e.b });
    }
    marked.sort_unstable();
    Ok(Realized { graph: Multigraph::with_labels(labels, edges)?, marked })
}

/// Bitset adjacency of a realized placement, built without labels.
pub(crate) fn realize_masks(g: &Multigraph, p: &Placement) -> Result<(Vec<u128>, u128)> {
    let extra: usize = g
        .edges()
        .iter()
        .zip(&p.interior)
        .map(|(e, &c)| if e.is_loop() { (c as usize).max(2) } else { c as usize })
        .sum();
    let n = g.vertex_count() + extra;
    if n > MAX_SEARCH_VERTICES {
        return Err(Error::TooManyVertices { got: n, limit: MAX_SEARCH_VERTICES });
    }
    let mut adj = vec![0u128; n];
    let link = |x: usize, y: usize, adj: &mut Vec<u128>| {
        adj[x] |= 1 << y;
        adj[y] |= 1 << x;
    };
    let mut marked: u128 = 0;
    for v in &p.vertex_marks {
        marked |= 1 << v.0;
    }
    let mut next = g.vertex_count();
    for (e, &c) in g.edges().iter().zip(&p.interior) {
        let c = c as usize;
        let k = if e.is_loop() { c.max(2) } else { c };
        let mut prev = e.a.0;
        for j in 0..k {
            if j < c {
                marked |= 1 << next;
            }
            link(prev, next, &mut adj);
            prev = next;
            next += 1;
        }
        link(prev, e.b.0, &mut adj);
    }
    Ok((adj, marked))
}

struct Searcher<'a> {
    adj: &'a [u128],
    marked: u128,
    path: Vec<usize>,
}

#[inline]
fn bits(mut x: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let i = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(i)
        }
    })
}

impl Searcher<'_> {
    fn reach(&self, from: usize, free: u128) -> u128 {
        let mut seen: u128 = 1 << from;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.adj[u];
            }
            next &= free & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    fn extend(&mut self, v: usize, visited: u128, remaining: u128) -> bool {
        if remaining == 0 {
            return true;
        }
        let free = !visited;
        if remaining & !self.reach(v, free) != 0 {
            return false;
        }
        let vbit: u128 = 1 << v;
        let mut dead = 0;
        for m in bits(remaining) {
            if (self.adj[m] & (free | vbit)).count_ones() <= 1 {
                dead += 1;
                if dead > 1 {
                    return false;
                }
            }
        }
        let options = self.adj[v] & free;
        // Marked neighbours first.
        for pass in 0..2 {
            let pool = if pass == 0 { options & self.marked } else { options & !self.marked };
            for w in bits(pool) {
                let wbit: u128 = 1 << w;
                if pass == 1 && self.adj[w] & free & !wbit == 0 {
                    continue;
                }
                self.path.push(w);
                if self.extend(w, visited | wbit, remaining & !wbit) {
                    return true;
                }
                self.path.pop();
            }
        }
        false
    }
}

/// Simple vertex path through all marked vertices with marked ends, as a
/// vertex sequence, or `None` if there is none.
pub(crate) fn search_path(adj: &[u128], marked: u128) -> Option<Vec<usize>> {
    if marked == 0 {
        return None;
    }
    if marked.count_ones() == 1 {
        return Some(vec![marked.trailing_zeros() as usize]);
    }
    let leaves: u128 = bits(marked).filter(|&m| adj[m].count_ones() <= 1).fold(0, |a, m| a | 1 << m);
    if leaves.count_ones() > 2 {
        return None;
    }
    // A marked leaf must be an end; paths are reversible, so start there.
    let starts = if leaves != 0 { leaves & leaves.wrapping_neg() } else { marked };
    let mut s = Searcher { adj, marked, path: Vec::new() };
    for start in bits(starts) {
        s.path.clear();
        s.path.push(start);
        let b: u128 = 1 << start;
        if s.extend(start, b, marked & !b) {
            return Some(s.path);
        }
    }
    None
}

/// True iff the placement's points lie on one arc of `g`.
pub(crate) fn placement_covered(g: &Multigraph, p: &Placement) -> Result<bool> {
    let (adj, marked) = realize_masks(g, p)?;
    Ok(search_path(&adj, marked).is_some())
}

/// Searches a loop-free graph for a simple path whose ends are marked and
/// which visits every marked vertex.
pub fn covering_arc(g: &Multigraph, marked: &[VertexId]) -> Result<Option<ArcWitness>> {
    let n = g.vertex_count();
    if n > MAX_SEARCH_VERTICES {
        return Err(Error::TooManyVertices { got: n, limit: MAX_SEARCH_VERTICES });
    }
    if let Some(e) = g.edges().iter().position(|e| e.is_loop()) {
        return Err(Error::BadPlacement(format!("covering search needs a loop-free graph; edge {e} is a loop")));
    }
    let mut adj = vec![0u128; n];
    for e in g.edges() {
        adj[e.a.0] |= 1 << e.b.0;
        adj[e.b.0] |= 1 << e.a.0;
    }
    let mut mask: u128 = 0;
    for m in marked {
        if m.0 >= n {
            return Err(Error::UnknownVertex(m.0));
        }
        mask |= 1 << m.0;
    }
    let Some(path) = search_path(&adj, mask) else {
        return Ok(None);
    };
    let steps = path
        .windows(2)
        .map(|w| {
            let e = g
                .edges()
                .iter()
                .position(|e| e.touches(VertexId(w[0])) && e.other(VertexId(w[0])) == VertexId(w[1]))
                .expect("adjacent vertices share an edge");
            (EdgeId(e), VertexId(w[1]))
        })
        .collect();
    let mut marked = marked.to_vec();
    marked.sort_unstable();
    marked.dedup();
    Ok(Some(ArcWitness { graph: g.clone(), marked, start: VertexId(path[0]), steps }))
}
