//! Planarity by exhaustive search for a K5 or K3,3 minor.
//!
//! Loops, parallel edges, pendant trees and degree-2 vertices do not affect
//! planarity, so the graph is first reduced to a simple graph of minimum
//! degree 3. Small or sparse cores are decided directly; the rest go
//! through a memoised deletion/contraction search.

use std::collections::HashMap;

use crate::canon::{canonical_code_of_matrix, CanonicalCode, MAX_CANON_VERTICES};
use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Simple graph as adjacency bitmasks.
#[derive(Clone, Debug)]
struct Core {
    adj: Vec<u64>,
}

impl Core {
    fn from_graph(g: &Multigraph) -> Self {
        let mut adj = vec![0u64; g.vertex_count()];
        for e in g.edges().iter().filter(|e| !e.is_loop()) {
            adj[e.a.0] |= 1 << e.b.0;
            adj[e.b.0] |= 1 << e.a.0;
        }
        Core { adj }
    }

    fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    fn remove_vertex(&mut self, v: usize) {
        let last = self.adj.len() - 1;
        for u in 0..self.adj.len() {
            self.adj[u] &= !(1 << v);
        }
        // Move the last vertex into slot v.
        if v != last {
            let moved = self.adj[last];
            self.adj[v] = moved;
            for u in 0..last {
                if moved & (1 << u) != 0 {
                    self.adj[u] = (self.adj[u] & !(1 << last)) | (1 << v);
                }
            }
        }
        self.adj.pop();
    }

    /// Drops vertices of degree at most 1 and suppresses degree-2 vertices
    /// until every vertex has degree at least 3.
    fn simplify(&mut self) {
        loop {
            let Some(v) = (0..self.adj.len()).find(|&v| self.adj[v].count_ones() <= 2) else {
                return;
            };
            if self.adj[v].count_ones() == 2 {
                let x = self.adj[v].trailing_zeros() as usize;
                let y = 63 - self.adj[v].leading_zeros() as usize;
                self.adj[x] |= 1 << y;
                self.adj[y] |= 1 << x;
            }
            self.remove_vertex(v);
        }
    }

    fn contract(&self, a: usize, b: usize) -> Core {
        let mut c = self.clone();
        let merged = (c.adj[a] | c.adj[b]) & !(1 << a) & !(1 << b);
        for u in 0..c.adj.len() {
            if merged & (1 << u) != 0 {
                c.adj[u] |= 1 << a;
            }
        }
        c.adj[a] = merged;
        c.remove_vertex(b);
        c
    }

    fn delete_edge(&self, a: usize, b: usize) -> Core {
        let mut c = self.clone();
        c.adj[a] &= !(1 << b);
        c.adj[b] &= !(1 << a);
        c
    }

    fn code(&self) -> CanonicalCode {
        let n = self.adj.len();
        let m: Vec<Vec<u8>> = (0..n)
            .map(|i| (0..n).map(|j| ((self.adj[i] >> j) & 1) as u8).collect())
            .collect();
        canonical_code_of_matrix(&m)
    }

    fn is_k33(&self) -> bool {
        if self.adj.len() != 6 || self.adj.iter().any(|m| m.count_ones() != 3) {
            return false;
        }
        let side = self.adj[0];
        (0..6).all(|v| {
            let same = (side >> v) & 1 == 0;
            // Vertices on 0's side see exactly `side`; the others see its complement.
            if same {
                self.adj[v] == side
            } else {
                self.adj[v] == (0b111111 & !side)
            }
        })
    }
}

/// Searches minors of already simplified cores.
struct MinorSearch {
    memo: HashMap<CanonicalCode, bool>,
}

impl MinorSearch {
    fn has_kuratowski_minor(&mut self, mut c: Core) -> bool {
        c.simplify();
        let (n, m) = (c.adj.len(), c.edge_count());
        if n < 5 || m < 9 {
            return false;
        }
        if m > 3 * n - 6 {
            return true;
        }
        if (n == 5 && m == 10) || c.is_k33() {
            return true;
        }
        let key = c.code();
        if let Some(&r) = self.memo.get(&key) {
            return r;
        }
        let mut found = false;
        'edges: for a in 0..n {
            for b in a + 1..n {
                if c.adj[a] & (1 << b) == 0 {
                    continue;
                }
                if self.has_kuratowski_minor(c.delete_edge(a, b))
                    || self.has_kuratowski_minor(c.contract(a, b))
                {
                    found = true;
                    break 'edges;
                }
            }
        }
        self.memo.insert(key, found);
        found
    }
}

/// True iff `g` embeds in the plane.
pub fn is_planar(g: &Multigraph) -> Result<bool> {
    let mut core = Core::from_graph(g);
    core.simplify();
    if core.adj.len() > MAX_CANON_VERTICES {
        return Err(Error::TooManyVertices { got: core.adj.len(), limit: MAX_CANON_VERTICES });
    }
    let mut search = MinorSearch { memo: HashMap::new() };
    Ok(!search.has_kuratowski_minor(core))
}

/// Euler bound on the simplified core: a planar simple graph on n ≥ 3
/// vertices has at most 3n - 6 edges.
pub fn within_euler_bound(g: &Multigraph) -> bool {
    let mut core = Core::from_graph(g);
    core.simplify();
    let n = core.adj.len();
    n < 3 || core.edge_count() <= 3 * n - 6
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;

    #[test]
    fn kuratowski_graphs() {
        assert!(!is_planar(&shapes::k33()).unwrap());
        assert!(!is_planar(&shapes::k5()).unwrap());
        assert!(!is_planar(&shapes::k33().subdivide_all(1)).unwrap());
        assert!(!is_planar(&shapes::petersen()).unwrap());
    }

    #[test]
    fn planar_graphs() {
        for g in [
            shapes::dumbbell(),
            shapes::theta(),
            shapes::wheel3(),
            shapes::double_circle_spokes(4),
            shapes::double_circle_spokes(5),
            shapes::caterpillar3(),
        ] {
            assert!(is_planar(&g).unwrap());
            assert!(within_euler_bound(&g));
        }
    }

    #[test]
    fn k5_minus_edge_is_planar() {
        let mut edges = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                if (a, b) != (0, 1) {
                    edges.push((a, b));
                }
            }
        }
        assert!(is_planar(&Multigraph::from_edges(5, &edges).unwrap()).unwrap());
    }

    #[test]
    fn k33_with_extras_stays_nonplanar() {
        let mut g = shapes::k33();
        g = Multigraph::from_edges(
            7,
            &g.edges()
                .iter()
                .map(|e| (e.a.0, e.b.0))
                .chain([(0, 0), (0, 3), (5, 6)])
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert!(!is_planar(&g).unwrap());
    }

    #[test]
    fn contraction_keeps_simple() {
        let c = Core::from_graph(&shapes::wheel3());
        let d = c.contract(0, 1);
        assert_eq!(d.adj.len(), 3);
        assert_eq!(d.edge_count(), 3);
    }
}
