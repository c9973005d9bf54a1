//! Shared generators and brute-force oracles for the integration tests.
#![allow(dead_code)]

use arcconn::arc::Placement;
use arcconn::graph::{Multigraph, VertexId};
use proptest::prelude::*;

/// Connected multigraphs with up to `max_v` vertices: a random spanning
/// tree plus random extra edges (loops and parallels allowed).
pub fn connected_graph(max_v: usize, max_extra: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_v).prop_flat_map(move |n| {
        let parents = (1..n).map(|i| 0..i).collect::<Vec<_>>();
        let extra = proptest::collection::vec((0..n, 0..n), 0..=max_extra);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
            edges.extend(extra);
            if edges.is_empty() {
                edges.push((0, 0));
            }
            Multigraph::from_edges(n, &edges).unwrap()
        })
    })
}

/// A uniformly chosen permutation of `0..n` from a seed.
pub fn permutation(n: usize, seed: u64) -> Vec<usize> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
    p
}

/// All permutations of `0..n` (Heap's algorithm).
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    out.push(a.clone());
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn sorted_edges(g: &Multigraph, perm: &[usize]) -> Vec<(usize, usize)> {
    let mut es: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = (perm[e.a.0], perm[e.b.0]);
            (a.min(b), a.max(b))
        })
        .collect();
    es.sort_unstable();
    es
}

/// Isomorphism by trying every vertex bijection.
pub fn brute_isomorphic(a: &Multigraph, b: &Multigraph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let target = sorted_edges(b, &(0..b.vertex_count()).collect::<Vec<_>>());
    all_permutations(a.vertex_count()).iter().any(|p| sorted_edges(a, p) == target)
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

/// |Aut| counting edge permutations within parallel classes: vertex
/// permutations preserving the edge multiset, times the product of the
/// factorials of the edge multiplicities.
pub fn brute_automorphism_count(g: &Multigraph) -> u128 {
    let id = sorted_edges(g, &(0..g.vertex_count()).collect::<Vec<_>>());
    let vertex_perms = all_permutations(g.vertex_count()).iter().filter(|p| sorted_edges(g, p) == id).count() as u128;
    let mut mult = std::collections::BTreeMap::new();
    for e in &id {
        *mult.entry(*e).or_insert(0usize) += 1;
    }
    vertex_perms * mult.values().map(|&m| factorial(m)).product::<u128>()
}

/// Whether some simple path with marked ends visits every marked vertex,
/// by plain depth-first enumeration of all simple paths.
pub fn brute_covering_exists(g: &Multigraph, marked: &[VertexId]) -> bool {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for e in g.edges() {
        adj[e.a.0].push(e.b.0);
        adj[e.b.0].push(e.a.0);
    }
    let is_marked: Vec<bool> = (0..n).map(|v| marked.contains(&VertexId(v))).collect();
    let total = marked.len();
    fn dfs(v: usize, adj: &[Vec<usize>], is_marked: &[bool], seen: &mut [bool], hit: usize, total: usize) -> bool {
        if hit == total && is_marked[v] {
            return true;
        }
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                let found = dfs(w, adj, is_marked, seen, hit + is_marked[w] as usize, total);
                seen[w] = false;
                if found {
                    return true;
                }
            }
        }
        false
    }
    if total == 0 {
        return true;
    }
    marked.iter().any(|&s| {
        let mut seen = vec![false; n];
        seen[s.0] = true;
        dfs(s.0, &adj, &is_marked, &mut seen, 1, total)
    })
}

/// Every placement of `n` points, without any symmetry reduction.
pub fn all_placements(g: &Multigraph, n: usize) -> Vec<Placement> {
    let (nv, ne) = (g.vertex_count(), g.edge_count());
    let mut out = Vec::new();
    for mask in 0u32..(1 << nv) {
        let k = mask.count_ones() as usize;
        if k > n {
            continue;
        }
        let marks: Vec<VertexId> = (0..nv).filter(|v| mask >> v & 1 == 1).map(VertexId).collect();
        let mut counts = vec![0u32; ne];
        fn fill(e: usize, rest: u32, counts: &mut Vec<u32>, marks: &[VertexId], out: &mut Vec<Placement>) {
            if e == counts.len() {
                if rest == 0 {
                    out.push(Placement { vertex_marks: marks.to_vec(), interior: counts.clone() });
                }
                return;
            }
            for c in 0..=rest {
                counts[e] = c;
                fill(e + 1, rest - c, counts, marks, out);
            }
            counts[e] = 0;
        }
        fill(0, (n - k) as u32, &mut counts, &marks, &mut out);
    }
    out
}

/// Marked vertices of a realized placement, recomputed from the placement:
/// original marks plus the first `c` fresh vertices of each edge, with fresh
/// vertices numbered after the original ones in edge order.
pub fn fresh_vertices(g: &Multigraph, p: &Placement) -> Vec<Vec<VertexId>> {
    let mut next = g.vertex_count();
    g.edges()
        .iter()
        .zip(&p.interior)
        .map(|(e, &c)| {
            let k = if e.is_loop() { (c as usize).max(2) } else { c as usize };
            let vs = (next..next + k).map(VertexId).collect();
            next += k;
            vs
        })
        .collect()
}
