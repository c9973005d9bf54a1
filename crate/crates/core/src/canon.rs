//! Canonical codes and automorphism groups for small multigraphs.
//!
//! The canonical code is the lexicographically greatest column-major
//! upper-triangular multiplicity matrix over all vertex orderings that list
//! vertices by their refined colour class. Colour refinement only restricts
//! the orderings searched; since colours are isomorphism-invariant the
//! extremum is still a complete invariant. Branches are cut when the partial
//! matrix falls below the best one found, and interchangeable twin vertices
//! are tried once.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexId};

/// Largest vertex count accepted by [`canonical_form`].
pub const MAX_CANON_VERTICES: usize = 12;

/// Largest automorphism group [`automorphisms`] will list explicitly.
pub const MAX_GROUP_ORDER: u128 = 1 << 20;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Option<Self> {
        hex::decode(s).ok().map(CanonicalCode)
    }

    /// Rebuilds a representative graph from the code (vertices labelled by
    /// canonical position).
    pub fn to_graph(&self) -> Result<Multigraph> {
        let bad = || Error::Parse { line: 0, msg: "malformed canonical code".into() };
        let (&n, rest) = self.0.split_first().ok_or_else(bad)?;
        let n = n as usize;
        if rest.len() != n * (n + 1) / 2 {
            return Err(bad());
        }
        let mut edges = Vec::new();
        let mut it = rest.iter();
        for col in 0..n {
            for row in 0..=col {
                let mult = *it.next().unwrap();
                for _ in 0..mult {
                    edges.push((row, col));
                }
            }
        }
        Multigraph::from_edges(n, &edges)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for CanonicalCode {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        CanonicalCode::from_hex(&s).ok_or_else(|| serde::de::Error::custom("bad hex code"))
    }
}

/// Stable colour classes by iterated neighbourhood refinement. Colours are
/// ranks of sorted signatures, so they do not depend on vertex order.
pub(crate) fn refine_colors(m: &[Vec<u8>]) -> Vec<u32> {
    let n = m.len();
    let mut color: Vec<u32> = {
        let init: Vec<(u32, u8)> = (0..n)
            .map(|v| {
                let deg: u32 = (0..n).map(|w| m[v][w] as u32).sum::<u32>() + m[v][v] as u32;
                (deg, m[v][v])
            })
            .collect();
        rank(&init)
    };
    let mut classes = count_classes(&color);
    loop {
        let sigs: Vec<(u32, Vec<(u32, u8)>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<(u32, u8)> = (0..n)
                    .filter(|&w| w != v && m[v][w] > 0)
                    .map(|w| (color[w], m[v][w]))
                    .collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let next = rank(&sigs);
        let next_classes = count_classes(&next);
        color = next;
        if next_classes == classes {
            return color;
        }
        classes = next_classes;
    }
}

fn rank<T: Ord + Clone>(keys: &[T]) -> Vec<u32> {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).unwrap() as u32)
        .collect()
}

fn count_classes(c: &[u32]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

struct CanonSearch<'a> {
    m: &'a [Vec<u8>],
    color: Vec<u32>,
    slot_color: Vec<u32>,
    order: Vec<usize>,
    used: Vec<bool>,
    best: Vec<u8>,
    have_best: bool,
    replacements: usize,
    cur: Vec<u8>,
}

impl CanonSearch<'_> {
    fn is_twin(&self, a: usize, b: usize) -> bool {
        let m = self.m;
        if m[a][a] != m[b][b] {
            return false;
        }
        (0..m.len()).all(|w| w == a || w == b || m[a][w] == m[b][w])
    }

    fn run(&mut self, pos: usize, mut greater: bool) {
        let n = self.m.len();
        if pos == n {
            if greater || !self.have_best {
                self.best.clone_from(&self.cur);
                self.have_best = true;
                self.replacements += 1;
            }
            return;
        }
        let mut tried: Vec<usize> = Vec::new();
        for v in 0..n {
            if self.used[v] || self.color[v] != self.slot_color[pos] {
                continue;
            }
            if tried.iter().any(|&t| self.is_twin(t, v)) {
                continue;
            }
            tried.push(v);
            let start = self.cur.len();
            for i in 0..pos {
                self.cur.push(self.m[self.order[i]][v]);
            }
            self.cur.push(self.m[v][v]);
            let mut now_greater = greater;
            if self.have_best && !greater {
                match self.cur[start..].cmp(&self.best[start..start + pos + 1]) {
                    Ordering::Less => {
                        self.cur.truncate(start);
                        continue;
                    }
                    Ordering::Greater => now_greater = true,
                    Ordering::Equal => {}
                }
            }
            self.used[v] = true;
            self.order.push(v);
            let before = self.replacements;
            self.run(pos + 1, now_greater);
            self.order.pop();
            self.used[v] = false;
            self.cur.truncate(start);
            if self.replacements != before {
                // The new best shares this node's prefix.
                greater = false;
            }
        }
    }
}

/// Canonical code of `g`: equal for two graphs iff they are isomorphic as
/// multigraphs with loops. Limited to [`MAX_CANON_VERTICES`] vertices.
pub fn canonical_form(g: &Multigraph) -> Result<CanonicalCode> {
    if g.vertex_count() > MAX_CANON_VERTICES {
        return Err(Error::TooManyVertices { got: g.vertex_count(), limit: MAX_CANON_VERTICES });
    }
    Ok(canonical_code_of_matrix(&g.multiplicity_matrix()))
}

pub(crate) fn canonical_code_of_matrix(m: &[Vec<u8>]) -> CanonicalCode {
    let n = m.len();
    let color = refine_colors(m);
    let mut slot_color = color.clone();
    slot_color.sort_unstable();
    let mut s = CanonSearch {
        m,
        color,
        slot_color,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        best: Vec::new(),
        have_best: false,
        replacements: 0,
        cur: Vec::with_capacity(n * (n + 1) / 2),
    };
    s.run(0, false);
    let mut code = Vec::with_capacity(1 + s.best.len());
    code.push(n as u8);
    code.extend_from_slice(&s.best);
    CanonicalCode(code)
}

/// True iff the two graphs are isomorphic.
pub fn are_isomorphic(a: &Multigraph, b: &Multigraph) -> Result<bool> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// True iff the smoothed forms of the two graphs are isomorphic.
pub fn are_homeomorphic(a: &Multigraph, b: &Multigraph) -> Result<bool> {
    a.require_connected()?;
    b.require_connected()?;
    are_isomorphic(&a.smooth(), &b.smooth())
}

/// All vertex permutations `p` (vertex `v` maps to `p[v]`) preserving edge
/// multiplicities and loop counts. The identity comes first.
pub fn vertex_automorphisms(g: &Multigraph, limit: usize) -> Result<Vec<Vec<usize>>> {
    let m = g.multiplicity_matrix();
    let n = m.len();
    let color = refine_colors(&m);
    // Visit vertices so that each one after the first is adjacent to an
    // earlier one when possible; adjacency constraints then bite early.
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in 0..n {
                if !seen[w] && m[v][w] > 0 {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut out = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    fn go(
        k: usize,
        order: &[usize],
        m: &[Vec<u8>],
        color: &[u32],
        image: &mut [usize],
        taken: &mut [bool],
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) -> bool {
        if k == order.len() {
            out.push(image.to_vec());
            return out.len() <= limit;
        }
        let v = order[k];
        for w in 0..m.len() {
            if taken[w] || color[w] != color[v] || m[v][v] != m[w][w] {
                continue;
            }
            let ok = order[..k].iter().all(|&u| m[u][v] == m[image[u]][w]);
            if !ok {
                continue;
            }
            image[v] = w;
            taken[w] = true;
            let cont = go(k + 1, order, m, color, image, taken, out, limit);
            taken[w] = false;
            image[v] = usize::MAX;
            if !cont {
                return false;
            }
        }
        true
    }
    if !go(0, &order, &m, &color, &mut image, &mut taken, &mut out, limit) {
        return Err(Error::GroupTooLarge { got: out.len() as u128, limit: limit as u128 });
    }
    out.sort();
    Ok(out)
}

/// A graph automorphism: a vertex permutation together with a compatible
/// edge permutation (`edges[e]` is the image of edge `e`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

/// Edges grouped by unordered endpoint pair.
pub(crate) fn parallel_classes(g: &Multigraph) -> Vec<((VertexId, VertexId), Vec<EdgeId>)> {
    let mut map: std::collections::BTreeMap<(VertexId, VertexId), Vec<EdgeId>> =
        std::collections::BTreeMap::new();
    for (i, e) in g.edges().iter().enumerate() {
        map.entry(e.ordered()).or_default().push(EdgeId(i));
    }
    map.into_iter().collect()
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// The full automorphism group as explicit (vertex, edge) permutation pairs.
/// Parallel edges and loops at a common vertex may be permuted freely.
pub fn automorphisms(g: &Multigraph) -> Result<Vec<Automorphism>> {
    let classes = parallel_classes(g);
    let edge_factor: u128 = classes.iter().map(|(_, es)| factorial(es.len())).product();
    let vperms = vertex_automorphisms(g, MAX_GROUP_ORDER as usize)?;
    let order = edge_factor * vperms.len() as u128;
    if order > MAX_GROUP_ORDER {
        return Err(Error::GroupTooLarge { got: order, limit: MAX_GROUP_ORDER });
    }
    let index_of: std::collections::HashMap<(VertexId, VertexId), usize> =
        classes.iter().enumerate().map(|(i, (k, _))| (*k, i)).collect();
    let mut out = Vec::with_capacity(order as usize);
    for p in &vperms {
        let vmap: Vec<VertexId> = p.iter().map(|&x| VertexId(x)).collect();
        // For each class, the target class and the list of bijections.
        let targets: Vec<(usize, Vec<Vec<usize>>)> = classes
            .iter()
            .map(|((a, b), es)| {
                let (x, y) = (vmap[a.0], vmap[b.0]);
                let key = if x <= y { (x, y) } else { (y, x) };
                (index_of[&key], permutations(es.len()))
            })
            .collect();
        let mut choice = vec![0usize; classes.len()];
        loop {
            let mut emap = vec![EdgeId(usize::MAX); g.edge_count()];
            for (ci, (_, es)) in classes.iter().enumerate() {
                let (tc, perms) = &targets[ci];
                let dest = &classes[*tc].1;
                let perm = &perms[choice[ci]];
                for (j, e) in es.iter().enumerate() {
                    emap[e.0] = dest[perm[j]];
                }
            }
            out.push(Automorphism { vertices: vmap.clone(), edges: emap });
            // Odometer over per-class bijections.
            let mut ci = 0;
            loop {
                if ci == classes.len() {
                    break;
                }
                choice[ci] += 1;
                if choice[ci] < targets[ci].1.len() {
                    break;
                }
                choice[ci] = 0;
                ci += 1;
            }
            if ci == classes.len() {
                break;
            }
        }
    }
    out.sort();
    Ok(out)
}
