//! Finite quotient of n-point configurations on a graph.
//!
//! A configuration of `n` distinct points is recorded as the set of vertices
//! it contains plus, for every edge, how many points lie in the edge's
//! interior. Configurations with equal records are carried onto each other by
//! a homeomorphism fixing every vertex, so one record stands for all of them.
//! Records are further reduced modulo graph automorphisms: only the
//! lexicographically least member of each orbit is produced.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::canon::{parallel_classes, vertex_automorphisms};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexId};

/// Vertex automorphism groups larger than this are not used for pruning;
/// enumeration then falls back to the parallel-edge symmetry alone.
const PRUNING_GROUP_LIMIT: usize = 5_000;

/// `n` points on a graph: marked vertices plus per-edge interior counts.
///
/// Ordering is lexicographic on (sorted vertex marks, counts by edge id).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Placement {
    pub vertex_marks: Vec<VertexId>,
    pub interior: Vec<u32>,
}

impl Placement {
    pub fn empty(edge_count: usize) -> Self {
        Placement { vertex_marks: Vec::new(), interior: vec![0; edge_count] }
    }

    /// Number of points.
    pub fn size(&self) -> usize {
        self.vertex_marks.len() + self.interior.iter().map(|&c| c as usize).sum::<usize>()
    }

    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        if self.interior.len() != g.edge_count() {
            return Err(Error::BadPlacement(format!(
                "{} interior counts for {} edges",
                self.interior.len(),
                g.edge_count()
            )));
        }
        if self.vertex_marks.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::BadPlacement("vertex marks must be sorted and distinct".into()));
        }
        if let Some(v) = self.vertex_marks.iter().find(|v| v.0 >= g.vertex_count()) {
            return Err(Error::BadPlacement(format!("unknown vertex {v}")));
        }
        Ok(())
    }

    /// Points on the given edge's interior.
    pub fn count(&self, e: EdgeId) -> u32 {
        self.interior[e.0]
    }

    /// Compact text form, e.g. `v:0,3|e:1x2,4x1`.
    pub fn describe(&self, g: &Multigraph) -> String {
        let marks: Vec<String> =
            self.vertex_marks.iter().map(|&v| g.label(v).to_string()).collect();
        let counts: Vec<String> = self
            .interior
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(e, c)| format!("{e}x{c}"))
            .collect();
        format!("v:{}|e:{}", marks.join(","), counts.join(","))
    }
}

struct Symmetry {
    vmap: Vec<usize>,
    class_map: Vec<usize>,
}

/// Precomputed symmetry data for enumerating placement orbits on one graph.
pub struct PlacementSpace {
    vertex_count: usize,
    edge_count: usize,
    classes: Vec<Vec<usize>>,
    /// Previous edge in the same parallel class, if any.
    class_prev: Vec<Option<usize>>,
    symmetries: Vec<Symmetry>,
}

impl PlacementSpace {
    pub fn new(g: &Multigraph) -> Self {
        let classes: Vec<((VertexId, VertexId), Vec<EdgeId>)> = parallel_classes(g);
        let mut class_prev = vec![None; g.edge_count()];
        for (_, es) in &classes {
            for (j, e) in es.iter().enumerate() {
                if j > 0 {
                    class_prev[e.0] = Some(es[j - 1].0);
                }
            }
        }
        let keys: Vec<(VertexId, VertexId)> = classes.iter().map(|(k, _)| *k).collect();
        let perms = vertex_automorphisms(g, PRUNING_GROUP_LIMIT).unwrap_or_default();
        let symmetries = perms
            .into_iter()
            .filter(|p| p.iter().enumerate().any(|(i, &x)| i != x))
            .map(|vmap| {
                let class_map = keys
                    .iter()
                    .map(|(a, b)| {
                        let (x, y) = (VertexId(vmap[a.0]), VertexId(vmap[b.0]));
                        let key = if x <= y { (x, y) } else { (y, x) };
                        keys.binary_search(&key).expect("automorphism maps classes to classes")
                    })
                    .collect();
                Symmetry { vmap, class_map }
            })
            .collect();
        PlacementSpace {
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            classes: classes.into_iter().map(|(_, es)| es.into_iter().map(|e| e.0).collect()).collect(),
            class_prev,
            symmetries,
        }
    }

    /// Number of non-trivial vertex symmetries used for pruning.
    pub fn symmetry_count(&self) -> usize {
        self.symmetries.len()
    }

    /// Canonical within-class arrangement: each parallel class holds its
    /// counts in ascending order of edge id.
    fn sort_within_classes(&self, counts: &mut [u32]) {
        for es in &self.classes {
            if es.len() > 1 {
                let mut vals: Vec<u32> = es.iter().map(|&e| counts[e]).collect();
                vals.sort_unstable();
                for (&e, v) in es.iter().zip(vals) {
                    counts[e] = v;
                }
            }
        }
    }

    /// Least member of the orbit of `p`.
    pub fn orbit_min(&self, p: &Placement) -> Placement {
        let mut base = p.clone();
        self.sort_within_classes(&mut base.interior);
        let mut best = base.clone();
        for s in &self.symmetries {
            let img = self.apply(s, &base);
            if img < best {
                best = img;
            }
        }
        best
    }

    fn apply(&self, s: &Symmetry, p: &Placement) -> Placement {
        let mut marks: Vec<VertexId> = p.vertex_marks.iter().map(|v| VertexId(s.vmap[v.0])).collect();
        marks.sort_unstable();
        let mut counts = vec![0u32; self.edge_count];
        for (ci, es) in self.classes.iter().enumerate() {
            let dest = &self.classes[s.class_map[ci]];
            for (&e, &d) in es.iter().zip(dest) {
                counts[d] = p.interior[e];
            }
        }
        self.sort_within_classes(&mut counts);
        Placement { vertex_marks: marks, interior: counts }
    }

    /// True iff `p` (already class-sorted) is the least member of its orbit.
    fn is_representative(&self, p: &Placement) -> bool {
        let mut marks = Vec::with_capacity(p.vertex_marks.len());
        'sym: for s in &self.symmetries {
            marks.clear();
            marks.extend(p.vertex_marks.iter().map(|v| VertexId(s.vmap[v.0])));
            marks.sort_unstable();
            match marks.cmp(&p.vertex_marks) {
                std::cmp::Ordering::Less => return false,
                std::cmp::Ordering::Greater => continue 'sym,
                std::cmp::Ordering::Equal => {}
            }
            let img = self.apply(s, p);
            if img.interior < p.interior {
                return false;
            }
        }
        true
    }

    /// Visits one representative per orbit of `n`-point placements, in
    /// ascending order, until the visitor breaks.
    pub fn for_each<B>(
        &self,
        n: usize,
        mut visit: impl FnMut(&Placement) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let mut p = Placement::empty(self.edge_count);
        self.subsets(0, n, &mut p, &mut visit)
    }

    fn subsets<B>(
        &self,
        from: usize,
        n: usize,
        p: &mut Placement,
        visit: &mut impl FnMut(&Placement) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let rest = n - p.vertex_marks.len();
        self.counts(0, rest, p, visit)?;
        if rest == 0 {
            return ControlFlow::Continue(());
        }
        for v in from..self.vertex_count {
            p.vertex_marks.push(VertexId(v));
            let r = self.subsets(v + 1, n, p, visit);
            p.vertex_marks.pop();
            r?;
        }
        ControlFlow::Continue(())
    }

    fn counts<B>(
        &self,
        e: usize,
        rest: usize,
        p: &mut Placement,
        visit: &mut impl FnMut(&Placement) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if e == self.edge_count {
            if rest == 0 && self.is_representative(p) {
                return visit(p);
            }
            return ControlFlow::Continue(());
        }
        // Counts within a parallel class are generated non-decreasing.
        let lo = self.class_prev[e].map_or(0, |q| p.interior[q] as usize);
        for c in lo..=rest {
            p.interior[e] = c as u32;
            let r = self.counts(e + 1, rest - c, p, visit);
            p.interior[e] = 0;
            r?;
        }
        ControlFlow::Continue(())
    }
}

/// All orbit representatives of `n`-point placements on `g`, ascending.
pub fn enumerate_placements(g: &Multigraph, n: usize) -> Vec<Placement> {
    let space = PlacementSpace::new(g);
    let mut out = Vec::new();
    let _ = space.for_each::<()>(n, |p| {
        out.push(p.clone());
        ControlFlow::Continue(())
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;

    #[test]
    fn triod_three_points_includes_one_per_leg() {
        let ps = enumerate_placements(&shapes::triod(), 3);
        assert!(ps.iter().any(|p| p.vertex_marks.is_empty() && p.interior == vec![1, 1, 1]));
    }

    #[test]
    fn arc_two_points() {
        // {a,b}; {a}+1 ~ {b}+1; 2 interior: three orbits.
        let ps = enumerate_placements(&shapes::arc(), 2);
        assert_eq!(ps.len(), 3);
    }

    #[test]
    fn circle_one_point() {
        assert_eq!(enumerate_placements(&shapes::circle(), 1).len(), 2);
    }

    #[test]
    fn representatives_are_orbit_minima_and_sizes_right() {
        for (name, g) in shapes::all_named().into_iter().take(12) {
            let space = PlacementSpace::new(&g);
            for n in 1..=4 {
                for p in enumerate_placements(&g, n) {
                    assert_eq!(p.size(), n, "{name}");
                    p.validate(&g).unwrap();
                    assert_eq!(space.orbit_min(&p), p, "{name}");
                }
            }
        }
    }

    #[test]
    fn output_is_sorted() {
        let ps = enumerate_placements(&shapes::k33(), 4);
        assert!(ps.windows(2).all(|w| w[0] < w[1]));
    }
}
