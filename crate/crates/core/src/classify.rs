//! Classification against the six ω-ac shapes, reduced graphs, branch-point
//! rules and explicit 7-point obstructions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arc::{covering::placement_covered, is_n_ac_verdict, Placement};
use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexId};
use crate::shapes;

/// Homeomorphism type, as far as the ω-ac characterization cares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HomeoClass {
    Arc,
    Circle,
    FigureEight,
    Lollipop,
    Dumbbell,
    Theta,
    Other,
}

impl HomeoClass {
    pub const OMEGA: [HomeoClass; 6] = [
        HomeoClass::Arc,
        HomeoClass::Circle,
        HomeoClass::FigureEight,
        HomeoClass::Lollipop,
        HomeoClass::Dumbbell,
        HomeoClass::Theta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HomeoClass::Arc => "arc",
            HomeoClass::Circle => "circle",
            HomeoClass::FigureEight => "figure-eight",
            HomeoClass::Lollipop => "lollipop",
            HomeoClass::Dumbbell => "dumbbell",
            HomeoClass::Theta => "theta",
            HomeoClass::Other => "other",
        }
    }

    /// Smoothed representative; `None` for `Other`.
    pub fn shape(self) -> Option<Multigraph> {
        Some(match self {
            HomeoClass::Arc => shapes::arc(),
            HomeoClass::Circle => shapes::circle(),
            HomeoClass::FigureEight => shapes::figure_eight(),
            HomeoClass::Lollipop => shapes::lollipop(),
            HomeoClass::Dumbbell => shapes::dumbbell(),
            HomeoClass::Theta => shapes::theta(),
            HomeoClass::Other => return None,
        })
    }
}

impl fmt::Display for HomeoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for HomeoClass {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        HomeoClass::OMEGA
            .into_iter()
            .chain([HomeoClass::Other])
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown class `{s}`"))
    }
}

pub fn homeo_class(g: &Multigraph) -> HomeoClass {
    let s = g.smooth();
    if s.vertex_count() > 2 || s.edge_count() > 3 || !s.is_connected() {
        return HomeoClass::Other;
    }
    let Ok(code) = canonical_form(&s) else {
        return HomeoClass::Other;
    };
    HomeoClass::OMEGA
        .into_iter()
        .find(|c| canonical_form(&c.shape().expect("omega class has a shape")).ok() == Some(code.clone()))
        .unwrap_or(HomeoClass::Other)
}

/// ω-ac by the characterization: homeomorphic to one of the six shapes.
pub fn is_7ac_theorem(g: &Multigraph) -> bool {
    homeo_class(g) != HomeoClass::Other
}

/// Result of pruning terminal edges until none remain.
#[derive(Clone, Debug)]
pub struct ReducedGraph {
    /// Smoothed reduced graph; for trees, the last edge removed.
    pub graph: Multigraph,
    /// Set when the input is a tree and pruning consumed everything.
    pub degenerate: bool,
}

/// Deletes all terminal edges of the smoothed graph at once, re-smooths, and
/// repeats until no terminal edge is left.
pub fn reduced_graph(g: &Multigraph) -> Result<ReducedGraph> {
    g.require_connected()?;
    let mut cur = g.smooth();
    loop {
        let terminal = cur.terminal_edges();
        if terminal.is_empty() {
            return Ok(ReducedGraph { graph: cur, degenerate: false });
        }
        match cur.without_edges(&terminal) {
            Some(next) => cur = next.smooth(),
            None => {
                let e = cur.edges()[terminal[0].0];
                let graph = Multigraph::build(
                    &[cur.label(e.a), cur.label(e.b)],
                    &[(cur.label(e.a), cur.label(e.b))],
                )?;
                return Ok(ReducedGraph { graph, degenerate: true });
            }
        }
    }
}

/// A necessary condition for n-ac that the graph violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Rule {
    /// A branch point of degree at least 5: not 5-ac.
    DegreeFive,
    /// Three or more branch points: not 7-ac.
    ThreeBranchPoints,
    /// Exactly two branch points, both of degree at least 4: not 7-ac.
    TwoHighBranchPoints,
}

impl Rule {
    /// The graph is not n-ac for this n (nor any larger one).
    pub fn fails_at(self) -> usize {
        match self {
            Rule::DegreeFive => 5,
            Rule::ThreeBranchPoints | Rule::TwoHighBranchPoints => 7,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Rule::DegreeFive => "deg>=5",
            Rule::ThreeBranchPoints => "3+branch",
            Rule::TwoHighBranchPoints => "2branch-deg>=4",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub branch_points: usize,
    /// 0 when there is no branch point.
    pub max_branch_degree: usize,
    pub fired: Vec<Rule>,
}

impl ConditionReport {
    /// Smallest n the fired rules rule out, if any.
    pub fn fails_at(&self) -> Option<usize> {
        self.fired.iter().map(|r| r.fails_at()).min()
    }
}

pub fn necessary_conditions(g: &Multigraph) -> ConditionReport {
    let deg = g.degrees();
    let branch: Vec<usize> = g.branch_points().iter().map(|v| deg[v.0]).collect();
    let max_branch_degree = branch.iter().copied().max().unwrap_or(0);
    let mut fired = Vec::new();
    if max_branch_degree >= 5 {
        fired.push(Rule::DegreeFive);
    }
    if branch.len() >= 3 {
        fired.push(Rule::ThreeBranchPoints);
    }
    if branch.len() == 2 && branch.iter().all(|&d| d >= 4) {
        fired.push(Rule::TwoHighBranchPoints);
    }
    ConditionReport { branch_points: branch.len(), max_branch_degree, fired }
}

/// A maximal path whose inner vertices all have degree 2.
#[derive(Clone, Debug)]
struct Chain {
    start: VertexId,
    end: VertexId,
    edges: Vec<EdgeId>,
}

/// Chains between vertices of degree other than 2. Each edge lies on
/// exactly one chain. Assumes some vertex has degree other than 2.
fn chains(g: &Multigraph) -> Vec<Chain> {
    let deg = g.degrees();
    let mut used = vec![false; g.edge_count()];
    let mut out = Vec::new();
    for v in g.vertices().filter(|v| deg[v.0] != 2) {
        for first in g.incident(v).collect::<Vec<_>>() {
            if used[first.0] {
                continue;
            }
            used[first.0] = true;
            let mut edges = vec![first];
            let mut at = g.edges()[first.0].other(v);
            while deg[at.0] == 2 {
                let next = g
                    .incident(at)
                    .find(|e| !used[e.0])
                    .expect("degree-2 vertex inside a chain has an unused edge");
                used[next.0] = true;
                edges.push(next);
                at = g.edges()[next.0].other(at);
            }
            out.push(Chain { start: v, end: at, edges });
        }
    }
    out
}

/// An end of a chain at a vertex; `at_start` picks which end.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Germ {
    chain: usize,
    at_start: bool,
}

/// A point placement that no arc covers, built from three branch points
/// q1, q2, q3 with chains q1-q2 and q2-q3: one point inside each of those
/// chains, two points near q1 and two near q3 on other directions, and one
/// near q2 on its remaining direction.
pub fn obstruction_7(g: &Multigraph) -> Result<Placement> {
    g.require_connected()?;
    let deg = g.degrees();
    let branch = g.branch_points();
    if branch.len() < 3 {
        return Err(Error::TooFewBranchPoints(branch.len()));
    }
    let cs = chains(g);
    let is_branch = |v: VertexId| deg[v.0] >= 3;
    let germs_at = |q: VertexId| -> Vec<Germ> {
        let mut out = Vec::new();
        for (i, c) in cs.iter().enumerate() {
            if c.start == q {
                out.push(Germ { chain: i, at_start: true });
            }
            if c.end == q {
                out.push(Germ { chain: i, at_start: false });
            }
        }
        out
    };
    // Germ at `q` of a chain to a different branch point, with that point.
    let links = |q: VertexId| -> Vec<(Germ, VertexId)> {
        germs_at(q)
            .into_iter()
            .filter_map(|gm| {
                let c = &cs[gm.chain];
                let other = if gm.at_start { c.end } else { c.start };
                (other != q && is_branch(other)).then_some((gm, other))
            })
            .collect()
    };
    let flip = |gm: Germ| Germ { chain: gm.chain, at_start: !gm.at_start };
    for &q2 in &branch {
        let ls = links(q2);
        for (i, &(g21, q1)) in ls.iter().enumerate() {
            for &(g23, q3) in &ls[i + 1..] {
                if q1 == q3 {
                    continue;
                }
                let (g12, g32) = (flip(g21), flip(g23));
                let others = |q: VertexId, skip: &[Germ], k: usize| -> Vec<Germ> {
                    germs_at(q).into_iter().filter(|gm| !skip.contains(gm)).take(k).collect()
                };
                let near1 = others(q1, &[g12], 2);
                let near2 = others(q2, &[g21, g23], 1);
                let near3 = others(q3, &[g32], 2);
                let mut p = Placement::empty(g.edge_count());
                p.interior[cs[g21.chain].edges[0].0] += 1;
                p.interior[cs[g23.chain].edges[0].0] += 1;
                for gm in near1.iter().chain(&near2).chain(&near3) {
                    let c = &cs[gm.chain];
                    let e = if gm.at_start { c.edges[0] } else { c.edges[c.edges.len() - 1] };
                    p.interior[e.0] += 1;
                }
                debug_assert_eq!(p.size(), 7);
                return Ok(p);
            }
        }
    }
    unreachable!("a connected graph with three branch points has a branch-point path of length two")
}

/// Whether `p` is uncoverable, i.e. a genuine obstruction.
pub fn is_obstruction(g: &Multigraph, p: &Placement) -> Result<bool> {
    p.validate(g)?;
    Ok(!placement_covered(g, p)?)
}

/// Compares the characterization against brute force at n = 7, and
/// optionally checks that characterized graphs are also 8-ac.
pub fn cross_check(g: &Multigraph, also_eight: bool) -> Result<bool> {
    let theorem = is_7ac_theorem(g);
    let brute = is_n_ac_verdict(g, 7)?;
    if theorem != brute {
        return Ok(false);
    }
    if also_eight && theorem {
        return is_n_ac_verdict(g, 8);
    }
    Ok(true)
}
