//! Exhaustive generation of homeomorphism classes of small graphs.
//!
//! Every connected multigraph with k edges arises from one with k - 1 edges
//! by adding a loop, an edge between existing vertices, or a pendant edge to
//! a new vertex (remove a cycle edge, or a leaf when the graph is a tree).
//! Levels are grown that way and deduplicated by canonical code. A graph
//! with no suppressible vertex is its own smoothed form, so those graphs,
//! one per isomorphism class, are exactly the homeomorphism classes with k
//! smoothed edges.

use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::arc::{ac_profile_fast, AcNumber, AcProfile};
use crate::canon::{canonical_form, CanonicalCode, MAX_CANON_VERTICES};
use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Largest edge count accepted; reduced graphs with k edges have at most
/// k + 1 vertices, which must fit the canonicalizer.
pub const MAX_ENUM_EDGES: usize = MAX_CANON_VERTICES - 1;

/// One homeomorphism class: the canonical code of its smoothed form and
/// the graph rebuilt from that code.
#[derive(Clone, Debug)]
pub struct ClassRep {
    pub code: CanonicalCode,
    pub graph: Multigraph,
}

fn extensions(g: &Multigraph) -> Vec<Multigraph> {
    let n = g.vertex_count();
    let base: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.a.0, e.b.0)).collect();
    let mut out = Vec::new();
    let mut push = |vc: usize, extra: (usize, usize)| {
        let mut es = base.clone();
        es.push(extra);
        out.push(Multigraph::from_edges(vc, &es).expect("extension is valid"));
    };
    for a in 0..n {
        for b in a..n {
            push(n, (a, b));
        }
        push(n + 1, (a, n));
    }
    out
}

/// Connected graphs per edge count, from 1 up to `max_edges`, keeping only
/// intermediates that can still shed all suppressible vertices: each added
/// edge raises the degree of at most two existing vertices.
fn grow(max_edges: usize) -> Result<Vec<Vec<ClassRep>>> {
    if max_edges == 0 || max_edges > MAX_ENUM_EDGES {
        return Err(Error::EdgeBound { got: max_edges, limit: MAX_ENUM_EDGES });
    }
    let level_one = [crate::shapes::arc(), crate::shapes::circle()];
    let mut level: Vec<ClassRep> = level_one
        .iter()
        .map(|g| {
            let code = canonical_form(g)?;
            Ok(ClassRep { graph: code.to_graph()?, code })
        })
        .collect::<Result<_>>()?;
    let mut finals = vec![level.iter().filter(|r| reduced(&r.graph)).cloned().collect::<Vec<_>>()];
    for k in 2..=max_edges {
        let remaining = max_edges - k;
        let candidates: Vec<Multigraph> = level
            .par_iter()
            .flat_map_iter(|r| extensions(&r.graph))
            .filter(|g| g.suppressible_vertices().len() <= 2 * remaining)
            .collect();
        let mut codes: Vec<(CanonicalCode, usize)> = candidates
            .par_iter()
            .enumerate()
            .map(|(i, g)| canonical_form(g).map(|c| (c, i)))
            .collect::<Result<_>>()?;
        codes.sort();
        codes.dedup_by(|a, b| a.0 == b.0);
        level = codes
            .into_par_iter()
            .map(|(code, _)| Ok(ClassRep { graph: code.to_graph()?, code }))
            .collect::<Result<_>>()?;
        finals.push(level.iter().filter(|r| reduced(&r.graph)).cloned().collect());
    }
    Ok(finals)
}

/// No suppressible vertex; the lone circle vertex qualifies.
fn reduced(g: &Multigraph) -> bool {
    g.suppressible_vertices().is_empty()
}

/// One representative per homeomorphism class with `edge_count` smoothed
/// edges, ordered by canonical code.
pub fn reduced_multigraphs(edge_count: usize) -> Result<Vec<ClassRep>> {
    Ok(grow(edge_count)?.pop().expect("at least one level"))
}

/// Homeomorphism classes for every edge count up to a bound, with lazily
/// computed planarity and ac profiles shared between consumers.
pub struct Census {
    levels: Vec<Vec<ClassRep>>,
    planar: Vec<OnceLock<Vec<bool>>>,
    profiles: Vec<OnceLock<Vec<AcProfile>>>,
}

impl Census {
    pub fn new(max_edges: usize) -> Result<Self> {
        let levels = grow(max_edges)?;
        let planar = levels.iter().map(|_| OnceLock::new()).collect();
        let profiles = levels.iter().map(|_| OnceLock::new()).collect();
        Ok(Census { levels, planar, profiles })
    }

    pub fn max_edges(&self) -> usize {
        self.levels.len()
    }

    /// Classes with exactly `edges` smoothed edges.
    pub fn level(&self, edges: usize) -> &[ClassRep] {
        &self.levels[edges - 1]
    }

    /// Every class, ordered by edge count then code.
    pub fn all(&self) -> impl Iterator<Item = &ClassRep> {
        self.levels.iter().flatten()
    }

    pub fn sizes(&self) -> Vec<(usize, usize)> {
        self.levels.iter().enumerate().map(|(i, l)| (i + 1, l.len())).collect()
    }

    pub fn planar(&self, edges: usize) -> Result<&[bool]> {
        let cell = &self.planar[edges - 1];
        if let Some(v) = cell.get() {
            return Ok(v);
        }
        let v = self
            .level(edges)
            .par_iter()
            .map(|r| crate::planar::is_planar(&r.graph))
            .collect::<Result<Vec<_>>>()?;
        Ok(cell.get_or_init(|| v))
    }

    /// Full profiles (up to 7) for one level.
    pub fn profiles(&self, edges: usize) -> Result<&[AcProfile]> {
        let cell = &self.profiles[edges - 1];
        if let Some(v) = cell.get() {
            return Ok(v);
        }
        let v = self
            .level(edges)
            .par_iter()
            .map(|r| ac_profile_fast(&r.graph, 7))
            .collect::<Result<Vec<_>>>()?;
        Ok(cell.get_or_init(|| v))
    }
}

/// Smoothed edge count of the smallest known graph with ac-number exactly n:
/// triod, the circle with two whiskers, the circle with two chords, K4 and
/// K3,3.
pub fn minimality_budget(n: usize) -> Option<usize> {
    match n {
        2 => Some(3),
        3 => Some(4),
        4 => Some(5),
        5 => Some(6),
        6 => Some(9),
        _ => None,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MinimalityReport {
    pub target: usize,
    pub budget: usize,
    /// Classes examined per edge count below the budget.
    pub census: Vec<(usize, usize)>,
    /// Codes of smaller graphs with ac-number exactly `target`.
    pub violations: Vec<String>,
    /// A class at the budget with ac-number exactly `target`, if any.
    pub attained_by: Option<String>,
}

impl MinimalityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.attained_by.is_some()
    }
}

/// Checks that no class with fewer smoothed edges than the budget has
/// ac-number exactly `n`, and that some class at the budget does.
pub fn verify_minimality(census: &Census, n: usize) -> Result<MinimalityReport> {
    let budget = minimality_budget(n).ok_or_else(|| Error::Profile(format!("no budget for ac={n}")))?;
    if census.max_edges() < budget {
        return Err(Error::EdgeBound { got: budget, limit: census.max_edges() });
    }
    let target = AcNumber::Finite(n as u8);
    let mut violations = Vec::new();
    for k in 1..budget {
        for (r, p) in census.level(k).iter().zip(census.profiles(k)?) {
            if p.ac == target {
                violations.push(r.code.to_hex());
            }
        }
    }
    let attained_by = census
        .level(budget)
        .par_iter()
        .map(|r| ac_profile_fast(&r.graph, (n + 1).min(7)).map(|p| (p.ac == target).then(|| r.code.to_hex())))
        .find_first(|x| !matches!(x, Ok(None)))
        .transpose()?
        .flatten();
    Ok(MinimalityReport {
        target: n,
        budget,
        census: census.sizes().into_iter().filter(|&(k, _)| k < budget).collect(),
        violations,
        attained_by,
    })
}
