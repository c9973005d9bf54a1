//! Deciding n-arc-connectedness by exhausting placement orbits.
//!
//! A graph is n-ac when every n points lie on an arc. Repeated points add
//! nothing (pad with fresh points), so only placements of n distinct points
//! are checked; each orbit representative is realized and searched for a
//! covering arc.

pub mod covering;
pub mod placement;

use std::fmt;
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Multigraph;

pub use covering::{covering_arc, realize, ArcWitness, Realized};
pub use placement::{enumerate_placements, Placement, PlacementSpace};

use covering::placement_covered;

/// Highest n checked by default; 7-ac graphs are n-ac for every n.
pub const OMEGA_LEVEL: usize = 7;

const CHUNK: usize = 2048;

/// The largest n for which a graph is n-ac, or ω.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AcNumber {
    Finite(u8),
    Omega,
}

impl fmt::Display for AcNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AcNumber::Finite(k) => write!(f, "{k}"),
            AcNumber::Omega => f.write_str("omega"),
        }
    }
}

impl std::str::FromStr for AcNumber {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "omega" | "ω" => Ok(AcNumber::Omega),
            _ => s.parse::<u8>().map(AcNumber::Finite).map_err(|e| format!("{s}: {e}")),
        }
    }
}

impl Serialize for AcNumber {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            AcNumber::Finite(k) => s.serialize_u8(*k),
            AcNumber::Omega => s.serialize_str("omega"),
        }
    }
}

impl<'de> Deserialize<'de> for AcNumber {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u8),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(k) => Ok(AcNumber::Finite(k)),
            Raw::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// Per-level verdicts for n = 2..=7 together with the resulting ac-number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcProfile {
    /// `verdicts[n - 2]` for n in 2..=7; `None` above the evaluation cap.
    pub verdicts: [Option<bool>; 6],
    pub ac: AcNumber,
    /// Lexicographically least failing placement at level ac + 1, when
    /// requested and the graph is not ω-ac.
    pub counterexample: Option<Placement>,
}

impl AcProfile {
    pub fn verdict(&self, n: usize) -> Option<bool> {
        match n {
            0 | 1 => Some(true),
            2..=7 => self.verdicts[n - 2],
            _ => {
                if self.ac == AcNumber::Omega {
                    Some(true)
                } else {
                    Some(false)
                }
            }
        }
    }

    pub fn is_omega(&self) -> bool {
        self.ac == AcNumber::Omega
    }
}

/// How a level is decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Scan orbit representatives in ascending order and report the least
    /// failing one.
    LeastCounterexample,
    /// Stop at any failure; tries likely failures first.
    VerdictOnly,
}

/// n-ac decision procedure bound to one graph; symmetry data is computed
/// once and reused across levels.
pub struct AcDecider<'g> {
    graph: &'g Multigraph,
    space: PlacementSpace,
}

impl<'g> AcDecider<'g> {
    pub fn new(graph: &'g Multigraph) -> Result<Self> {
        graph.require_connected()?;
        Ok(AcDecider { graph, space: PlacementSpace::new(graph) })
    }

    pub fn graph(&self) -> &Multigraph {
        self.graph
    }

    fn covered(&self, p: &Placement) -> Result<bool> {
        placement_covered(self.graph, p)
    }

    /// First failing placement of a chunk, in chunk order.
    fn first_failure(&self, chunk: &[Placement]) -> Result<Option<Placement>> {
        let found = chunk
            .par_iter()
            .map(|p| self.covered(p).map(|ok| (!ok).then(|| p.clone())))
            .find_first(|r| !matches!(r, Ok(None)));
        found.unwrap_or(Ok(None))
    }

    /// Decides n-ac; on failure returns a failing placement (the least one
    /// in [`Mode::LeastCounterexample`]).
    pub fn check(&self, n: usize, mode: Mode) -> Result<Option<Placement>> {
        if mode == Mode::VerdictOnly {
            // Spread placements (one point per edge interior) fail most often.
            let mut spread = Vec::new();
            self.spread_placements(n, 0, &mut Placement::empty(self.graph.edge_count()), &mut spread);
            if let Some(p) = self.first_failure(&spread)? {
                return Ok(Some(p));
            }
        }
        let mut chunk = Vec::with_capacity(CHUNK);
        let mut outcome: Result<Option<Placement>> = Ok(None);
        let flow = self.space.for_each(n, |p| {
            chunk.push(p.clone());
            if chunk.len() == CHUNK {
                match self.first_failure(&chunk) {
                    Ok(None) => chunk.clear(),
                    other => {
                        outcome = other;
                        return ControlFlow::Break(());
                    }
                }
            }
            ControlFlow::Continue(())
        });
        if flow.is_continue() && !chunk.is_empty() {
            outcome = self.first_failure(&chunk);
        }
        outcome
    }

    fn spread_placements(&self, n: usize, from: usize, p: &mut Placement, out: &mut Vec<Placement>) {
        if n == 0 {
            out.push(self.space.orbit_min(p));
            return;
        }
        for e in from..self.graph.edge_count() {
            if self.graph.edge_count() - e < n {
                break;
            }
            p.interior[e] = 1;
            self.spread_placements(n - 1, e + 1, p, out);
            p.interior[e] = 0;
        }
        if from == 0 {
            out.sort();
            out.dedup();
        }
    }

    pub fn is_n_ac(&self, n: usize) -> Result<(bool, Option<Placement>)> {
        let fail = self.check(n, Mode::LeastCounterexample)?;
        Ok((fail.is_none(), fail))
    }

    /// Evaluates levels 2, 3, ... up to `cap` and stops at the first
    /// failure; every higher level fails too. In least-counterexample mode
    /// the failing level is scanned in order, so the reported placement is
    /// the least one of size ac + 1.
    pub fn profile(&self, cap: usize, want_counterexample: bool) -> Result<AcProfile> {
        let cap = cap.clamp(2, OMEGA_LEVEL);
        let mode = if want_counterexample { Mode::LeastCounterexample } else { Mode::VerdictOnly };
        let mut verdicts = [None; 6];
        let mut counterexample = None;
        let mut top = 1;
        for n in 2..=cap {
            match self.check(n, mode)? {
                None => {
                    verdicts[n - 2] = Some(true);
                    top = n;
                }
                Some(p) => {
                    for v in &mut verdicts[n - 2..cap - 1] {
                        *v = Some(false);
                    }
                    if want_counterexample {
                        counterexample = Some(p);
                    }
                    break;
                }
            }
        }
        let ac = if top == OMEGA_LEVEL { AcNumber::Omega } else { AcNumber::Finite(top as u8) };
        Ok(AcProfile { verdicts, ac, counterexample })
    }
}

/// True iff every `n` points of `g` lie on an arc; on failure also returns
/// the least failing placement.
pub fn is_n_ac(g: &Multigraph, n: usize) -> Result<(bool, Option<Placement>)> {
    AcDecider::new(g)?.is_n_ac(n)
}

/// Verdict only, without the least-counterexample guarantee.
pub fn is_n_ac_verdict(g: &Multigraph, n: usize) -> Result<bool> {
    Ok(AcDecider::new(g)?.check(n, Mode::VerdictOnly)?.is_none())
}

/// Full profile up to `cap` (at most 7) with the least counterexample.
pub fn ac_number(g: &Multigraph, cap: usize) -> Result<AcProfile> {
    AcDecider::new(g)?.profile(cap, true)
}

/// Profile without counterexample; failing levels try likely failures first.
pub fn ac_profile_fast(g: &Multigraph, cap: usize) -> Result<AcProfile> {
    AcDecider::new(g)?.profile(cap, false)
}

/// Re-decides n-ac on `g` with every edge subdivided `extra` more times and
/// reports whether the verdict agrees with the one on `g`.
pub fn refine_check(g: &Multigraph, n: usize, extra: usize) -> Result<bool> {
    let coarse = is_n_ac_verdict(g, n)?;
    let fine = is_n_ac_verdict(&g.subdivide_all(extra), n)?;
    Ok(coarse == fine)
}
