//! Graphs with known ac-numbers and the batch check behind `verify-paper`.

use serde::Serialize;

use crate::arc::{ac_number, refine_check, AcNumber, OMEGA_LEVEL};
use crate::classify::{cross_check, homeo_class, is_obstruction, necessary_conditions, obstruction_7, HomeoClass};
use crate::error::Result;
use crate::graph::Multigraph;
use crate::planar::is_planar;
use crate::shapes;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    /// The published claim the expectations come from.
    pub citation: &'static str,
    pub build: fn() -> Multigraph,
    pub expected_ac: AcNumber,
    pub expected_class: HomeoClass,
    pub expected_planar: bool,
}

fn prism4() -> Multigraph {
    shapes::double_circle_spokes(4)
}

fn prism5() -> Multigraph {
    shapes::double_circle_spokes(5)
}

pub fn corpus() -> Vec<CorpusEntry> {
    use AcNumber::{Finite, Omega};
    use HomeoClass::*;
    let e = |name, citation, build, ac, class, planar| CorpusEntry {
        name,
        citation,
        build,
        expected_ac: ac,
        expected_class: class,
        expected_planar: planar,
    };
    vec![
        e("triod", "simple triod: 2-ac, not 3-ac; minimal", shapes::triod as fn() -> Multigraph, Finite(2), Other, true),
        e("circle-two-whiskers", "circle with two whiskers: 3-ac, not 4-ac; minimal", shapes::circle_two_whiskers, Finite(3), Other, true),
        e("circle-two-chords", "circle with two chords: 4-ac, not 5-ac; minimal", shapes::circle_two_chords, Finite(4), Other, true),
        e("wheel3", "circle with three spokes to a hub: 5-ac, not 6-ac; minimal", shapes::wheel3, Finite(5), Other, true),
        e("k33", "K3,3: 6-ac, not 7-ac; minimal", shapes::k33, Finite(6), Other, false),
        e("prism4", "double circle with 4 spokes: planar, 6-ac, not 7-ac", prism4, Finite(6), Other, true),
        e("prism5", "double circle with 5 spokes: planar, 6-ac, not 7-ac", prism5, Finite(6), Other, true),
        e("arc", "7-ac graphs: the arc", shapes::arc, Omega, Arc, true),
        e("circle", "7-ac graphs: the simple closed curve", shapes::circle, Omega, Circle, true),
        e("figure-eight", "7-ac graphs: the figure eight", shapes::figure_eight, Omega, FigureEight, true),
        e("lollipop", "7-ac graphs: the lollipop", shapes::lollipop, Omega, Lollipop, true),
        e("dumbbell", "7-ac graphs: the dumbbell", shapes::dumbbell, Omega, Dumbbell, true),
        e("theta", "7-ac graphs: the theta curve", shapes::theta, Omega, Theta, true),
    ]
}

pub fn entry(name: &str) -> Option<CorpusEntry> {
    corpus().into_iter().find(|e| e.name == name)
}

/// One line of a verification report.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub subject: String,
    pub what: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    fn new(subject: &str, what: &str, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Check { subject: subject.into(), what: what.into(), pass: expected == actual, expected, actual }
    }
}

/// Checks one entry: exact ac-number, class, planarity, the
/// characterization against brute force (also at n = 8 for the 7-ac
/// shapes), branch-point rules against the computed profile, the explicit
/// 7-point obstruction, and verdict stability under one extra subdivision.
pub fn verify_entry(e: &CorpusEntry, refine: bool) -> Result<Vec<Check>> {
    let g = (e.build)();
    let profile = ac_number(&g, OMEGA_LEVEL)?;
    let mut out = vec![
        Check::new(e.name, "ac", e.expected_ac, profile.ac),
        Check::new(e.name, "class", e.expected_class, homeo_class(&g)),
        Check::new(e.name, "planar", e.expected_planar, is_planar(&g)?),
        Check::new(e.name, "cross-check", true, cross_check(&g, e.expected_class != HomeoClass::Other)?),
    ];
    let report = necessary_conditions(&g);
    let sound = report.fired.iter().all(|r| profile.verdict(r.fails_at()) == Some(false));
    out.push(Check::new(e.name, "rules-sound", true, sound));
    if report.branch_points >= 3 {
        let p = obstruction_7(&g)?;
        out.push(Check::new(e.name, "obstruction", true, is_obstruction(&g, &p)?));
    }
    if refine {
        let mut agree = true;
        for n in 2..=OMEGA_LEVEL {
            agree &= refine_check(&g, n, 1)?;
        }
        out.push(Check::new(e.name, "refine", true, agree));
    }
    Ok(out)
}
