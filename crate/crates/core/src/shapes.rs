//! Builders for the named graphs used throughout tests, the corpus and the
//! classifier.

use crate::graph::Multigraph;

fn g(n: usize, edges: &[(usize, usize)]) -> Multigraph {
    Multigraph::from_edges(n, edges).expect("static shape is valid")
}

pub fn arc() -> Multigraph {
    g(2, &[(0, 1)])
}

/// Simple closed curve in its smoothed form: one vertex, one loop.
pub fn circle() -> Multigraph {
    g(1, &[(0, 0)])
}

pub fn figure_eight() -> Multigraph {
    g(1, &[(0, 0), (0, 0)])
}

/// Loop at vertex 0 with a pendant edge to vertex 1.
pub fn lollipop() -> Multigraph {
    g(2, &[(0, 0), (0, 1)])
}

pub fn dumbbell() -> Multigraph {
    g(2, &[(0, 0), (0, 1), (1, 1)])
}

pub fn theta() -> Multigraph {
    g(2, &[(0, 1), (0, 1), (0, 1)])
}

/// Centre 0, leaves 1..=3.
pub fn triod() -> Multigraph {
    star(3)
}

/// Centre 0 with `k` leaves.
pub fn star(k: usize) -> Multigraph {
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    g(k + 1, &edges)
}

/// Circle through two branch points (0, 1), each carrying one whisker.
pub fn circle_two_whiskers() -> Multigraph {
    g(4, &[(0, 1), (0, 1), (0, 2), (1, 3)])
}

/// Circle through 0, 1, 2 with the chords 0-1 and 1-2.
pub fn circle_two_chords() -> Multigraph {
    g(3, &[(0, 1), (1, 2), (2, 0), (0, 1), (1, 2)])
}

/// Circle on three rim vertices joined to a hub (the complete graph K4).
pub fn wheel3() -> Multigraph {
    g(4, &[(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2)])
}

pub fn k33() -> Multigraph {
    let mut edges = Vec::new();
    for a in 0..3 {
        for b in 3..6 {
            edges.push((a, b));
        }
    }
    g(6, &edges)
}

pub fn k5() -> Multigraph {
    let mut edges = Vec::new();
    for a in 0..5 {
        for b in a + 1..5 {
            edges.push((a, b));
        }
    }
    g(5, &edges)
}

/// Two concentric `k`-cycles joined by `k` spokes (the `k`-prism).
/// Outer vertices are `0..k`, inner `k..2k`.
pub fn double_circle_spokes(k: usize) -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        edges.push((k + i, k + (i + 1) % k));
        edges.push((i, k + i));
    }
    g(2 * k, &edges)
}

/// The path 0-1-2-3-4 with one pendant spoke at each of 1, 2 and 3.
pub fn caterpillar3() -> Multigraph {
    g(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 6), (3, 7)])
}

pub fn petersen() -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    g(10, &edges)
}

/// Every named shape, for table-driven tests.
pub fn all_named() -> Vec<(&'static str, Multigraph)> {
    vec![
        ("arc", arc()),
        ("circle", circle()),
        ("figure-eight", figure_eight()),
        ("lollipop", lollipop()),
        ("dumbbell", dumbbell()),
        ("theta", theta()),
        ("triod", triod()),
        ("star5", star(5)),
        ("circle-two-whiskers", circle_two_whiskers()),
        ("circle-two-chords", circle_two_chords()),
        ("wheel3", wheel3()),
        ("k33", k33()),
        ("k5", k5()),
        ("prism4", double_circle_spokes(4)),
        ("prism5", double_circle_spokes(5)),
        ("caterpillar3", caterpillar3()),
        ("petersen", petersen()),
    ]
}
