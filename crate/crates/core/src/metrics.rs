//! Connectivity, diameter and girth.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::SimpleGraph;

/// A graph length that may be infinite or undefined.
///
/// Serializes as a number, the string `"inf"`, or `null` for the null graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Measure {
    Finite(usize),
    Infinite,
    /// The graph has no vertices, so the quantity is undefined.
    NullGraph,
}

impl Measure {
    pub fn finite(self) -> Option<usize> {
        match self {
            Measure::Finite(k) => Some(k),
            _ => None,
        }
    }

    pub fn is(self, k: usize) -> bool {
        self == Measure::Finite(k)
    }

    /// Order with every finite value below infinity; undefined otherwise.
    pub fn compare(self, other: Measure) -> Option<Ordering> {
        use Measure::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Some(a.cmp(&b)),
            (Finite(_), Infinite) => Some(Ordering::Less),
            (Infinite, Finite(_)) => Some(Ordering::Greater),
            (Infinite, Infinite) => Some(Ordering::Equal),
            _ => None,
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measure::Finite(k) => write!(f, "{k}"),
            Measure::Infinite => f.write_str("inf"),
            Measure::NullGraph => f.write_str("null"),
        }
    }
}

impl Serialize for Measure {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Measure::Finite(k) => s.serialize_u64(*k as u64),
            Measure::Infinite => s.serialize_str("inf"),
            Measure::NullGraph => s.serialize_none(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphMetrics {
    pub vertices: usize,
    pub edges: usize,
    pub is_null: bool,
    /// False for the null graph.
    pub connected: bool,
    pub diameter: Measure,
    pub girth: Measure,
}

/// BFS distances from `source`; `None` marks unreachable vertices.
pub fn bfs_distances(g: &SimpleGraph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued vertices have a distance");
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Length of the shortest cycle found by a BFS rooted at `root`.
///
/// The minimum of this over all roots is the girth.
fn shortest_cycle_from(g: &SimpleGraph, root: usize) -> Option<usize> {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    let mut best: Option<usize> = None;
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            } else if parent[u] != w {
                let len = dist[u] + dist[w] + 1;
                best = Some(best.map_or(len, |b| b.min(len)));
            }
        }
    }
    best
}

pub fn girth(g: &SimpleGraph) -> Measure {
    if g.is_null() {
        return Measure::NullGraph;
    }
    (0..g.vertex_count())
        .filter_map(|v| shortest_cycle_from(g, v))
        .min()
        .map_or(Measure::Infinite, Measure::Finite)
}

/// Largest eccentricity, or infinity when some pair is disconnected.
pub fn diameter(g: &SimpleGraph) -> Measure {
    if g.is_null() {
        return Measure::NullGraph;
    }
    let mut diam = 0;
    for v in 0..g.vertex_count() {
        for d in bfs_distances(g, v) {
            match d {
                Some(d) => diam = diam.max(d),
                None => return Measure::Infinite,
            }
        }
    }
    Measure::Finite(diam)
}

pub fn metrics(g: &SimpleGraph) -> GraphMetrics {
    let diameter = diameter(g);
    GraphMetrics {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        is_null: g.is_null(),
        connected: matches!(diameter, Measure::Finite(_)),
        diameter,
        girth: girth(g),
    }
}
