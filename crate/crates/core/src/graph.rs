//! Simple undirected graphs with labeled vertices.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

/// A loop-free undirected graph without parallel edges.
///
/// Vertices are positions `0..n`. Each vertex carries a unique label and an
/// origin index, which for graphs built from an algebra is the element the
/// vertex stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    origin: Vec<usize>,
    adjacency: Vec<bool>,
    neighbors: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn new(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let origin = (0..labels.len()).collect();
        Self::with_origin(labels, origin, edges)
    }

    pub(crate) fn with_origin(
        labels: Vec<String>,
        origin: Vec<usize>,
        edges: &[(usize, usize)],
    ) -> Result<Self> {
        let n = labels.len();
        let mut seen = HashSet::with_capacity(n);
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut adjacency = vec![false; n * n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::ForeignVertex(u));
            }
            if v >= n {
                return Err(Error::ForeignVertex(v));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            adjacency[u * n + v] = true;
            adjacency[v * n + u] = true;
        }
        let neighbors = (0..n)
            .map(|u| (0..n).filter(|&v| adjacency[u * n + v]).collect())
            .collect();
        Ok(SimpleGraph {
            labels,
            origin,
            adjacency,
            neighbors,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// The graph with no vertices.
    pub fn is_null(&self) -> bool {
        self.labels.is_empty()
    }

    /// No edges (the null graph included).
    pub fn is_edgeless(&self) -> bool {
        self.neighbors.iter().all(Vec::is_empty)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn origin(&self, v: usize) -> usize {
        self.origin[v]
    }

    /// Vertex standing for the given origin index, if any.
    pub fn vertex_of(&self, origin: usize) -> Option<usize> {
        self.origin.iter().position(|&o| o == origin)
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u * self.labels.len() + v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count())
            .flat_map(|u| {
                self.neighbors[u]
                    .iter()
                    .filter(move |&&v| v > u)
                    .map(move |&v| (u, v))
            })
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.neighbors.iter().all(|ns| ns.len() + 1 == n)
    }

    /// Renders Graphviz DOT with vertices and edges in index order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for l in &self.labels {
            let _ = writeln!(out, "  {};", dot_quote(l));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(
                out,
                "  {} -- {};",
                dot_quote(&self.labels[u]),
                dot_quote(&self.labels[v])
            );
        }
        out.push_str("}\n");
        out
    }

    pub fn to_export(&self) -> GraphExport {
        GraphExport {
            vertices: self.labels.clone(),
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

fn dot_quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// JSON shape of an exported graph: `{"vertices": [...], "edges": [[i, j], ...]}`.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct GraphExport {
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// `K_n`.
pub fn make_complete(n: usize) -> SimpleGraph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    SimpleGraph::new(numbered("v", n), &edges).expect("complete graph is simple")
}

/// `∅_n`, the edgeless graph on `n` vertices.
pub fn make_empty(n: usize) -> SimpleGraph {
    SimpleGraph::new(numbered("v", n), &[]).expect("empty graph is simple")
}

/// `K_{m,n}`: the first `m` vertices form one side.
pub fn make_complete_bipartite(m: usize, n: usize) -> SimpleGraph {
    let edges: Vec<_> = (0..m)
        .flat_map(|u| (m..m + n).map(move |v| (u, v)))
        .collect();
    SimpleGraph::new(numbered("v", m + n), &edges).expect("complete bipartite graph is simple")
}

/// `G ∨ H`: disjoint union plus every edge between the two parts.
///
/// Labels are kept when they stay unique, otherwise prefixed with `g.`/`h.`.
pub fn graph_join(g: &SimpleGraph, h: &SimpleGraph) -> SimpleGraph {
    let left: HashSet<&String> = g.labels.iter().collect();
    let clash = h.labels.iter().any(|l| left.contains(l));
    let labels: Vec<String> = if clash {
        g.labels
            .iter()
            .map(|l| format!("g.{l}"))
            .chain(h.labels.iter().map(|l| format!("h.{l}")))
            .collect()
    } else {
        g.labels.iter().chain(&h.labels).cloned().collect()
    };
    let offset = g.vertex_count();
    let mut edges = g.edges();
    edges.extend(h.edges().into_iter().map(|(u, v)| (u + offset, v + offset)));
    for u in 0..offset {
        for v in 0..h.vertex_count() {
            edges.push((u, v + offset));
        }
    }
    SimpleGraph::new(labels, &edges).expect("join of simple graphs is simple")
}

/// The subgraph induced by `subset`, keeping labels and origins.
pub fn induced_subgraph(g: &SimpleGraph, subset: &[usize]) -> Result<SimpleGraph> {
    let mut keep: Vec<usize> = subset.to_vec();
    keep.sort_unstable();
    keep.dedup();
    if let Some(&bad) = keep.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(Error::ForeignVertex(bad));
    }
    let labels = keep.iter().map(|&v| g.labels[v].clone()).collect();
    let origin = keep.iter().map(|&v| g.origin[v]).collect();
    let mut edges = Vec::new();
    for (i, &u) in keep.iter().enumerate() {
        for (j, &v) in keep.iter().enumerate().skip(i + 1) {
            if g.adjacent(u, v) {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::with_origin(labels, origin, &edges)
}
