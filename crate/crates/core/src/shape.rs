//! Recognizers for the graph families that show up as zero-divisor graphs.

use serde::Serialize;

use crate::graph::SimpleGraph;

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ShapeReport {
    pub complete: bool,
    /// `K_{m,n}` with `m <= n`.
    pub complete_bipartite: Option<(usize, usize)>,
    /// `K_k ∨ ∅_m`: `k` universal vertices joined to an independent set of `m`.
    pub join_complete_empty: Option<(usize, usize)>,
    /// Path with this many edges.
    pub path: Option<usize>,
    /// `K_{1,m}` with this many leaves.
    pub star: Option<usize>,
}

pub fn classify_shape(g: &SimpleGraph) -> ShapeReport {
    if g.is_null() {
        return ShapeReport::default();
    }
    ShapeReport {
        complete: g.is_complete(),
        complete_bipartite: complete_bipartite(g),
        join_complete_empty: join_complete_empty(g),
        path: path_length(g),
        star: star_leaves(g),
    }
}

/// Proper 2-colouring of a connected graph, if one exists.
pub fn bipartition(g: &SimpleGraph) -> Option<Vec<bool>> {
    let n = g.vertex_count();
    let mut colour: Vec<Option<bool>> = vec![None; n];
    for start in 0..n {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(false);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let cu = colour[u].expect("coloured before push");
            for &w in g.neighbors(u) {
                match colour[w] {
                    None => {
                        colour[w] = Some(!cu);
                        stack.push(w);
                    }
                    Some(cw) if cw == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(colour.into_iter().map(|c| c.unwrap_or(false)).collect())
}

fn complete_bipartite(g: &SimpleGraph) -> Option<(usize, usize)> {
    if g.vertex_count() < 2 {
        return None;
    }
    let sides = bipartition(g)?;
    let left: Vec<usize> = (0..g.vertex_count()).filter(|&v| !sides[v]).collect();
    let right: Vec<usize> = (0..g.vertex_count()).filter(|&v| sides[v]).collect();
    if left.is_empty() || right.is_empty() {
        return None;
    }
    if left.len() * right.len() != g.edge_count() {
        return None;
    }
    Some((left.len().min(right.len()), left.len().max(right.len())))
}

fn join_complete_empty(g: &SimpleGraph) -> Option<(usize, usize)> {
    let n = g.vertex_count();
    if n < 2 {
        return None;
    }
    let universal: Vec<usize> = (0..n).filter(|&v| g.degree(v) + 1 == n).collect();
    let rest: Vec<usize> = (0..n).filter(|&v| g.degree(v) + 1 != n).collect();
    if universal.is_empty() {
        return None;
    }
    if rest.is_empty() {
        return Some((n - 1, 1));
    }
    let independent = rest
        .iter()
        .all(|&u| rest.iter().all(|&v| !g.adjacent(u, v)));
    independent.then_some((universal.len(), rest.len()))
}

fn is_connected(g: &SimpleGraph) -> bool {
    crate::metrics::bfs_distances(g, 0)
        .iter()
        .all(Option::is_some)
}

fn path_length(g: &SimpleGraph) -> Option<usize> {
    let n = g.vertex_count();
    if n == 1 {
        return Some(0);
    }
    let ends = (0..n).filter(|&v| g.degree(v) == 1).count();
    let inner = (0..n).filter(|&v| g.degree(v) == 2).count();
    (ends == 2 && ends + inner == n && g.edge_count() == n - 1 && is_connected(g)).then_some(n - 1)
}

fn star_leaves(g: &SimpleGraph) -> Option<usize> {
    let n = g.vertex_count();
    if n < 2 {
        return None;
    }
    let centre = (0..n).find(|&v| g.degree(v) + 1 == n)?;
    (0..n)
        .filter(|&v| v != centre)
        .all(|v| g.degree(v) == 1)
        .then_some(n - 1)
}
