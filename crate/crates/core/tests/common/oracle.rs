//! Brute-force reference computations that read only the raw `⊕`/`*` tables.

use mvgraph_core::{Measure, MvAlgebra, SimpleGraph};

pub struct Tables {
    pub n: usize,
    pub oplus: Vec<Vec<usize>>,
    pub star: Vec<usize>,
    pub zero: usize,
}

impl Tables {
    pub fn of(a: &MvAlgebra) -> Self {
        Tables {
            n: a.order(),
            oplus: a.oplus_table(),
            star: a.star_table(),
            zero: a.zero().index(),
        }
    }

    pub fn one(&self) -> usize {
        self.star[self.zero]
    }

    pub fn odot(&self, x: usize, y: usize) -> usize {
        self.star[self.oplus[self.star[x]][self.star[y]]]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.oplus[self.star[x]][y] == self.one()
    }

    pub fn dist(&self, x: usize, y: usize) -> usize {
        self.oplus[self.odot(x, self.star[y])][self.odot(y, self.star[x])]
    }

    fn is_ideal_mask(&self, mask: u32) -> bool {
        let has = |x: usize| mask >> x & 1 == 1;
        if !has(self.zero) {
            return false;
        }
        for x in (0..self.n).filter(|&x| has(x)) {
            for y in 0..self.n {
                if has(y) && !has(self.oplus[x][y]) {
                    return false;
                }
                if self.leq(y, x) && !has(y) {
                    return false;
                }
            }
        }
        true
    }

    /// Every ideal, as sorted index lists in ascending (size, members) order.
    pub fn ideals(&self) -> Vec<Vec<usize>> {
        assert!(self.n <= 20, "subset scan is limited to 20 elements");
        let mut out: Vec<Vec<usize>> = (0u32..1 << self.n)
            .filter(|&m| self.is_ideal_mask(m))
            .map(|m| (0..self.n).filter(|&x| m >> x & 1 == 1).collect())
            .collect();
        out.sort_by(|p, q| (p.len(), p).cmp(&(q.len(), q)));
        out
    }

    /// Vertices and adjacency of Γ_I(A), straight from the definition.
    pub fn ideal_graph(&self, ideal: &[usize]) -> (Vec<usize>, Vec<Vec<bool>>) {
        let in_i = |x: usize| ideal.contains(&x);
        let vertices: Vec<usize> = (0..self.n)
            .filter(|&x| !in_i(x) && !in_i(self.star[x]))
            .collect();
        let adj = vertices
            .iter()
            .map(|&x| {
                vertices
                    .iter()
                    .map(|&y| x != y && in_i(self.odot(x, y)))
                    .collect()
            })
            .collect();
        (vertices, adj)
    }

    /// Number of blocks of `≡_I` and the size of each element's block.
    pub fn blocks(&self, ideal: &[usize]) -> (usize, Vec<usize>) {
        let same = |x: usize, y: usize| ideal.contains(&self.dist(x, y));
        let sizes = (0..self.n)
            .map(|x| (0..self.n).filter(|&y| same(x, y)).count())
            .collect();
        let reps = (0..self.n).filter(|&x| (0..x).all(|y| !same(x, y))).count();
        (reps, sizes)
    }

    /// Whether every block is idempotent under `⊕`, i.e. `A/I` is Boolean.
    pub fn boolean_quotient(&self, ideal: &[usize]) -> bool {
        (0..self.n).all(|x| ideal.contains(&self.dist(self.oplus[x][x], x)))
    }
}

pub fn adjacency(g: &SimpleGraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    (0..n)
        .map(|u| (0..n).map(|v| g.adjacent(u, v)).collect())
        .collect()
}

const FAR: usize = usize::MAX / 4;

fn floyd_warshall(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut d: Vec<Vec<usize>> = (0..n)
        .map(|u| {
            (0..n)
                .map(|v| {
                    if u == v {
                        0
                    } else if adj[u][v] {
                        1
                    } else {
                        FAR
                    }
                })
                .collect()
        })
        .collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

pub fn diameter(adj: &[Vec<bool>]) -> Measure {
    if adj.is_empty() {
        return Measure::NullGraph;
    }
    let worst = floyd_warshall(adj).into_iter().flatten().max().unwrap();
    if worst >= FAR {
        Measure::Infinite
    } else {
        Measure::Finite(worst)
    }
}

/// Shortest cycle: for each edge `uv`, the shortest path from `u` to `v` avoiding it, plus one.
pub fn girth(adj: &[Vec<bool>]) -> Measure {
    if adj.is_empty() {
        return Measure::NullGraph;
    }
    let n = adj.len();
    let mut best = FAR;
    for u in 0..n {
        for v in (u + 1)..n {
            if !adj[u][v] {
                continue;
            }
            let mut cut = adj.to_vec();
            cut[u][v] = false;
            cut[v][u] = false;
            let d = floyd_warshall(&cut)[u][v];
            if d < FAR {
                best = best.min(d + 1);
            }
        }
    }
    if best >= FAR {
        Measure::Infinite
    } else {
        Measure::Finite(best)
    }
}
