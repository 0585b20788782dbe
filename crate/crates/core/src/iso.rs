//! Isomorphism tests for small graphs and small MV-algebras.
//!
//! Both matchers are exact backtracking searches with a node budget. Running
//! out of budget is reported as [`Error::BudgetExceeded`], never as "not
//! isomorphic". Every witness is replayed against the inputs before it is
//! returned.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{Elem, MvAlgebra};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub const DEFAULT_GRAPH_BUDGET: u64 = 2_000_000;
pub const DEFAULT_ALGEBRA_BUDGET: u64 = 2_000_000;

/// A bijection given as `mapping[i] = image of i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct IsomorphismWitness {
    pub mapping: Vec<usize>,
}

impl IsomorphismWitness {
    pub fn identity(n: usize) -> Self {
        IsomorphismWitness {
            mapping: (0..n).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.mapping.len()];
        for (i, &j) in self.mapping.iter().enumerate() {
            inv[j] = i;
        }
        IsomorphismWitness { mapping: inv }
    }
}

/// Checks that `w` is a bijection `V(g) → V(h)` preserving adjacency both ways.
pub fn verify_graph_witness(g: &SimpleGraph, h: &SimpleGraph, w: &IsomorphismWitness) -> bool {
    let n = g.vertex_count();
    if h.vertex_count() != n || w.mapping.len() != n || !is_permutation(&w.mapping) {
        return false;
    }
    (0..n).all(|u| (0..n).all(|v| g.adjacent(u, v) == h.adjacent(w.mapping[u], w.mapping[v])))
}

/// Checks that `w` is a bijection `A → B` sending 0 to 0 and preserving ⊕ and *.
pub fn verify_algebra_witness(a: &MvAlgebra, b: &MvAlgebra, w: &IsomorphismWitness) -> bool {
    let n = a.order();
    if b.order() != n || w.mapping.len() != n || !is_permutation(&w.mapping) {
        return false;
    }
    let f = |x: Elem| w.mapping[x.index()];
    if f(a.zero()) != b.zero().index() {
        return false;
    }
    a.elements().all(|x| {
        f(a.star(x)) == b.star(Elem::new(f(x))).index()
            && a.elements()
                .all(|y| f(a.oplus(x, y)) == b.oplus(Elem::new(f(x)), Elem::new(f(y))).index())
    })
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter()
        .all(|&i| i < p.len() && !std::mem::replace(&mut seen[i], true))
}

pub fn graph_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> Result<Option<IsomorphismWitness>> {
    graph_isomorphic_with_budget(g, h, DEFAULT_GRAPH_BUDGET)
}

pub fn graph_isomorphic_with_budget(
    g: &SimpleGraph,
    h: &SimpleGraph,
    budget: u64,
) -> Result<Option<IsomorphismWitness>> {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let (cg, ch) = refine_colors(g, h);
    let histogram = |c: &[usize]| {
        let mut m = BTreeMap::new();
        for &x in c {
            *m.entry(x).or_insert(0usize) += 1;
        }
        m
    };
    let class_size = histogram(&cg);
    if class_size != histogram(&ch) {
        return Ok(None);
    }

    let order = search_order(g, &cg, &class_size);
    let mut search = GraphSearch {
        g,
        h,
        cg: &cg,
        ch: &ch,
        order: &order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        nodes: 0,
        budget,
    };
    if !search.extend(0)? {
        return Ok(None);
    }
    let witness = IsomorphismWitness {
        mapping: search.map,
    };
    if !verify_graph_witness(g, h, &witness) {
        return Err(Error::Invariant("graph witness failed replay".into()));
    }
    Ok(Some(witness))
}

/// Joint colour refinement on both graphs, starting from degrees.
///
/// Colours are canonical across the pair, so differing histograms prove the
/// graphs non-isomorphic.
fn refine_colors(g: &SimpleGraph, h: &SimpleGraph) -> (Vec<usize>, Vec<usize>) {
    let mut cg: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    let mut ch: Vec<usize> = (0..h.vertex_count()).map(|v| h.degree(v)).collect();
    let mut classes = 0;
    loop {
        let signature = |graph: &SimpleGraph, colors: &[usize], v: usize| {
            let mut ns: Vec<usize> = graph.neighbors(v).iter().map(|&w| colors[w]).collect();
            ns.sort_unstable();
            (colors[v], ns)
        };
        let sg: Vec<_> = (0..g.vertex_count())
            .map(|v| signature(g, &cg, v))
            .collect();
        let sh: Vec<_> = (0..h.vertex_count())
            .map(|v| signature(h, &ch, v))
            .collect();
        let mut ids = BTreeMap::new();
        for s in sg.iter().chain(&sh) {
            ids.entry(s.clone()).or_insert(0usize);
        }
        for (k, v) in ids.values_mut().enumerate() {
            *v = k;
        }
        cg = sg.iter().map(|s| ids[s]).collect();
        ch = sh.iter().map(|s| ids[s]).collect();
        if ids.len() == classes {
            return (cg, ch);
        }
        classes = ids.len();
    }
}

/// Vertices of `g` in matching order: start from the rarest colour (ties by
/// higher degree), then keep picking the vertex with most already-placed
/// neighbours so adjacency constraints bite early.
fn search_order(
    g: &SimpleGraph,
    colors: &[usize],
    class_size: &BTreeMap<usize, usize>,
) -> Vec<usize> {
    let n = g.vertex_count();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| {
                (
                    std::cmp::Reverse(links[v]),
                    class_size[&colors[v]],
                    std::cmp::Reverse(g.degree(v)),
                    v,
                )
            })
            .expect("an unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for &w in g.neighbors(next) {
            links[w] += 1;
        }
    }
    order
}

struct GraphSearch<'a> {
    g: &'a SimpleGraph,
    h: &'a SimpleGraph,
    cg: &'a [usize],
    ch: &'a [usize],
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl GraphSearch<'_> {
    fn extend(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let u = self.order[depth];
        for x in 0..self.h.vertex_count() {
            if self.used[x] || self.cg[u] != self.ch[x] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&p| self.g.adjacent(u, p) == self.h.adjacent(x, self.map[p]));
            if !consistent {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded {
                    budget: self.budget,
                });
            }
            self.map[u] = x;
            self.used[x] = true;
            if self.extend(depth + 1)? {
                return Ok(true);
            }
            self.used[x] = false;
            self.map[u] = usize::MAX;
        }
        Ok(false)
    }
}

pub fn algebra_isomorphic(a: &MvAlgebra, b: &MvAlgebra) -> Result<Option<IsomorphismWitness>> {
    algebra_isomorphic_with_budget(a, b, DEFAULT_ALGEBRA_BUDGET)
}

pub fn algebra_isomorphic_with_budget(
    a: &MvAlgebra,
    b: &MvAlgebra,
    budget: u64,
) -> Result<Option<IsomorphismWitness>> {
    let n = a.order();
    if n != b.order() {
        return Ok(None);
    }
    let inv_a: Vec<ElementInvariant> = a.elements().map(|x| ElementInvariant::of(a, x)).collect();
    let inv_b: Vec<ElementInvariant> = b.elements().map(|x| ElementInvariant::of(b, x)).collect();
    let mut sorted_a = inv_a.clone();
    let mut sorted_b = inv_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return Ok(None);
    }

    let mut search = AlgebraSearch {
        a,
        b,
        inv_a: &inv_a,
        inv_b: &inv_b,
        fwd: vec![usize::MAX; n],
        bwd: vec![usize::MAX; n],
        mapped: Vec::with_capacity(n),
        nodes: 0,
        budget,
    };
    if !search.assign(a.zero(), b.zero()) || !search.assign(a.one(), b.one()) {
        return Ok(None);
    }
    if !search.extend()? {
        return Ok(None);
    }
    let witness = IsomorphismWitness {
        mapping: search.fwd,
    };
    if !verify_algebra_witness(a, b, &witness) {
        return Err(Error::Invariant("algebra witness failed replay".into()));
    }
    Ok(Some(witness))
}

/// Isomorphism-invariant data of one element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct ElementInvariant {
    boolean: bool,
    fixed: bool,
    below: usize,
    above: usize,
    /// Steps until `x, 2x, 3x, ...` stops growing.
    saturation: usize,
}

impl ElementInvariant {
    fn of(a: &MvAlgebra, x: Elem) -> Self {
        let mut saturation = 0;
        let mut cur = x;
        loop {
            let next = a.oplus(cur, x);
            if next == cur {
                break;
            }
            cur = next;
            saturation += 1;
        }
        ElementInvariant {
            boolean: a.is_boolean(x),
            fixed: a.star(x) == x,
            below: a.elements().filter(|&y| a.leq(y, x)).count(),
            above: a.elements().filter(|&y| a.leq(x, y)).count(),
            saturation,
        }
    }
}

struct AlgebraSearch<'a> {
    a: &'a MvAlgebra,
    b: &'a MvAlgebra,
    inv_a: &'a [ElementInvariant],
    inv_b: &'a [ElementInvariant],
    fwd: Vec<usize>,
    bwd: Vec<usize>,
    /// Trail of mapped elements of `a`, in assignment order.
    mapped: Vec<Elem>,
    nodes: u64,
    budget: u64,
}

impl AlgebraSearch<'_> {
    /// Records `x ↦ y` and every image it forces through ⊕ and *.
    /// Returns false on a conflict; the caller undoes via the trail.
    fn assign(&mut self, x: Elem, y: Elem) -> bool {
        let mut pending = vec![(x, y)];
        while let Some((x, y)) = pending.pop() {
            let (xi, yi) = (x.index(), y.index());
            match (self.fwd[xi], self.bwd[yi]) {
                (fx, _) if fx == yi => continue,
                (usize::MAX, usize::MAX) => {}
                _ => return false,
            }
            if self.inv_a[xi] != self.inv_b[yi] {
                return false;
            }
            self.fwd[xi] = yi;
            self.bwd[yi] = xi;
            self.mapped.push(x);
            pending.push((self.a.star(x), self.b.star(y)));
            for k in 0..self.mapped.len() {
                let z = self.mapped[k];
                let fz = Elem::new(self.fwd[z.index()]);
                pending.push((self.a.oplus(x, z), self.b.oplus(y, fz)));
                pending.push((self.a.odot(x, z), self.b.odot(y, fz)));
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.mapped.len() > mark {
            let x = self.mapped.pop().expect("trail longer than mark");
            let y = self.fwd[x.index()];
            self.fwd[x.index()] = usize::MAX;
            self.bwd[y] = usize::MAX;
        }
    }

    fn extend(&mut self) -> Result<bool> {
        let Some(x) = self
            .a
            .elements()
            .find(|x| self.fwd[x.index()] == usize::MAX)
        else {
            return Ok(true);
        };
        for y in self.b.elements() {
            if self.bwd[y.index()] != usize::MAX || self.inv_a[x.index()] != self.inv_b[y.index()] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded {
                    budget: self.budget,
                });
            }
            let mark = self.mapped.len();
            if self.assign(x, y) && self.extend()? {
                return Ok(true);
            }
            self.undo_to(mark);
        }
        Ok(false)
    }
}

/// Orders `k_1 ≤ ... ≤ k_m` with `A ≅ L_{k_1} × ... × L_{k_m}`.
///
/// Each atom `e` of the Boolean elements cuts out the interval `[0, e]`, which
/// must be a chain; the sizes of those intervals are the factor orders. The
/// answer is confirmed by finding an isomorphism with the rebuilt product.
pub fn chain_decomposition(a: &MvAlgebra) -> Result<Vec<usize>> {
    a.require_nontrivial()?;
    let zero = a.zero();
    let boolean = a.boolean_elements();
    let atoms: Vec<Elem> = boolean
        .iter()
        .copied()
        .filter(|&e| e != zero)
        .filter(|&e| !boolean.iter().any(|&b| b != zero && b != e && a.leq(b, e)))
        .collect();
    let mut sizes = Vec::with_capacity(atoms.len());
    for &e in &atoms {
        let interval: Vec<Elem> = a.elements().filter(|&x| a.leq(x, e)).collect();
        let total = interval
            .iter()
            .all(|&x| interval.iter().all(|&y| a.leq(x, y) || a.leq(y, x)));
        if !total {
            return Err(Error::DecompositionFailed(format!(
                "interval below atom {} is not a chain",
                a.label(e)
            )));
        }
        sizes.push(interval.len());
    }
    sizes.sort_unstable();
    if sizes.iter().product::<usize>() != a.order() {
        return Err(Error::DecompositionFailed(format!(
            "factor orders {sizes:?} do not multiply to {}",
            a.order()
        )));
    }
    let chains = sizes
        .iter()
        .map(|&k| MvAlgebra::lukasiewicz_chain(k))
        .collect::<Result<Vec<_>>>()?;
    let rebuilt = MvAlgebra::direct_product(&chains)?;
    match algebra_isomorphic(a, &rebuilt)? {
        Some(_) => Ok(sizes),
        None => Err(Error::DecompositionFailed(format!(
            "algebra is not isomorphic to the product of chains {sizes:?}"
        ))),
    }
}

/// `"L2xL2xL3"`-style name for a list of chain orders.
pub fn chain_descriptor(orders: &[usize]) -> String {
    orders
        .iter()
        .map(|k| format!("L{k}"))
        .collect::<Vec<_>>()
        .join("x")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{graph_join, make_complete, make_complete_bipartite, make_empty};

    fn chain(n: usize) -> MvAlgebra {
        MvAlgebra::lukasiewicz_chain(n).unwrap()
    }

    fn product(ns: &[usize]) -> MvAlgebra {
        let fs: Vec<_> = ns.iter().map(|&n| chain(n)).collect();
        MvAlgebra::direct_product(&fs).unwrap()
    }

    #[test]
    fn degree_sequences_separate_k3_and_star() {
        let star = make_complete_bipartite(1, 3);
        assert_eq!(graph_isomorphic(&make_complete(3), &star).unwrap(), None);
        assert_eq!(graph_isomorphic(&make_complete(4), &star).unwrap(), None);
    }

    #[test]
    fn bipartite_as_join_of_empties() {
        let j = graph_join(&make_empty(3), &make_empty(3));
        let w = graph_isomorphic(&j, &make_complete_bipartite(3, 3))
            .unwrap()
            .unwrap();
        assert!(verify_graph_witness(&j, &make_complete_bipartite(3, 3), &w));
    }

    #[test]
    fn regular_graphs_need_search() {
        // C6 and two triangles are both 2-regular on six vertices
        let labels = || (0..6).map(|i| i.to_string()).collect::<Vec<_>>();
        let c6 =
            SimpleGraph::new(labels(), &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let tt =
            SimpleGraph::new(labels(), &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(graph_isomorphic(&c6, &tt).unwrap(), None);
        let shuffled =
            SimpleGraph::new(labels(), &[(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]).unwrap();
        assert!(graph_isomorphic(&c6, &shuffled).unwrap().is_some());
    }

    #[test]
    fn budget_is_reported() {
        let g = make_empty(6);
        assert!(matches!(
            graph_isomorphic_with_budget(&g, &g, 2),
            Err(Error::BudgetExceeded { budget: 2 })
        ));
    }

    #[test]
    fn chain_is_not_boolean() {
        assert_eq!(
            algebra_isomorphic(&chain(4), &product(&[2, 2])).unwrap(),
            None
        );
    }

    #[test]
    fn self_isomorphism() {
        let a = product(&[2, 2, 3]);
        let w = algebra_isomorphic(&a, &a).unwrap().unwrap();
        assert!(verify_algebra_witness(&a, &a, &w));
    }

    #[test]
    fn factor_order_does_not_matter() {
        let a = product(&[3, 2, 2]);
        let b = product(&[2, 2, 3]);
        let w = algebra_isomorphic(&a, &b).unwrap().unwrap();
        assert!(verify_algebra_witness(&a, &b, &w));
        assert!(verify_algebra_witness(&b, &a, &w.inverse()));
    }

    #[test]
    fn same_order_different_shape() {
        assert_eq!(
            algebra_isomorphic(&product(&[2, 6]), &product(&[3, 4])).unwrap(),
            None
        );
        assert_eq!(
            algebra_isomorphic(&chain(12), &product(&[2, 2, 3])).unwrap(),
            None
        );
    }

    #[test]
    fn decompositions() {
        assert_eq!(chain_decomposition(&chain(7)).unwrap(), vec![7]);
        assert_eq!(chain_decomposition(&product(&[2, 2])).unwrap(), vec![2, 2]);
        assert_eq!(
            chain_decomposition(&product(&[3, 2, 2])).unwrap(),
            vec![2, 2, 3]
        );
        assert_eq!(chain_decomposition(&product(&[4, 3])).unwrap(), vec![3, 4]);
        assert_eq!(chain_descriptor(&[2, 2, 3]), "L2xL2xL3");
    }

    #[test]
    fn witness_checks_reject_non_bijections() {
        let a = chain(3);
        assert!(!verify_algebra_witness(
            &a,
            &a,
            &IsomorphismWitness {
                mapping: vec![0, 0, 2]
            }
        ));
        assert!(!verify_algebra_witness(
            &a,
            &a,
            &IsomorphismWitness {
                mapping: vec![2, 1, 0]
            }
        ));
        assert!(verify_algebra_witness(
            &a,
            &a,
            &IsomorphismWitness::identity(3)
        ));
    }
}
