//! The zero-divisor graph `Γ(A)` and the ideal-based graph `Γ_I(A)`.

use crate::algebra::{Elem, MvAlgebra};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::ideal::Ideal;

/// `Γ(A)`: vertices `A \ {0, 1}`, edges `xy` when `x ⊙ y = 0`.
///
/// Vertex origins are element indices and labels are element labels. Orders
/// one and two give the null graph, the former after being rejected as trivial.
pub fn zero_divisor_graph(algebra: &MvAlgebra) -> Result<SimpleGraph> {
    algebra.require_nontrivial()?;
    let (zero, one) = (algebra.zero(), algebra.one());
    let vertices: Vec<Elem> = algebra
        .elements()
        .filter(|&x| x != zero && x != one)
        .collect();
    build(algebra, &vertices, |p| p == zero)
}

/// `Γ_I(A)`: vertices `A \ (I ∪ I*)`, edges `xy` when `x ⊙ y ∈ I`.
///
/// The vertex set is computed from the definition (elements outside `I` with
/// a partner outside `I` whose product lands in `I`) and from the closed form,
/// and the two must agree.
pub fn ideal_based_graph(algebra: &MvAlgebra, ideal: &Ideal) -> Result<SimpleGraph> {
    algebra.require_nontrivial()?;
    ideal.check_owner(algebra)?;
    if !ideal.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    let outside: Vec<Elem> = algebra.elements().filter(|&x| !ideal.contains(x)).collect();
    let by_definition: Vec<Elem> = outside
        .iter()
        .copied()
        .filter(|&x| outside.iter().any(|&y| ideal.contains(algebra.odot(x, y))))
        .collect();
    let closed_form: Vec<Elem> = algebra
        .elements()
        .filter(|&x| !ideal.contains(x) && !ideal.contains(algebra.star(x)))
        .collect();
    if by_definition != closed_form {
        return Err(Error::Invariant(format!(
            "vertex sets disagree for ideal {}: definition gives {} vertices, closed form {}",
            ideal.descriptor(),
            by_definition.len(),
            closed_form.len()
        )));
    }
    build(algebra, &closed_form, |p| ideal.contains(p))
}

fn build(
    algebra: &MvAlgebra,
    vertices: &[Elem],
    in_target: impl Fn(Elem) -> bool,
) -> Result<SimpleGraph> {
    let labels = vertices
        .iter()
        .map(|&x| algebra.label(x).to_string())
        .collect();
    let origin = vertices.iter().map(|x| x.index()).collect();
    let mut edges = Vec::new();
    for (i, &x) in vertices.iter().enumerate() {
        for (j, &y) in vertices.iter().enumerate().skip(i + 1) {
            if in_target(algebra.odot(x, y)) {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::with_origin(labels, origin, &edges)
}
