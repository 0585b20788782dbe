//! Exhaustive checks of the basic MV-algebra identities on one algebra.
//!
//! Each battery returns the first offending tuple, labelled, or `None` when
//! the identities hold everywhere.

use crate::algebra::{Elem, MvAlgebra};

/// Eight equivalent forms of `x ≤ y` evaluate identically for every pair.
pub fn order_equivalences(a: &MvAlgebra) -> Option<String> {
    let one = a.one();
    let zero = a.zero();
    for x in a.elements() {
        for y in a.elements() {
            let forms = [
                a.leq(x, y),
                a.oplus(a.star(x), y) == one,
                a.odot(x, a.star(y)) == zero,
                a.join(x, y) == y,
                a.elements().any(|z| a.oplus(x, z) == y),
                a.leq(a.star(y), a.star(x)),
                a.elements().all(|z| a.leq(a.oplus(x, z), a.oplus(y, z))),
                a.elements().all(|z| a.leq(a.odot(x, z), a.odot(y, z))),
            ];
            if forms.iter().any(|&f| f != forms[0]) {
                return Some(format!("({}, {}) gives {forms:?}", a.label(x), a.label(y)));
            }
        }
    }
    None
}

/// Ordering chain, distributivity, the four-way criterion and cancellation.
pub fn lattice_identities(a: &MvAlgebra) -> Option<String> {
    let (zero, one) = (a.zero(), a.one());
    for x in a.elements() {
        for y in a.elements() {
            let chain = [a.odot(x, y), a.meet(x, y), x, a.join(x, y), a.oplus(x, y)];
            let chain_y = [a.meet(x, y), y, a.join(x, y)];
            if !chain.windows(2).all(|w| a.leq(w[0], w[1]))
                || !chain_y.windows(2).all(|w| a.leq(w[0], w[1]))
            {
                return Some(format!(
                    "ordering chain fails at ({}, {})",
                    a.label(x),
                    a.label(y)
                ));
            }
            let forms = [
                a.oplus(x, y) == y,
                a.odot(x, y) == x,
                a.meet(x, a.star(y)) == zero,
                a.join(a.star(x), y) == one,
            ];
            if forms.iter().any(|&f| f != forms[0]) {
                return Some(format!(
                    "criterion differs at ({}, {}): {forms:?}",
                    a.label(x),
                    a.label(y)
                ));
            }
            for z in a.elements() {
                if a.oplus(x, a.meet(y, z)) != a.meet(a.oplus(x, y), a.oplus(x, z)) {
                    return Some(format!("⊕ over ∧ fails at {}", triple(a, x, y, z)));
                }
                if a.odot(x, a.join(y, z)) != a.join(a.odot(x, y), a.odot(x, z)) {
                    return Some(format!("⊙ over ∨ fails at {}", triple(a, x, y, z)));
                }
                if y != z && a.odot(x, y) == a.odot(x, z) && a.oplus(x, y) == a.oplus(x, z) {
                    return Some(format!("cancellation fails at {}", triple(a, x, y, z)));
                }
            }
        }
    }
    None
}

/// Ten equivalent descriptions of the Boolean elements.
pub fn boolean_equivalences(a: &MvAlgebra) -> Option<String> {
    let (zero, one) = (a.zero(), a.one());
    let boolean = |x: Elem| a.boolean_elements().contains(&x);
    for x in a.elements() {
        let s = a.star(x);
        let forms = [
            boolean(x),
            a.join(x, s) == one,
            a.meet(x, s) == zero,
            a.oplus(x, x) == x,
            a.odot(x, x) == x,
            a.oplus(s, s) == s,
            a.odot(s, s) == s,
            boolean(s),
            a.elements().all(|y| a.oplus(x, y) == a.join(x, y)),
            a.elements().all(|y| a.odot(x, y) == a.meet(x, y)),
        ];
        if forms.iter().any(|&f| f != forms[0]) {
            return Some(format!("{} gives {forms:?}", a.label(x)));
        }
    }
    None
}

/// Identities of the distance function, including both triangle inequalities.
pub fn distance_laws(a: &MvAlgebra) -> Option<String> {
    let zero = a.zero();
    for x in a.elements() {
        if a.distance(x, x) != zero
            || a.distance(x, zero) != x
            || a.distance(x, a.one()) != a.star(x)
        {
            return Some(format!("basic distance identities fail at {}", a.label(x)));
        }
        for y in a.elements() {
            if a.distance(x, y) != a.distance(y, x) {
                return Some(format!("asymmetric at ({}, {})", a.label(x), a.label(y)));
            }
            if a.distance(a.star(x), a.star(y)) != a.distance(x, y) {
                return Some(format!(
                    "d(x*, y*) ≠ d(x, y) at ({}, {})",
                    a.label(x),
                    a.label(y)
                ));
            }
            for z in a.elements() {
                let bound = a.oplus(a.distance(x, y), a.distance(y, z));
                if !a.leq(a.distance(x, z), bound) {
                    return Some(format!(
                        "triangle inequality fails at {}",
                        triple(a, x, y, z)
                    ));
                }
                for u in a.elements() {
                    let lhs = a.distance(a.oplus(x, z), a.oplus(y, u));
                    let rhs = a.oplus(a.distance(x, y), a.distance(z, u));
                    if !a.leq(lhs, rhs) {
                        return Some(format!(
                            "d(x⊕u, y⊕v) bound fails at ({}, {}, {}, {})",
                            a.label(x),
                            a.label(y),
                            a.label(z),
                            a.label(u)
                        ));
                    }
                }
            }
        }
    }
    None
}

/// `x ⊙ x* = 0` and `x ⊕ x* = 1` everywhere, plus at most one fixed point of *.
pub fn complement_laws(a: &MvAlgebra) -> Option<String> {
    for x in a.elements() {
        if a.odot(x, a.star(x)) != a.zero() || a.oplus(x, a.star(x)) != a.one() {
            return Some(format!("complement laws fail at {}", a.label(x)));
        }
    }
    let fixed = a.fixed_points_of_star();
    (fixed.len() > 1).then(|| format!("{} fixed points of *", fixed.len()))
}

fn triple(a: &MvAlgebra, x: Elem, y: Elem, z: Elem) -> String {
    format!("({}, {}, {})", a.label(x), a.label(y), a.label(z))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn batteries_hold_on_small_products() {
        let chains: Vec<MvAlgebra> = (2..5)
            .map(|n| MvAlgebra::lukasiewicz_chain(n).unwrap())
            .collect();
        let mut algebras = chains.clone();
        algebras.push(MvAlgebra::direct_product(&chains[..2]).unwrap());
        for a in &algebras {
            assert_eq!(order_equivalences(a), None);
            assert_eq!(lattice_identities(a), None);
            assert_eq!(boolean_equivalences(a), None);
            assert_eq!(distance_laws(a), None);
            assert_eq!(complement_laws(a), None);
        }
    }
}
