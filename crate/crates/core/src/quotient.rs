//! Quotient algebras `A/I` for proper ideals `I`.

use crate::algebra::{Elem, MvAlgebra};
use crate::error::{Error, Result};
use crate::ideal::Ideal;

/// The partition `A/≡_I` together with its induced MV-algebra.
///
/// Blocks are numbered by their smallest member, which also serves as the
/// representative used to define the quotient tables.
#[derive(Debug, Clone)]
pub struct QuotientAlgebra {
    ideal: Ideal,
    classes: Vec<Vec<Elem>>,
    projection: Vec<usize>,
    quotient: MvAlgebra,
}

impl QuotientAlgebra {
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// Blocks in order of their representatives, each sorted.
    pub fn classes(&self) -> &[Vec<Elem>] {
        &self.classes
    }

    pub fn representative(&self, block: usize) -> Elem {
        self.classes[block][0]
    }

    /// The induced algebra; its element `k` is block `k`.
    pub fn algebra(&self) -> &MvAlgebra {
        &self.quotient
    }

    /// The natural homomorphism `x ↦ x/I` as a block index.
    pub fn block_of(&self, x: Elem) -> usize {
        self.projection[x.index()]
    }

    /// `x/I` as an element of the quotient algebra.
    pub fn project(&self, x: Elem) -> Elem {
        self.quotient
            .elem(self.block_of(x))
            .expect("block index is an element of the quotient")
    }

    pub fn class_of(&self, x: Elem) -> &[Elem] {
        &self.classes[self.block_of(x)]
    }

    /// Same-block test through `x ⊙ y* ∈ I` and `y ⊙ x* ∈ I`.
    pub fn congruent(&self, base: &MvAlgebra, x: Elem, y: Elem) -> bool {
        residual_congruent(base, &self.ideal, x, y)
    }
}

fn residual_congruent(a: &MvAlgebra, ideal: &Ideal, x: Elem, y: Elem) -> bool {
    ideal.contains(a.odot(x, a.star(y))) && ideal.contains(a.odot(y, a.star(x)))
}

/// Builds `A/I`.
///
/// The partition is computed with the `x ⊙ y*`, `y ⊙ x*` membership test and
/// cross-checked against `d(x, y) ∈ I`. The induced tables are validated as an
/// MV-algebra and the projection is checked to be a homomorphism.
pub fn quotient(algebra: &MvAlgebra, ideal: &Ideal) -> Result<QuotientAlgebra> {
    algebra.require_nontrivial()?;
    ideal.check_owner(algebra)?;
    if !ideal.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    let n = algebra.order();
    let mut projection = vec![usize::MAX; n];
    let mut classes: Vec<Vec<Elem>> = Vec::new();
    for x in algebra.elements() {
        if projection[x.index()] != usize::MAX {
            continue;
        }
        let block = classes.len();
        let members: Vec<Elem> = algebra
            .elements()
            .filter(|&y| residual_congruent(algebra, ideal, x, y))
            .collect();
        for &y in &members {
            if projection[y.index()] != usize::MAX {
                return Err(Error::Invariant(format!(
                    "element {y} falls into two congruence classes"
                )));
            }
            projection[y.index()] = block;
        }
        classes.push(members);
    }
    for x in algebra.elements() {
        for y in algebra.elements() {
            let same = projection[x.index()] == projection[y.index()];
            if same != ideal.contains(algebra.distance(x, y)) {
                return Err(Error::Invariant(format!(
                    "distance test and product test disagree on ({x}, {y})"
                )));
            }
        }
    }

    let m = classes.len();
    let block = |x: Elem| projection[x.index()];
    let mut oplus = Vec::with_capacity(m * m);
    for cx in &classes {
        for cy in &classes {
            oplus.push(block(algebra.oplus(cx[0], cy[0])));
        }
    }
    let star = classes.iter().map(|c| block(algebra.star(c[0]))).collect();
    let labels = classes
        .iter()
        .map(|c| algebra.label(c[0]).to_string())
        .collect();
    let quotient = MvAlgebra::from_flat(
        m,
        oplus,
        star,
        block(algebra.zero()),
        Some(labels),
        Vec::new(),
    )?;

    for x in algebra.elements() {
        if block(algebra.star(x)) != quotient.star(Elem::new(block(x))).index() {
            return Err(Error::Invariant(format!(
                "projection does not commute with star at {x}"
            )));
        }
        for y in algebra.elements() {
            let lhs = block(algebra.oplus(x, y));
            let rhs = quotient
                .oplus(Elem::new(block(x)), Elem::new(block(y)))
                .index();
            if lhs != rhs {
                return Err(Error::Invariant(format!(
                    "projection does not commute with oplus at ({x}, {y})"
                )));
            }
        }
    }

    Ok(QuotientAlgebra {
        ideal: ideal.clone(),
        classes,
        projection,
        quotient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> MvAlgebra {
        MvAlgebra::lukasiewicz_chain(n).unwrap()
    }

    fn product(ns: &[usize]) -> MvAlgebra {
        let fs: Vec<_> = ns.iter().map(|&n| chain(n)).collect();
        MvAlgebra::direct_product(&fs).unwrap()
    }

    #[test]
    fn zero_ideal_gives_singletons() {
        let a = product(&[2, 3]);
        let q = quotient(&a, &Ideal::zero(&a)).unwrap();
        assert_eq!(q.classes().len(), 6);
        assert!(q.classes().iter().all(|c| c.len() == 1));
        assert_eq!(q.algebra().oplus_table(), a.oplus_table());
        assert_eq!(q.algebra().star_table(), a.star_table());
    }

    #[test]
    fn improper_ideal_rejected() {
        let a = chain(4);
        assert!(matches!(
            quotient(&a, &Ideal::full(&a)),
            Err(Error::ImproperIdeal)
        ));
    }

    #[test]
    fn foreign_ideal_rejected() {
        let a = chain(4);
        let b = chain(5);
        assert!(matches!(
            quotient(&a, &Ideal::zero(&b)),
            Err(Error::ForeignIdeal)
        ));
    }

    #[test]
    fn zero_block_is_the_ideal() {
        let a = product(&[2, 2, 3]);
        for ideal in crate::ideal::all_ideals(&a)
            .unwrap()
            .into_iter()
            .filter(Ideal::is_proper)
        {
            let q = quotient(&a, &ideal).unwrap();
            assert_eq!(q.class_of(a.zero()), ideal.members());
            assert_eq!(q.class_of(a.one()), ideal.starred(&a).as_slice());
            for c in q.classes() {
                assert_eq!(c.len(), ideal.len());
            }
            assert_eq!(a.order(), ideal.len() * q.algebra().order());
        }
    }

    #[test]
    fn factor_killing_ideal() {
        // ({0} x L3) in L2 x L3 leaves L2
        let a = product(&[2, 3]);
        let i = Ideal::from_indices(&a, &[0, 1, 2]).unwrap();
        let q = quotient(&a, &i).unwrap();
        assert_eq!(q.algebra().order(), 2);
        assert_eq!(q.representative(1), a.elem(3).unwrap());
        assert!(q.congruent(&a, a.elem(4).unwrap(), a.elem(5).unwrap()));
        assert!(!q.congruent(&a, a.elem(2).unwrap(), a.elem(3).unwrap()));
    }
}
