//! The universe of finite MV-algebras: one product of chains per multiset of
//! chain orders.

use crate::algebra::MvAlgebra;
use crate::error::{Error, Result};
use crate::iso::{algebra_isomorphic, chain_descriptor};

/// An enumerated algebra together with the chain orders it was built from.
#[derive(Debug, Clone)]
pub struct EnumeratedAlgebra {
    pub orders: Vec<usize>,
    pub descriptor: String,
    pub algebra: MvAlgebra,
}

impl EnumeratedAlgebra {
    pub fn new(orders: Vec<usize>) -> Result<Self> {
        let algebra = build_from_chain_orders(&orders)?;
        Ok(EnumeratedAlgebra {
            descriptor: chain_descriptor(&orders),
            orders,
            algebra,
        })
    }

    pub fn order(&self) -> usize {
        self.algebra.order()
    }
}

/// A single chain stays a chain; longer lists become a direct product.
pub fn build_from_chain_orders(orders: &[usize]) -> Result<MvAlgebra> {
    match orders {
        [] => Err(Error::InvalidArgument("no chain orders given".into())),
        [n] => MvAlgebra::lukasiewicz_chain(*n),
        _ => {
            let chains = orders
                .iter()
                .map(|&k| MvAlgebra::lukasiewicz_chain(k))
                .collect::<Result<Vec<_>>>()?;
            MvAlgebra::direct_product(&chains)
        }
    }
}

/// Non-decreasing lists of integers `≥ 2` whose product is `n`, in lexicographic order.
pub fn chain_multisets(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, min: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 1 {
            if !prefix.is_empty() {
                out.push(prefix.clone());
            }
            return;
        }
        for k in min..=rest {
            if rest.is_multiple_of(k) {
                prefix.push(k);
                go(rest / k, k, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if n >= 2 {
        go(n, 2, &mut Vec::new(), &mut out);
    }
    out
}

/// One representative per isomorphism class of orders `2..=max_order`,
/// sorted by order and then by chain orders.
pub fn enumerate_algebras(max_order: usize) -> Result<Vec<EnumeratedAlgebra>> {
    if max_order < 2 {
        return Err(Error::InvalidArgument(format!(
            "enumeration needs max_order >= 2, got {max_order}"
        )));
    }
    (2..=max_order)
        .flat_map(chain_multisets)
        .map(EnumeratedAlgebra::new)
        .collect()
}

/// Confirms that no two enumerated algebras of equal order are isomorphic.
pub fn assert_pairwise_distinct(algebras: &[EnumeratedAlgebra]) -> Result<()> {
    for (i, a) in algebras.iter().enumerate() {
        for b in &algebras[i + 1..] {
            if a.order() == b.order() && algebra_isomorphic(&a.algebra, &b.algebra)?.is_some() {
                return Err(Error::Invariant(format!(
                    "{} and {} are isomorphic",
                    a.descriptor, b.descriptor
                )));
            }
        }
    }
    Ok(())
}
