//! Fixtures shared by the benchmarks.

use mvgraph_core::{Ideal, MvAlgebra};

/// `L_{k_1} × ... × L_{k_m}`.
pub fn chain_product(orders: &[usize]) -> MvAlgebra {
    let chains: Vec<MvAlgebra> = orders
        .iter()
        .map(|&k| MvAlgebra::lukasiewicz_chain(k).expect("chain order >= 2"))
        .collect();
    MvAlgebra::direct_product(&chains).expect("product fits")
}

/// The largest proper ideal in index order, or `{0}` for a simple algebra.
pub fn largest_proper_ideal(a: &MvAlgebra) -> Ideal {
    mvgraph_core::all_ideals(a)
        .expect("nontrivial algebra")
        .into_iter()
        .rev()
        .find(Ideal::is_proper)
        .expect("{0} is proper")
}
