//! Randomised laws on products of Łukasiewicz chains and on shuffled copies of them.

use mvgraph_core::{
    algebra_isomorphic, all_ideals, chain_decomposition, graph_isomorphic, ideal_based_graph,
    ideal_generated_by, laws, metrics, quotient, zero_divisor_graph, Elem, Ideal, MvAlgebra,
};
use proptest::prelude::*;
use proptest::sample::Index;

fn product(orders: &[usize]) -> MvAlgebra {
    let chains: Vec<_> = orders
        .iter()
        .map(|&n| MvAlgebra::lukasiewicz_chain(n).unwrap())
        .collect();
    MvAlgebra::direct_product(&chains).unwrap()
}

/// Chain orders whose product stays small enough for exhaustive laws.
fn chain_orders() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(2usize..=5, 1..=3)
        .prop_filter("order at most 40", |v| v.iter().product::<usize>() <= 40)
}

/// The same algebra with its elements renamed by a random permutation.
fn shuffled(a: &MvAlgebra, seed: &[Index]) -> MvAlgebra {
    let n = a.order();
    let mut perm: Vec<usize> = (0..n).collect();
    for (k, ix) in seed.iter().enumerate().take(n) {
        let j = k + ix.index(n - k);
        perm.swap(k, j);
    }
    let mut inv = vec![0; n];
    for (x, &p) in perm.iter().enumerate() {
        inv[p] = x;
    }
    let src = a.oplus_table();
    let star = a.star_table();
    let oplus = (0..n)
        .map(|u| (0..n).map(|v| perm[src[inv[u]][inv[v]]]).collect())
        .collect();
    let star = (0..n).map(|u| perm[star[inv[u]]]).collect();
    MvAlgebra::from_tables(n, oplus, star, perm[a.zero().index()], None).unwrap()
}

fn pick(a: &MvAlgebra, ix: &Index) -> Elem {
    a.elem(ix.index(a.order())).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn law_batteries_hold(orders in chain_orders()) {
        let a = product(&orders);
        prop_assert_eq!(laws::order_equivalences(&a), None);
        prop_assert_eq!(laws::lattice_identities(&a), None);
        prop_assert_eq!(laws::boolean_equivalences(&a), None);
        prop_assert_eq!(laws::distance_laws(&a), None);
        prop_assert_eq!(laws::complement_laws(&a), None);
    }

    #[test]
    fn pointwise_identities(orders in chain_orders(), x in any::<Index>(), y in any::<Index>(), z in any::<Index>()) {
        let a = product(&orders);
        let (x, y, z) = (pick(&a, &x), pick(&a, &y), pick(&a, &z));
        prop_assert_eq!(a.odot(x, y), a.star(a.oplus(a.star(x), a.star(y))));
        prop_assert_eq!(a.leq(x, y), a.oplus(a.star(x), y) == a.one());
        prop_assert_eq!(a.join(x, y), a.oplus(a.odot(x, a.star(y)), y));
        prop_assert_eq!(a.meet(x, y), a.odot(a.oplus(x, a.star(y)), y));
        prop_assert_eq!(a.distance(x, y), a.distance(y, x));
        prop_assert_eq!(a.distance(x, y) == a.zero(), x == y);
        prop_assert!(a.leq(a.distance(x, z), a.oplus(a.distance(x, y), a.distance(y, z))));
        prop_assert_eq!(a.oplus(a.oplus(x, y), z), a.oplus(x, a.oplus(y, z)));
    }

    #[test]
    fn generated_ideal_is_a_closure(orders in chain_orders(), g in prop::collection::vec(any::<Index>(), 0..3), extra in any::<Index>()) {
        let a = product(&orders);
        let gens: Vec<Elem> = g.iter().map(|ix| pick(&a, ix)).collect();
        let i = ideal_generated_by(&a, &gens);
        prop_assert!(gens.iter().all(|&x| i.contains(x)));
        let again = ideal_generated_by(&a, i.members());
        prop_assert_eq!(again.members(), i.members());
        let mut more = gens.clone();
        more.push(pick(&a, &extra));
        let bigger = ideal_generated_by(&a, &more);
        prop_assert!(i.members().iter().all(|&x| bigger.contains(x)));
    }

    #[test]
    fn quotients_count_and_project(orders in chain_orders(), k in any::<Index>()) {
        let a = product(&orders);
        let ideals: Vec<Ideal> = all_ideals(&a).unwrap().into_iter().filter(Ideal::is_proper).collect();
        let i = &ideals[k.index(ideals.len())];
        let q = quotient(&a, i).unwrap();
        prop_assert_eq!(a.order(), i.len() * q.algebra().order());
        prop_assert!(q.classes().iter().all(|c| c.len() == i.len()));
        for x in a.elements() {
            for y in a.elements() {
                let same = q.block_of(x) == q.block_of(y);
                prop_assert_eq!(same, i.contains(a.distance(x, y)));
                prop_assert_eq!(q.project(a.oplus(x, y)), q.algebra().oplus(q.project(x), q.project(y)));
            }
        }
    }

    #[test]
    fn zero_ideal_graph_is_gamma(orders in chain_orders()) {
        let a = product(&orders);
        prop_assume!(a.order() >= 3);
        let g = zero_divisor_graph(&a).unwrap();
        let h = ideal_based_graph(&a, &Ideal::zero(&a)).unwrap();
        prop_assert_eq!(g.edges(), h.edges());
        prop_assert_eq!(g.labels(), h.labels());
    }

    #[test]
    fn isomorphism_survives_renaming(orders in chain_orders(), seed in prop::collection::vec(any::<Index>(), 40)) {
        let a = product(&orders);
        let b = shuffled(&a, &seed);
        let w = algebra_isomorphic(&a, &b).unwrap();
        prop_assert!(w.is_some());
        let back = algebra_isomorphic(&b, &a).unwrap();
        prop_assert!(back.is_some());
        let mut sorted = orders.clone();
        sorted.sort_unstable();
        prop_assert_eq!(chain_decomposition(&b).unwrap(), sorted);
        prop_assume!(a.order() >= 3);
        let (ga, gb) = (zero_divisor_graph(&a).unwrap(), zero_divisor_graph(&b).unwrap());
        prop_assert!(graph_isomorphic(&ga, &gb).unwrap().is_some());
        prop_assert_eq!(metrics(&ga), metrics(&gb));
    }

    #[test]
    fn distinct_chain_multisets_are_not_isomorphic(p in chain_orders(), q in chain_orders()) {
        let (mut sp, mut sq) = (p.clone(), q.clone());
        sp.sort_unstable();
        sq.sort_unstable();
        sp.retain(|&n| n > 1);
        sq.retain(|&n| n > 1);
        let (a, b) = (product(&p), product(&q));
        prop_assert_eq!(algebra_isomorphic(&a, &b).unwrap().is_some(), sp == sq);
    }
}
