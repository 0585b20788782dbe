//! Finite MV-algebras, their ideals and quotients, and the zero-divisor
//! graphs `Γ(A)` and `Γ_I(A)`, with an exhaustive checker for the graph
//! theorems over all algebras up to a chosen order.
//!
//! ```
//! use mvgraph_core::{ideal_based_graph, metrics, Ideal, Measure, MvAlgebra};
//!
//! let chains: Vec<_> = [2, 2, 3].iter().map(|&n| MvAlgebra::lukasiewicz_chain(n).unwrap()).collect();
//! let m = MvAlgebra::direct_product(&chains).unwrap();
//! let i = Ideal::from_indices(&m, &[0, 1, 2]).unwrap();
//! let g = ideal_based_graph(&m, &i).unwrap();
//! assert_eq!(metrics(&g).girth, Measure::Finite(4));
//! ```

pub mod algebra;
pub mod error;
pub mod graph;
pub mod ideal;
pub mod iso;
pub mod json;
pub mod laws;
pub mod metrics;
pub mod quotient;
pub mod shape;
pub mod verify;
pub mod zero_divisor;

pub use algebra::{Elem, MvAlgebra, MAX_ORDER};
pub use error::{Axiom, Error, IdealViolation, Result};
pub use graph::{
    graph_join, induced_subgraph, make_complete, make_complete_bipartite, make_empty, GraphExport,
    SimpleGraph,
};
pub use ideal::{
    all_ideals, all_ideals_exhaustive, check_ideal, ideal_factorization, ideal_generated_by,
    is_ideal, is_simple, product_ideal, Ideal,
};
pub use iso::{
    algebra_isomorphic, algebra_isomorphic_with_budget, chain_decomposition, chain_descriptor,
    graph_isomorphic, graph_isomorphic_with_budget, IsomorphismWitness,
};
pub use metrics::{bfs_distances, diameter, girth, metrics, GraphMetrics, Measure};
pub use quotient::{quotient, QuotientAlgebra};
pub use shape::{classify_shape, ShapeReport};
pub use verify::{enumerate_algebras, run_all, Report};
pub use zero_divisor::{ideal_based_graph, zero_divisor_graph};
