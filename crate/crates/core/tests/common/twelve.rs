//! The twelve-element algebra `M = {0,a,...,j,1}` as printed, with helpers.

use mvgraph_core::{Elem, MvAlgebra};

pub const LABELS: [&str; 12] = ["0", "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "1"];

pub const STAR: &str = "1 j i h g f e d c b a 0";

pub const OPLUS: [&str; 12] = [
    "0 a b c d e f g h i j 1",
    "a b b d e e g h h j 1 1",
    "b b b e e e h h h 1 1 1",
    "c d e c d e i j 1 i j 1",
    "d e e d e e j 1 1 j 1 1",
    "e e e e e e 1 1 1 1 1 1",
    "f g h i j 1 f g h i j 1",
    "g h h j 1 1 g h h j 1 1",
    "h h h 1 1 1 h h h 1 1 1",
    "i j 1 i j 1 i j 1 i j 1",
    "j 1 1 j 1 1 j 1 1 j 1 1",
    "1 1 1 1 1 1 1 1 1 1 1 1",
];

pub const ODOT: [&str; 12] = [
    "0 0 0 0 0 0 0 0 0 0 0 0",
    "0 0 a 0 0 a 0 0 a 0 0 a",
    "0 a b 0 a b 0 a b 0 a b",
    "0 0 0 c c c 0 0 0 c c c",
    "0 0 a c c d 0 0 a c c d",
    "0 a b c d e 0 a b c d e",
    "0 0 0 0 0 0 f f f f f f",
    "0 0 a 0 0 a f f g f f g",
    "0 a b 0 a b f g h f g h",
    "0 0 0 c c c f f f i i i",
    "0 0 a c c d f f g i i j",
    "0 a b c d e f g h i j 1",
];

pub fn idx(label: &str) -> usize {
    LABELS
        .iter()
        .position(|&l| l == label)
        .unwrap_or_else(|| panic!("unknown label {label}"))
}

pub fn row(text: &str) -> Vec<usize> {
    text.split_whitespace().map(idx).collect()
}

pub fn table(rows: &[&str; 12]) -> Vec<Vec<usize>> {
    rows.iter().map(|r| row(r)).collect()
}

/// `L2 × L2 × L3` relabelled through ψ, which is the identity on tuple indices.
pub fn m() -> MvAlgebra {
    let chains: Vec<_> = [2, 2, 3]
        .iter()
        .map(|&n| MvAlgebra::lukasiewicz_chain(n).unwrap())
        .collect();
    MvAlgebra::direct_product(&chains)
        .unwrap()
        .relabeled(LABELS.iter().map(|s| s.to_string()).collect())
        .unwrap()
}

pub fn e(a: &MvAlgebra, label: &str) -> Elem {
    a.by_label(label).unwrap()
}

pub fn set(a: &MvAlgebra, labels: &str) -> Vec<Elem> {
    labels.split_whitespace().map(|l| e(a, l)).collect()
}

pub fn names(a: &MvAlgebra, xs: &[Elem]) -> Vec<String> {
    xs.iter().map(|&x| a.label(x).to_string()).collect()
}

/// Edges of Γ_J(M) as drawn.
pub const GAMMA_J_EDGES: [&str; 13] = [
    "a-j", "a-g", "a-i", "a-f", "a-d", "d-j", "d-g", "d-i", "d-f", "b-i", "b-f", "e-i", "e-f",
];
