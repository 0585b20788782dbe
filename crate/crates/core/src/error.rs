use std::fmt;

use thiserror::Error;

/// The MV-algebra axiom (or derived law) a table failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `0` is a two-sided identity for ⊕.
    M1Identity,
    /// ⊕ is commutative.
    M1Commutative,
    /// ⊕ is associative.
    M1Associative,
    /// `x** = x`.
    M2,
    /// `x ⊕ 0* = 0*`.
    M3,
    /// `(x* ⊕ y)* ⊕ y = (y* ⊕ x)* ⊕ x`.
    M4,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::M1Identity => "M1 (zero is not an identity for oplus)",
            Axiom::M1Commutative => "M1 (oplus is not commutative)",
            Axiom::M1Associative => "M1 (oplus is not associative)",
            Axiom::M2 => "M2 (star is not an involution)",
            Axiom::M3 => "M3 (x oplus 1 != 1)",
            Axiom::M4 => "M4 (Lukasiewicz axiom fails)",
        };
        f.write_str(s)
    }
}

/// Which of the three ideal conditions a subset violates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealViolation {
    MissingZero,
    /// `a, b ∈ S` but `a ⊕ b ∉ S`.
    NotSumClosed {
        a: usize,
        b: usize,
        sum: usize,
    },
    /// `b ∈ S`, `a ≤ b` but `a ∉ S`.
    NotDownClosed {
        below: usize,
        member: usize,
    },
}

impl fmt::Display for IdealViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealViolation::MissingZero => write!(f, "does not contain 0"),
            IdealViolation::NotSumClosed { a, b, sum } => {
                write!(
                    f,
                    "not closed under oplus: {a} oplus {b} = {sum} is missing"
                )
            }
            IdealViolation::NotDownClosed { below, member } => {
                write!(
                    f,
                    "not downward closed: {below} <= {member} but {below} is missing"
                )
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("axiom {axiom} violated, witness {witness:?}")]
    AxiomViolation { axiom: Axiom, witness: Vec<usize> },

    #[error("element index {index} is out of range for an algebra of order {order}")]
    ForeignElement { index: usize, order: usize },

    #[error("ideal belongs to a different algebra")]
    ForeignIdeal,

    #[error("operation requires a nontrivial algebra (order >= 2)")]
    TrivialAlgebra,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("subset is not an ideal: {0}")]
    NotAnIdeal(IdealViolation),

    #[error("ideal is improper (contains 1)")]
    ImproperIdeal,

    #[error("algebra was not built as a direct product of {expected} factors")]
    FactorMismatch { expected: usize },

    #[error("vertex {0} is not part of the graph")]
    ForeignVertex(usize),

    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),

    #[error("isomorphism search exceeded its budget of {budget} nodes")]
    BudgetExceeded { budget: u64 },

    #[error("chain decomposition failed: {0}")]
    DecompositionFailed(String),

    /// An internal cross-check between two independent computations disagreed.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
