//! JSON forms of algebras, ideals, quotients and witnesses.
//!
//! Algebras use `{"order","zero","oplus","star","labels"}`; `labels` may be
//! omitted on input. Output is compact and field order is fixed, so writing
//! a parsed document reproduces it byte for byte.

use serde::{Deserialize, Serialize};

use crate::algebra::MvAlgebra;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::quotient::QuotientAlgebra;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub order: usize,
    pub zero: usize,
    pub oplus: Vec<Vec<usize>>,
    pub star: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl AlgebraDoc {
    pub fn of(a: &MvAlgebra) -> Self {
        AlgebraDoc {
            order: a.order(),
            zero: a.zero().index(),
            oplus: a.oplus_table(),
            star: a.star_table(),
            labels: Some(a.labels().to_vec()),
        }
    }

    pub fn build(self) -> Result<MvAlgebra> {
        MvAlgebra::from_tables(self.order, self.oplus, self.star, self.zero, self.labels)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientDoc {
    #[serde(flatten)]
    pub algebra: AlgebraDoc,
    pub classes: Vec<Vec<usize>>,
}

impl QuotientDoc {
    pub fn of(q: &QuotientAlgebra) -> Self {
        QuotientDoc {
            algebra: AlgebraDoc::of(q.algebra()),
            classes: q
                .classes()
                .iter()
                .map(|c| c.iter().map(|x| x.index()).collect())
                .collect(),
        }
    }
}

pub fn algebra_to_json(a: &MvAlgebra) -> String {
    serde_json::to_string(&AlgebraDoc::of(a)).expect("algebra document serializes")
}

pub fn algebra_from_json(text: &str) -> Result<MvAlgebra> {
    let doc: AlgebraDoc = serde_json::from_str(text)?;
    doc.build()
}

/// A list of ideals as sorted index arrays.
pub fn ideals_to_json(ideals: &[Ideal]) -> String {
    let rows: Vec<Vec<usize>> = ideals.iter().map(Ideal::indices).collect();
    serde_json::to_string(&rows).expect("index arrays serialize")
}

pub fn quotient_to_json(q: &QuotientAlgebra) -> String {
    serde_json::to_string(&QuotientDoc::of(q)).expect("quotient document serializes")
}

/// Parses a comma-separated index list such as `0,1,2`.
pub fn parse_index_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Error::InvalidArgument(format!("not an element index: {s:?}")))
        })
        .collect()
}
