//! Exhaustive verification over every finite MV-algebra up to a given order.
//!
//! [`run_all`] enumerates one algebra per isomorphism class, every proper
//! ideal of each, and evaluates the whole check list. Work fans out over
//! rayon; records are sorted before the report is assembled, so the output
//! does not depend on scheduling.

pub mod checks;
pub mod enumerate;
pub mod report;

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ideal::Ideal;

pub use checks::{Checked, Outcome, References};
pub use enumerate::{
    assert_pairwise_distinct, chain_multisets, enumerate_algebras, EnumeratedAlgebra,
};
pub use report::{CheckRecord, Report, TheoremSummary};

use checks::{AlgebraContext, InstanceContext, ALGEBRA_CHECKS, INSTANCE_CHECKS};

/// Theorem ids in report order.
pub fn theorem_ids() -> Vec<&'static str> {
    let mut ids = vec!["ENUM", "BUILD"];
    ids.extend(ALGEBRA_CHECKS.iter().map(|(id, _)| *id));
    ids.extend(INSTANCE_CHECKS.iter().map(|(id, _)| *id));
    ids.extend(["T43", "T1000", "P10000"]);
    ids
}

fn instance_key(rank: usize, ideal: &Ideal) -> Vec<usize> {
    let mut key = vec![rank, ideal.len()];
    key.extend(ideal.indices());
    key
}

fn record(
    theorem: &'static str,
    algebra: String,
    ideal: String,
    key: Vec<usize>,
    checked: Checked,
) -> CheckRecord {
    CheckRecord {
        theorem,
        algebra,
        ideal,
        outcome: checked.outcome,
        case: checked.case,
        key,
    }
}

/// Runs every check on every algebra of order `<= max_order` and every proper ideal.
pub fn run_all(max_order: usize) -> Result<Report> {
    if max_order < 3 {
        return Err(Error::InvalidArgument(format!(
            "verification needs max_order >= 3 (no graph has vertices below that), got {max_order}"
        )));
    }
    let refs = &References::new()?;
    let entries = enumerate_algebras(max_order)?;
    let algebra_count = entries.len();
    let universe: Vec<AlgebraContext> = entries
        .into_par_iter()
        .enumerate()
        .map(|(rank, e)| AlgebraContext::new(rank, e))
        .collect::<Result<_>>()?;

    let mut records = Vec::new();

    let distinct = Checked::from_result(
        assert_pairwise_distinct(&universe.iter().map(|c| c.entry.clone()).collect::<Vec<_>>())
            .map(|_| Checked {
                outcome: Outcome::Pass,
                case: None,
            }),
    );
    records.push(record(
        "ENUM",
        format!("orders 2..={max_order}"),
        "-".into(),
        vec![0],
        distinct,
    ));

    records.par_extend(universe.par_iter().flat_map_iter(|cx| {
        ALGEBRA_CHECKS.iter().map(move |(id, check)| {
            record(
                id,
                cx.entry.descriptor.clone(),
                "-".into(),
                vec![cx.rank],
                Checked::from_result(check(cx, refs)),
            )
        })
    }));

    let pairs: Vec<(&AlgebraContext, &Ideal)> = universe
        .iter()
        .flat_map(|cx| cx.proper_ideals().map(move |i| (cx, i)))
        .collect();
    let instance_count = pairs.len();
    let built: Vec<(Vec<usize>, String, String, Result<InstanceContext<'_>>)> = pairs
        .par_iter()
        .map(|&(cx, ideal)| {
            (
                instance_key(cx.rank, ideal),
                cx.entry.descriptor.clone(),
                ideal.descriptor(),
                InstanceContext::new(cx, ideal.clone()),
            )
        })
        .collect();
    let mut instances = Vec::with_capacity(built.len());
    for (key, algebra, ideal, result) in built {
        match result {
            Ok(inst) => {
                records.push(record(
                    "BUILD",
                    algebra.clone(),
                    ideal.clone(),
                    key.clone(),
                    pass(),
                ));
                instances.push((key, algebra, ideal, inst));
            }
            Err(e) => records.push(record(
                "BUILD",
                algebra,
                ideal,
                key,
                Checked::from_result(Err(e)),
            )),
        }
    }

    records.par_extend(
        instances
            .par_iter()
            .flat_map_iter(|(key, algebra, ideal, inst)| {
                INSTANCE_CHECKS.iter().map(move |(id, check)| {
                    record(
                        id,
                        algebra.clone(),
                        ideal.clone(),
                        key.clone(),
                        Checked::from_result(check(inst, refs)),
                    )
                })
            }),
    );

    // Instances of equal order whose quotients have the same chain orders.
    let mut groups: BTreeMap<(usize, Vec<usize>), Vec<usize>> = BTreeMap::new();
    for (k, (_, _, _, inst)) in instances.iter().enumerate() {
        groups
            .entry((inst.base.algebra().order(), inst.quotient_shape.clone()))
            .or_default()
            .push(k);
    }
    let transfer_pairs: Vec<(usize, usize)> = groups
        .values()
        .flat_map(|members| {
            members
                .iter()
                .enumerate()
                .flat_map(move |(p, &x)| members[p + 1..].iter().map(move |&y| (x, y)))
        })
        .collect();
    records.par_extend(transfer_pairs.par_iter().map(|&(x, y)| {
        let (kx, ax, ix, cx) = &instances[x];
        let (ky, ay, iy, cy) = &instances[y];
        let mut key = kx.clone();
        key.extend(ky);
        record(
            "T43",
            format!("{ax} | {ay}"),
            format!("{ix} | {iy}"),
            key,
            Checked::from_result(checks::check_transfer(cx, cy)),
        )
    }));

    let tuples = checks::factor_tuples(&universe, max_order)?;
    records.par_extend(tuples.par_iter().enumerate().flat_map_iter(|(t, tuple)| {
        let choices = checks::component_choices(tuple);
        let mut out = vec![record(
            "P10000",
            tuple.descriptor(),
            "-".into(),
            vec![t],
            Checked::from_result(checks::check_product_ideals(tuple)),
        )];
        for (c, choice) in choices.iter().enumerate() {
            out.push(record(
                "T1000",
                tuple.descriptor(),
                checks::choice_descriptor(choice),
                vec![t, c],
                Checked::from_result(checks::check_product_quotient(tuple, choice)),
            ));
        }
        out
    }));

    let order = theorem_ids();
    let rank: BTreeMap<&str, usize> = order.iter().enumerate().map(|(k, &t)| (t, k)).collect();
    records.sort_by(|a, b| (rank[a.theorem], &a.key).cmp(&(rank[b.theorem], &b.key)));
    Ok(Report::new(
        max_order,
        algebra_count,
        instance_count,
        &order,
        records,
    ))
}

fn pass() -> Checked {
    Checked {
        outcome: Outcome::Pass,
        case: None,
    }
}
