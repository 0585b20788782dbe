//! Aggregated results and their JSON-lines rendering.

use std::collections::BTreeMap;

use serde::Serialize;

use super::checks::Outcome;

/// One evaluated check. `key` fixes the emission order within a theorem.
#[derive(Debug, Clone)]
pub struct CheckRecord {
    pub theorem: &'static str,
    pub algebra: String,
    pub ideal: String,
    pub outcome: Outcome,
    pub case: Option<&'static str>,
    pub key: Vec<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TheoremSummary {
    pub theorem: &'static str,
    /// All evaluated instances, vacuous ones included.
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    pub vacuous: usize,
    pub inconclusive: usize,
    /// How often each named branch fired among passing instances.
    pub cases: BTreeMap<&'static str, usize>,
}

impl TheoremSummary {
    pub fn is_pass(&self) -> bool {
        self.failed == 0 && self.inconclusive == 0
    }

    pub fn case(&self, name: &str) -> usize {
        self.cases.get(name).copied().unwrap_or(0)
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub max_order: usize,
    pub algebras: usize,
    /// Number of (algebra, proper ideal) instances.
    pub instances: usize,
    pub summaries: Vec<TheoremSummary>,
    pub records: Vec<CheckRecord>,
}

#[derive(Serialize)]
struct FailureLine<'a> {
    record: &'static str,
    theorem: &'a str,
    algebra: &'a str,
    ideal: &'a str,
    kind: &'static str,
    expected: &'a str,
    observed: &'a str,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    record: &'static str,
    status: &'static str,
    #[serde(flatten)]
    summary: &'a TheoremSummary,
}

#[derive(Serialize)]
struct TotalLine {
    record: &'static str,
    status: &'static str,
    max_order: usize,
    algebras: usize,
    instances: usize,
    theorems: usize,
    failures: usize,
}

impl Report {
    /// Builds summaries in the given theorem order; records must already be sorted.
    pub(crate) fn new(
        max_order: usize,
        algebras: usize,
        instances: usize,
        theorem_order: &[&'static str],
        records: Vec<CheckRecord>,
    ) -> Self {
        let mut summaries: Vec<TheoremSummary> = theorem_order
            .iter()
            .map(|&t| TheoremSummary {
                theorem: t,
                ..Default::default()
            })
            .collect();
        for r in &records {
            let s = summaries
                .iter_mut()
                .find(|s| s.theorem == r.theorem)
                .expect("every record belongs to a listed theorem");
            s.instances += 1;
            match &r.outcome {
                Outcome::Pass => s.passed += 1,
                Outcome::Fail { .. } => s.failed += 1,
                Outcome::Vacuous => s.vacuous += 1,
                Outcome::Inconclusive(_) => s.inconclusive += 1,
            }
            if let (Outcome::Pass, Some(c)) = (&r.outcome, r.case) {
                *s.cases.entry(c).or_insert(0) += 1;
            }
        }
        Report {
            max_order,
            algebras,
            instances,
            summaries,
            records,
        }
    }

    pub fn is_success(&self) -> bool {
        self.summaries.iter().all(TheoremSummary::is_pass)
    }

    pub fn summary(&self, theorem: &str) -> Option<&TheoremSummary> {
        self.summaries.iter().find(|s| s.theorem == theorem)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.outcome.is_failure())
    }

    /// Records of one theorem, in emission order.
    pub fn records_for<'a>(&'a self, theorem: &'a str) -> impl Iterator<Item = &'a CheckRecord> {
        self.records.iter().filter(move |r| r.theorem == theorem)
    }

    /// Failure lines, then one summary line per theorem, then a total line.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        let mut push = |v: String| {
            out.push_str(&v);
            out.push('\n');
        };
        for r in self.failures() {
            let (expected, observed) = match &r.outcome {
                Outcome::Fail { expected, observed } => (expected.as_str(), observed.as_str()),
                Outcome::Inconclusive(why) => ("a decision", why.as_str()),
                _ => unreachable!("filtered to failures"),
            };
            push(json(&FailureLine {
                record: "failure",
                theorem: r.theorem,
                algebra: &r.algebra,
                ideal: &r.ideal,
                kind: r.outcome.kind(),
                expected,
                observed,
            }));
        }
        for s in &self.summaries {
            push(json(&SummaryLine {
                record: "summary",
                status: status(s.is_pass()),
                summary: s,
            }));
        }
        push(json(&TotalLine {
            record: "total",
            status: status(self.is_success()),
            max_order: self.max_order,
            algebras: self.algebras,
            instances: self.instances,
            theorems: self.summaries.len(),
            failures: self.failures().count(),
        }));
        out
    }
}

fn status(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("report lines serialize")
}
