//! Ideals of a finite MV-algebra.
//!
//! An ideal is a subset containing `0`, closed under ⊕ and closed downwards
//! in the natural order. Every [`Ideal`] value has passed that check against
//! the algebra it was built for and remembers that algebra's fingerprint.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::algebra::{Elem, MvAlgebra, ProductRadix};
use crate::error::{Error, IdealViolation, Result};

/// Largest order for which [`all_ideals_exhaustive`] will scan all subsets.
pub const EXHAUSTIVE_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    algebra: u64,
    members: Vec<Elem>,
    mask: Vec<bool>,
    proper: bool,
}

impl Ideal {
    /// Validates `members` against the three ideal conditions.
    pub fn new(algebra: &MvAlgebra, members: impl IntoIterator<Item = Elem>) -> Result<Self> {
        let members: BTreeSet<Elem> = members.into_iter().collect();
        let members: Vec<Elem> = members.into_iter().collect();
        check_ideal(algebra, &members)?;
        Ok(Self::trusted(algebra, members))
    }

    /// Builds an ideal from raw indices, e.g. as given on a command line.
    pub fn from_indices(algebra: &MvAlgebra, indices: &[usize]) -> Result<Self> {
        let members = indices
            .iter()
            .map(|&i| algebra.elem(i))
            .collect::<Result<Vec<_>>>()?;
        Self::new(algebra, members)
    }

    /// `members` must be sorted, deduplicated and already known to be an ideal.
    fn trusted(algebra: &MvAlgebra, members: Vec<Elem>) -> Self {
        let mut mask = vec![false; algebra.order()];
        for m in &members {
            mask[m.index()] = true;
        }
        let proper = !mask[algebra.one().index()];
        Ideal {
            algebra: algebra.fingerprint(),
            members,
            mask,
            proper,
        }
    }

    /// `{0}`.
    pub fn zero(algebra: &MvAlgebra) -> Self {
        Self::trusted(algebra, vec![algebra.zero()])
    }

    /// The whole algebra.
    pub fn full(algebra: &MvAlgebra) -> Self {
        Self::trusted(algebra, algebra.elements().collect())
    }

    /// Members in increasing index order.
    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn indices(&self) -> Vec<usize> {
        self.members.iter().map(|m| m.index()).collect()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.mask.get(x.index()).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// True for `{0}`.
    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    /// An ideal is proper iff it does not contain `1`.
    pub fn is_proper(&self) -> bool {
        self.proper
    }

    /// `I* = {b* : b ∈ I}`, sorted.
    pub fn starred(&self, algebra: &MvAlgebra) -> Vec<Elem> {
        let mut out: Vec<Elem> = self.members.iter().map(|&b| algebra.star(b)).collect();
        out.sort();
        out
    }

    pub fn belongs_to(&self, algebra: &MvAlgebra) -> bool {
        self.algebra == algebra.fingerprint() && self.mask.len() == algebra.order()
    }

    pub(crate) fn check_owner(&self, algebra: &MvAlgebra) -> Result<()> {
        if self.belongs_to(algebra) {
            Ok(())
        } else {
            Err(Error::ForeignIdeal)
        }
    }

    /// Index list used in reports, e.g. `[0,1,2]`.
    pub fn descriptor(&self) -> String {
        let parts: Vec<String> = self.members.iter().map(|m| m.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

/// Checks the three ideal conditions, reporting the first violation found.
pub fn check_ideal(algebra: &MvAlgebra, subset: &[Elem]) -> Result<()> {
    let mut mask = vec![false; algebra.order()];
    for &s in subset {
        algebra.elem(s.index())?;
        mask[s.index()] = true;
    }
    let violation = |v| Err(Error::NotAnIdeal(v));
    if !mask[algebra.zero().index()] {
        return violation(IdealViolation::MissingZero);
    }
    let members: Vec<Elem> = algebra.elements().filter(|x| mask[x.index()]).collect();
    for &a in &members {
        for &b in &members {
            let sum = algebra.oplus(a, b);
            if !mask[sum.index()] {
                return violation(IdealViolation::NotSumClosed {
                    a: a.index(),
                    b: b.index(),
                    sum: sum.index(),
                });
            }
        }
    }
    for &b in &members {
        if let Some(a) = algebra
            .elements()
            .find(|&a| !mask[a.index()] && algebra.leq(a, b))
        {
            return violation(IdealViolation::NotDownClosed {
                below: a.index(),
                member: b.index(),
            });
        }
    }
    Ok(())
}

pub fn is_ideal(algebra: &MvAlgebra, subset: &[Elem]) -> bool {
    check_ideal(algebra, subset).is_ok()
}

/// Smallest ideal containing `generators`.
pub fn ideal_generated_by(algebra: &MvAlgebra, generators: &[Elem]) -> Ideal {
    let mut mask = vec![false; algebra.order()];
    mask[algebra.zero().index()] = true;
    for g in generators {
        mask[g.index()] = true;
    }
    loop {
        let mut changed = false;
        let current: Vec<Elem> = algebra.elements().filter(|x| mask[x.index()]).collect();
        for &a in &current {
            for &b in &current {
                let s = algebra.oplus(a, b);
                if !mask[s.index()] {
                    mask[s.index()] = true;
                    changed = true;
                }
            }
        }
        let current: Vec<Elem> = algebra.elements().filter(|x| mask[x.index()]).collect();
        for x in algebra.elements() {
            if !mask[x.index()] && current.iter().any(|&b| algebra.leq(x, b)) {
                mask[x.index()] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let members = algebra.elements().filter(|x| mask[x.index()]).collect();
    Ideal::trusted(algebra, members)
}

fn sort_ideals(ideals: &mut [Ideal]) {
    ideals.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.members.cmp(&b.members))
    });
}

/// Every ideal of a nontrivial algebra, sorted by size then by member list.
///
/// Grows the ideal poset upward from `{0}`: each discovered ideal is extended
/// by one outside element at a time and closed again.
pub fn all_ideals(algebra: &MvAlgebra) -> Result<Vec<Ideal>> {
    algebra.require_nontrivial()?;
    let start = Ideal::zero(algebra);
    let mut seen: HashSet<Vec<Elem>> = HashSet::from([start.members.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::new();
    while let Some(ideal) = queue.pop_front() {
        for x in algebra.elements().filter(|&x| !ideal.contains(x)) {
            let mut gens = ideal.members.clone();
            gens.push(x);
            let next = ideal_generated_by(algebra, &gens);
            if seen.insert(next.members.clone()) {
                queue.push_back(next);
            }
        }
        out.push(ideal);
    }
    sort_ideals(&mut out);
    Ok(out)
}

/// Brute-force oracle for [`all_ideals`]: tests every subset of the carrier.
pub fn all_ideals_exhaustive(algebra: &MvAlgebra) -> Result<Vec<Ideal>> {
    algebra.require_nontrivial()?;
    let n = algebra.order();
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::InvalidArgument(format!(
            "exhaustive ideal scan is limited to order {EXHAUSTIVE_LIMIT}, got {n}"
        )));
    }
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << n) {
        let subset: Vec<Elem> = algebra
            .elements()
            .filter(|x| bits >> x.index() & 1 == 1)
            .collect();
        if is_ideal(algebra, &subset) {
            out.push(Ideal::trusted(algebra, subset));
        }
    }
    sort_ideals(&mut out);
    Ok(out)
}

/// Only `{0}` and `A` are ideals.
///
/// Cross-checked against the arithmetic criterion: every nonzero element
/// reaches `1` under repeated ⊕ with itself.
pub fn is_simple(algebra: &MvAlgebra) -> Result<bool> {
    algebra.require_nontrivial()?;
    let by_ideals = all_ideals(algebra)?.len() == 2;
    let by_multiples = algebra
        .elements()
        .filter(|&a| a != algebra.zero())
        .all(|a| algebra.multiple(a, algebra.order()) == algebra.one());
    if by_ideals != by_multiples {
        return Err(Error::Invariant(format!(
            "simplicity by ideals ({by_ideals}) disagrees with simplicity by multiples ({by_multiples})"
        )));
    }
    Ok(by_ideals)
}

fn product_layout(algebra: &MvAlgebra, arity: usize) -> Result<(&[MvAlgebra], ProductRadix)> {
    match (algebra.factors(), ProductRadix::of(algebra)) {
        (Some(fs), Some(radix)) if fs.len() == arity => Ok((fs, radix)),
        _ => Err(Error::FactorMismatch { expected: arity }),
    }
}

/// The cartesian product `I_1 × ... × I_n` inside a direct product algebra.
pub fn product_ideal(algebra: &MvAlgebra, components: &[Ideal]) -> Result<Ideal> {
    let (factors, radix) = product_layout(algebra, components.len())?;
    for (f, c) in factors.iter().zip(components) {
        c.check_owner(f)?;
    }
    let mut members = Vec::new();
    let mut digits = vec![0; components.len()];
    fill_product(components, 0, &mut digits, &radix, algebra, &mut members);
    Ideal::new(algebra, members)
}

fn fill_product(
    components: &[Ideal],
    k: usize,
    digits: &mut Vec<usize>,
    radix: &ProductRadix,
    algebra: &MvAlgebra,
    out: &mut Vec<Elem>,
) {
    if k == components.len() {
        out.push(
            algebra
                .elem(radix.encode(digits))
                .expect("encoded tuple is in range"),
        );
        return;
    }
    for m in &components[k].members {
        digits[k] = m.index();
        fill_product(components, k + 1, digits, radix, algebra, out);
    }
}

/// Splits an ideal of a finite direct product into its coordinate projections.
///
/// The result multiplies back to `ideal`; a mismatch is reported as an
/// invariant failure.
pub fn ideal_factorization(algebra: &MvAlgebra, ideal: &Ideal) -> Result<Vec<Ideal>> {
    ideal.check_owner(algebra)?;
    let arity = algebra.factors().map_or(0, <[MvAlgebra]>::len);
    let (factors, radix) = product_layout(algebra, arity)?;
    let mut projections: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); factors.len()];
    for m in &ideal.members {
        for (k, d) in radix.decode(m.index()).into_iter().enumerate() {
            projections[k].insert(d);
        }
    }
    let components = factors
        .iter()
        .zip(projections)
        .map(|(f, p)| {
            let members = p
                .into_iter()
                .map(|i| f.elem(i))
                .collect::<Result<Vec<_>>>()?;
            Ideal::new(f, members)
        })
        .collect::<Result<Vec<_>>>()?;
    let back = product_ideal(algebra, &components)?;
    if back.members != ideal.members {
        return Err(Error::Invariant(format!(
            "ideal {} does not factor as a product of its projections",
            ideal.descriptor()
        )));
    }
    Ok(components)
}
