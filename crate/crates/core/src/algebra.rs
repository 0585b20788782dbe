//! Finite MV-algebras stored as Cayley tables.
//!
//! An [`MvAlgebra`] is built from a ⊕ table, a * table and a zero element.
//! Construction checks the four MV axioms exhaustively and then caches every
//! derived operation (⊙, the natural order, ∨, ∧ and the Boolean elements),
//! so later lookups are plain table reads.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Axiom, Error, Result};

/// Largest order accepted by the table-based representation.
pub const MAX_ORDER: usize = 1024;

/// An element of a finite algebra, encoded as a dense index in `[0, order)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(u32);

impl Elem {
    pub(crate) fn new(index: usize) -> Self {
        debug_assert!(index < MAX_ORDER);
        Elem(index as u32)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A validated finite MV-algebra `(A, ⊕, *, 0)`.
#[derive(Clone)]
pub struct MvAlgebra {
    order: usize,
    zero: Elem,
    one: Elem,
    oplus: Vec<Elem>,
    star: Vec<Elem>,
    odot: Vec<Elem>,
    leq: Vec<bool>,
    join: Vec<Elem>,
    meet: Vec<Elem>,
    boolean: Vec<Elem>,
    labels: Vec<String>,
    factors: Vec<MvAlgebra>,
    fingerprint: u64,
}

impl fmt::Debug for MvAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MvAlgebra")
            .field("order", &self.order)
            .field("zero", &self.zero)
            .field("labels", &self.labels)
            .finish_non_exhaustive()
    }
}

impl PartialEq for MvAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.zero == other.zero
            && self.oplus == other.oplus
            && self.star == other.star
            && self.labels == other.labels
    }
}

impl Eq for MvAlgebra {}

impl MvAlgebra {
    /// Builds an algebra from raw tables, validating M1–M4.
    ///
    /// Labels default to `e0, e1, ...` when absent.
    pub fn from_tables(
        order: usize,
        oplus: Vec<Vec<usize>>,
        star: Vec<usize>,
        zero: usize,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if oplus.len() != order {
            return Err(Error::MalformedTable(format!(
                "oplus table has {} rows, expected {order}",
                oplus.len()
            )));
        }
        if let Some((i, row)) = oplus.iter().enumerate().find(|(_, r)| r.len() != order) {
            return Err(Error::MalformedTable(format!(
                "oplus row {i} has {} entries, expected {order}",
                row.len()
            )));
        }
        let flat = oplus.into_iter().flatten().collect();
        Self::from_flat(order, flat, star, zero, labels, Vec::new())
    }

    pub(crate) fn from_flat(
        order: usize,
        oplus: Vec<usize>,
        star: Vec<usize>,
        zero: usize,
        labels: Option<Vec<String>>,
        factors: Vec<MvAlgebra>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::MalformedTable("order must be at least 1".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::MalformedTable(format!(
                "order {order} exceeds the supported maximum {MAX_ORDER}"
            )));
        }
        if oplus.len() != order * order {
            return Err(Error::MalformedTable(format!(
                "oplus table has {} entries, expected {}",
                oplus.len(),
                order * order
            )));
        }
        if star.len() != order {
            return Err(Error::MalformedTable(format!(
                "star table has {} entries, expected {order}",
                star.len()
            )));
        }
        if let Some(bad) = oplus
            .iter()
            .chain(&star)
            .chain([&zero])
            .find(|&&v| v >= order)
        {
            return Err(Error::MalformedTable(format!(
                "entry {bad} is out of range for order {order}"
            )));
        }
        let labels = match labels {
            Some(l) if l.len() != order => {
                return Err(Error::MalformedTable(format!(
                    "{} labels given for order {order}",
                    l.len()
                )))
            }
            Some(l) => l,
            None => (0..order).map(|k| format!("e{k}")).collect(),
        };
        let mut sorted: Vec<&String> = labels.iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::MalformedTable(format!("duplicate label {:?}", w[0])));
        }

        let oplus: Vec<Elem> = oplus.into_iter().map(Elem::new).collect();
        let star: Vec<Elem> = star.into_iter().map(Elem::new).collect();
        let zero = Elem::new(zero);
        check_axioms(order, &oplus, &star, zero)?;

        let one = star[zero.index()];
        let at = |x: usize, y: usize| x * order + y;
        let mut odot = vec![zero; order * order];
        let mut leq = vec![false; order * order];
        for x in 0..order {
            for y in 0..order {
                let sx = star[x].index();
                let sy = star[y].index();
                odot[at(x, y)] = star[oplus[at(sx, sy)].index()];
                leq[at(x, y)] = oplus[at(sx, y)] == one;
            }
        }
        let mut join = vec![zero; order * order];
        let mut meet = vec![zero; order * order];
        for x in 0..order {
            for y in 0..order {
                let sx = star[x].index();
                let sy = star[y].index();
                // x ∨ y = (x ⊙ y*) ⊕ y,  x ∧ y = x ⊙ (x* ⊕ y)
                join[at(x, y)] = oplus[at(odot[at(x, sy)].index(), y)];
                meet[at(x, y)] = odot[at(x, oplus[at(sx, y)].index())];
            }
        }
        let boolean = (0..order)
            .filter(|&x| oplus[at(x, x)].index() == x)
            .map(Elem::new)
            .collect();

        let mut hasher = DefaultHasher::new();
        order.hash(&mut hasher);
        zero.hash(&mut hasher);
        oplus.hash(&mut hasher);
        star.hash(&mut hasher);
        let fingerprint = hasher.finish();

        Ok(MvAlgebra {
            order,
            zero,
            one,
            oplus,
            star,
            odot,
            leq,
            join,
            meet,
            boolean,
            labels,
            factors,
            fingerprint,
        })
    }

    /// The `n`-element Łukasiewicz chain `L_n = {0, 1/(n-1), ..., 1}`.
    ///
    /// Element `i` stands for `i/(n-1)`; `i ⊕ j = min(n-1, i+j)` and `i* = n-1-i`.
    pub fn lukasiewicz_chain(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!(
                "a Lukasiewicz chain needs at least 2 elements, got {n}"
            )));
        }
        if n > MAX_ORDER {
            return Err(Error::InvalidArgument(format!(
                "chain order {n} exceeds {MAX_ORDER}"
            )));
        }
        let top = n - 1;
        let oplus = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i + j).min(top)))
            .collect();
        let star = (0..n).map(|i| top - i).collect();
        let labels = (0..n).map(|i| fraction_label(i, top)).collect();
        Self::from_flat(n, oplus, star, 0, Some(labels), Vec::new())
    }

    /// Cartesian product with pointwise operations.
    ///
    /// Tuples are encoded mixed-radix with the first factor most significant,
    /// so `L_2 × L_2 × L_3` enumerates `(0,0,0), (0,0,1/2), (0,0,1), (0,1,0), ...`.
    pub fn direct_product(factors: &[MvAlgebra]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidArgument(
                "direct product of zero factors".into(),
            ));
        }
        let order = factors.iter().try_fold(1usize, |acc, f| {
            acc.checked_mul(f.order).filter(|&o| o <= MAX_ORDER)
        });
        let Some(order) = order else {
            return Err(Error::InvalidArgument(format!(
                "product order exceeds the supported maximum {MAX_ORDER}"
            )));
        };
        let radix = ProductRadix::new(factors.iter().map(|f| f.order).collect());

        let tuples: Vec<Vec<usize>> = (0..order).map(|i| radix.decode(i)).collect();
        let mut oplus = Vec::with_capacity(order * order);
        let mut buf = vec![0; factors.len()];
        for x in &tuples {
            for y in &tuples {
                for (k, f) in factors.iter().enumerate() {
                    buf[k] = f.oplus(Elem::new(x[k]), Elem::new(y[k])).index();
                }
                oplus.push(radix.encode(&buf));
            }
        }
        let star = tuples
            .iter()
            .map(|x| {
                let image: Vec<usize> = factors
                    .iter()
                    .zip(x)
                    .map(|(f, &c)| f.star(Elem::new(c)).index())
                    .collect();
                radix.encode(&image)
            })
            .collect();
        let zero: Vec<usize> = factors.iter().map(|f| f.zero.index()).collect();
        let labels = tuples
            .iter()
            .map(|x| {
                let parts: Vec<&str> = factors
                    .iter()
                    .zip(x)
                    .map(|(f, &c)| f.labels[c].as_str())
                    .collect();
                format!("({})", parts.join(","))
            })
            .collect();
        Self::from_flat(
            order,
            oplus,
            star,
            radix.encode(&zero),
            Some(labels),
            factors.to_vec(),
        )
    }

    #[inline]
    fn at(&self, x: Elem, y: Elem) -> usize {
        x.index() * self.order + y.index()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// True for the one-element algebra, which most operations reject.
    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub(crate) fn require_nontrivial(&self) -> Result<()> {
        if self.is_trivial() {
            Err(Error::TrivialAlgebra)
        } else {
            Ok(())
        }
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    /// Checked conversion from a raw index.
    pub fn elem(&self, index: usize) -> Result<Elem> {
        if index < self.order {
            Ok(Elem::new(index))
        } else {
            Err(Error::ForeignElement {
                index,
                order: self.order,
            })
        }
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = Elem> + Clone {
        (0..self.order).map(Elem::new)
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.labels[x.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Looks an element up by its label.
    pub fn by_label(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label).map(Elem::new)
    }

    /// Factors this algebra was built from by [`MvAlgebra::direct_product`].
    pub fn factors(&self) -> Option<&[MvAlgebra]> {
        (!self.factors.is_empty()).then_some(self.factors.as_slice())
    }

    /// Hash of the defining tables; ideals remember it to detect foreign use.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    #[inline]
    pub fn oplus(&self, x: Elem, y: Elem) -> Elem {
        self.oplus[self.at(x, y)]
    }

    #[inline]
    pub fn star(&self, x: Elem) -> Elem {
        self.star[x.index()]
    }

    /// `x ⊙ y = (x* ⊕ y*)*`.
    #[inline]
    pub fn odot(&self, x: Elem, y: Elem) -> Elem {
        self.odot[self.at(x, y)]
    }

    /// Natural order: `x ≤ y` iff `x* ⊕ y = 1`.
    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.leq[self.at(x, y)]
    }

    #[inline]
    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join[self.at(x, y)]
    }

    #[inline]
    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet[self.at(x, y)]
    }

    /// `d(x, y) = (x ⊙ y*) ⊕ (y ⊙ x*)`.
    pub fn distance(&self, x: Elem, y: Elem) -> Elem {
        let left = self.odot(x, self.star(y));
        let right = self.odot(y, self.star(x));
        self.oplus(left, right)
    }

    /// `x ⊕ x ⊕ ... ⊕ x` (`k` copies); `0·x = 0`.
    pub fn multiple(&self, x: Elem, k: usize) -> Elem {
        (0..k).fold(self.zero, |acc, _| self.oplus(acc, x))
    }

    /// Idempotents of ⊕, i.e. the complemented elements of the lattice.
    pub fn boolean_elements(&self) -> &[Elem] {
        &self.boolean
    }

    pub fn is_boolean(&self, x: Elem) -> bool {
        self.oplus(x, x) == x
    }

    pub fn is_chain(&self) -> bool {
        self.elements()
            .all(|x| self.elements().all(|y| self.leq(x, y) || self.leq(y, x)))
    }

    /// `B(A) = {0, 1}`.
    pub fn is_directly_indecomposable(&self) -> bool {
        !self.is_trivial() && self.boolean.len() == 2
    }

    /// `{x : x* = x}`; never more than one element in an MV-algebra.
    pub fn fixed_points_of_star(&self) -> Vec<Elem> {
        self.elements().filter(|&x| self.star(x) == x).collect()
    }

    /// The ⊕ table as nested index rows.
    pub fn oplus_table(&self) -> Vec<Vec<usize>> {
        self.oplus
            .chunks(self.order)
            .map(|row| row.iter().map(|e| e.index()).collect())
            .collect()
    }

    pub fn star_table(&self) -> Vec<usize> {
        self.star.iter().map(|e| e.index()).collect()
    }

    /// Same tables, new labels.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<Self> {
        Self::from_flat(
            self.order,
            self.oplus.iter().map(|e| e.index()).collect(),
            self.star_table(),
            self.zero.index(),
            Some(labels),
            self.factors.clone(),
        )
    }
}

fn check_axioms(order: usize, oplus: &[Elem], star: &[Elem], zero: Elem) -> Result<()> {
    let op = |x: usize, y: usize| oplus[x * order + y].index();
    let st = |x: usize| star[x].index();
    let z = zero.index();
    let fail = |axiom, witness: Vec<usize>| Err(Error::AxiomViolation { axiom, witness });

    for x in 0..order {
        if op(x, z) != x || op(z, x) != x {
            return fail(Axiom::M1Identity, vec![x]);
        }
    }
    for x in 0..order {
        for y in (x + 1)..order {
            if op(x, y) != op(y, x) {
                return fail(Axiom::M1Commutative, vec![x, y]);
            }
        }
    }
    for x in 0..order {
        for y in 0..order {
            let xy = op(x, y);
            for w in 0..order {
                if op(xy, w) != op(x, op(y, w)) {
                    return fail(Axiom::M1Associative, vec![x, y, w]);
                }
            }
        }
    }
    for x in 0..order {
        if st(st(x)) != x {
            return fail(Axiom::M2, vec![x]);
        }
    }
    let one = st(z);
    for x in 0..order {
        if op(x, one) != one {
            return fail(Axiom::M3, vec![x]);
        }
    }
    for x in 0..order {
        for y in 0..order {
            if op(st(op(st(x), y)), y) != op(st(op(st(y), x)), x) {
                return fail(Axiom::M4, vec![x, y]);
            }
        }
    }
    Ok(())
}

fn fraction_label(i: usize, top: usize) -> String {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    match i {
        0 => "0".to_string(),
        _ if i == top => "1".to_string(),
        _ => {
            let g = gcd(i, top);
            format!("{}/{}", i / g, top / g)
        }
    }
}

/// Mixed-radix codec for product elements, most significant factor first.
#[derive(Debug, Clone)]
pub(crate) struct ProductRadix {
    radices: Vec<usize>,
}

impl ProductRadix {
    pub(crate) fn new(radices: Vec<usize>) -> Self {
        ProductRadix { radices }
    }

    pub(crate) fn of(algebra: &MvAlgebra) -> Option<Self> {
        algebra
            .factors()
            .map(|fs| Self::new(fs.iter().map(MvAlgebra::order).collect()))
    }

    pub(crate) fn encode(&self, digits: &[usize]) -> usize {
        self.radices
            .iter()
            .zip(digits)
            .fold(0, |acc, (&r, &d)| acc * r + d)
    }

    pub(crate) fn decode(&self, mut index: usize) -> Vec<usize> {
        let mut digits = vec![0; self.radices.len()];
        for (k, &r) in self.radices.iter().enumerate().rev() {
            digits[k] = index % r;
            index /= r;
        }
        digits
    }
}
