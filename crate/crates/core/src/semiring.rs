//! Finite commutative semirings on `{0, .., n-1}` stored as Cayley tables.
//!
//! Zero is always element `0`. The multiplicative identity may be any
//! element; `one == 0` only in the trivial semiring.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Axiom, Error, Result};

/// Largest supported element count (ideals are `u16` bitsets).
pub const MAX_ORDER: usize = 16;

/// A set of semiring elements, bit `i` standing for element `i`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElemSet(pub u16);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 16 {
            ElemSet(u16::MAX)
        } else {
            ElemSet(((1u32 << n) - 1) as u16)
        }
    }

    pub fn singleton(a: usize) -> Self {
        ElemSet(1 << a)
    }

    pub fn from_elems<I: IntoIterator<Item = usize>>(elems: I) -> Self {
        elems.into_iter().fold(ElemSet::EMPTY, |s, a| s.with(a))
    }

    #[inline]
    pub fn contains(self, a: usize) -> bool {
        self.0 >> a & 1 == 1
    }

    #[inline]
    pub fn with(self, a: usize) -> Self {
        ElemSet(self.0 | 1 << a)
    }

    #[inline]
    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn union(self, other: ElemSet) -> Self {
        ElemSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: ElemSet) -> Self {
        ElemSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: ElemSet) -> Self {
        ElemSet(self.0 & !other.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..16).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, a) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

/// Unvalidated semiring document, the JSON interchange shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawSemiring {
    pub id: String,
    pub n: usize,
    pub one: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
}

/// A validated finite commutative semiring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemiring {
    id: String,
    n: usize,
    one: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
}

impl fmt::Debug for FiniteSemiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSemiring")
            .field("id", &self.id)
            .field("n", &self.n)
            .field("one", &self.one)
            .field("add", &self.add_rows())
            .field("mul", &self.mul_rows())
            .finish()
    }
}

/// First shape defect of a raw document, as `(field, message)`.
pub(crate) fn shape_problem(raw: &RawSemiring) -> Option<(&'static str, String)> {
    let n = raw.n;
    if n == 0 || n > MAX_ORDER {
        return Some(("n", format!("element count {n} outside 1..={MAX_ORDER}")));
    }
    if raw.one >= n {
        return Some(("one", format!("one = {} out of range for n = {n}", raw.one)));
    }
    for (name, table) in [("add", &raw.add), ("mul", &raw.mul)] {
        if table.len() != n {
            return Some((
                name,
                format!("{name} has {} rows, expected {n}", table.len()),
            ));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Some((
                    name,
                    format!("{name} row {i} has {} entries, expected {n}", row.len()),
                ));
            }
            if let Some(j) = row.iter().position(|&v| v >= n) {
                return Some((
                    name,
                    format!("{name}[{i}][{j}] = {} out of range for n = {n}", row[j]),
                ));
            }
        }
    }
    None
}

fn check_shape(raw: &RawSemiring) -> Result<()> {
    match shape_problem(raw) {
        Some((_, msg)) => Err(Error::Range(msg)),
        None => Ok(()),
    }
}

impl FiniteSemiring {
    /// Validates raw tables against every commutative-semiring axiom.
    ///
    /// On failure the error names the first axiom (in [`Axiom`] order)
    /// that breaks, with a concrete element witness.
    pub fn validate(raw: &RawSemiring) -> Result<Self> {
        check_shape(raw)?;
        let n = raw.n;
        let flat = |t: &Vec<Vec<usize>>| t.iter().flatten().map(|&v| v as u8).collect::<Vec<_>>();
        let s = FiniteSemiring {
            id: raw.id.clone(),
            n,
            one: raw.one,
            add: flat(&raw.add),
            mul: flat(&raw.mul),
        };
        s.check_axioms()?;
        Ok(s)
    }

    /// Builds and validates a semiring from closures over element indices.
    pub fn from_fns(
        id: impl Into<String>,
        n: usize,
        one: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let table = |f: &dyn Fn(usize, usize) -> usize| {
            (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect()
        };
        Self::validate(&RawSemiring {
            id: id.into(),
            n,
            one,
            add: table(&add),
            mul: table(&mul),
        })
    }

    /// Constructs from flat row-major tables that are already known valid.
    pub(crate) fn from_flat_unchecked(
        id: String,
        n: usize,
        one: usize,
        add: Vec<u8>,
        mul: Vec<u8>,
    ) -> Self {
        debug_assert_eq!(add.len(), n * n);
        debug_assert_eq!(mul.len(), n * n);
        FiniteSemiring {
            id,
            n,
            one,
            add,
            mul,
        }
    }

    pub fn to_raw(&self) -> RawSemiring {
        RawSemiring {
            id: self.id.clone(),
            n: self.n,
            one: self.one,
            add: self.add_rows(),
            mul: self.mul_rows(),
        }
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.n;
        let fail = |axiom, witness: &[usize]| {
            Err(Error::AxiomViolation {
                axiom,
                witness: witness.to_vec(),
            })
        };
        let (add, mul) = (|a, b| self.add(a, b), |a, b| self.mul(a, b));

        for a in 0..n {
            if add(0, a) != a || add(a, 0) != a {
                return fail(Axiom::AdditiveIdentity, &[a]);
            }
        }
        for a in 0..n {
            for b in 0..n {
                if add(a, b) != add(b, a) {
                    return fail(Axiom::AdditiveCommutativity, &[a, b]);
                }
            }
        }
        for (a, b, c) in triples(n) {
            if add(add(a, b), c) != add(a, add(b, c)) {
                return fail(Axiom::AdditiveAssociativity, &[a, b, c]);
            }
        }
        for a in 0..n {
            if mul(self.one, a) != a || mul(a, self.one) != a {
                return fail(Axiom::MultiplicativeIdentity, &[a]);
            }
        }
        for a in 0..n {
            for b in 0..n {
                if mul(a, b) != mul(b, a) {
                    return fail(Axiom::MultiplicativeCommutativity, &[a, b]);
                }
            }
        }
        for (a, b, c) in triples(n) {
            if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                return fail(Axiom::MultiplicativeAssociativity, &[a, b, c]);
            }
        }
        for a in 0..n {
            if mul(0, a) != 0 || mul(a, 0) != 0 {
                return fail(Axiom::ZeroAbsorption, &[a]);
            }
        }
        for (a, b, c) in triples(n) {
            if mul(a, add(b, c)) != add(mul(a, b), mul(a, c)) {
                return fail(Axiom::LeftDistributivity, &[a, b, c]);
            }
        }
        for (a, b, c) in triples(n) {
            if mul(add(a, b), c) != add(mul(a, c), mul(b, c)) {
                return fail(Axiom::RightDistributivity, &[a, b, c]);
            }
        }
        Ok(())
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    /// Returns a copy carrying a different identifier.
    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.one
    }

    /// True for the one-element semiring where `0 = 1`.
    pub fn is_trivial(&self) -> bool {
        self.n == 1
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    /// `a^k` for `k >= 1` (and `a^0 = 1`).
    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.one, |acc, _| self.mul(acc, a))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// The whole semiring as an element set.
    pub fn full_set(&self) -> ElemSet {
        ElemSet::full(self.n)
    }

    pub fn add_rows(&self) -> Vec<Vec<usize>> {
        self.add
            .chunks(self.n)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        self.mul
            .chunks(self.n)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub(crate) fn add_flat(&self) -> &[u8] {
        &self.add
    }

    pub(crate) fn mul_flat(&self) -> &[u8] {
        &self.mul
    }

    /// Componentwise product; element `(i, j)` gets index `i * |T| + j`.
    pub fn direct_product(&self, other: &FiniteSemiring) -> Result<FiniteSemiring> {
        let m = other.n;
        let size = self.n * m;
        if size > MAX_ORDER {
            return Err(Error::SizeLimitExceeded {
                what: "product order",
                got: size,
                limit: MAX_ORDER,
            });
        }
        let split = |x: usize| (x / m, x % m);
        let op = |f: &dyn Fn(usize, usize, usize, usize) -> (usize, usize)| {
            let mut t = Vec::with_capacity(size * size);
            for x in 0..size {
                for y in 0..size {
                    let ((a, b), (c, d)) = (split(x), split(y));
                    let (u, v) = f(a, b, c, d);
                    t.push((u * m + v) as u8);
                }
            }
            t
        };
        let add = op(&|a, b, c, d| (self.add(a, c), other.add(b, d)));
        let mul = op(&|a, b, c, d| (self.mul(a, c), other.mul(b, d)));
        Ok(FiniteSemiring {
            id: format!("{}x{}", self.id, other.id),
            n: size,
            one: self.one * m + other.one,
            add,
            mul,
        })
    }

    /// Idempotents other than `0` and `1`.
    pub fn nontrivial_idempotents(&self) -> ElemSet {
        ElemSet::from_elems(
            self.elements()
                .filter(|&x| self.mul(x, x) == x && x != 0 && x != self.one),
        )
    }
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
}

/// Named constructions used throughout tests and the built-in catalog.
pub mod named {
    use super::FiniteSemiring;

    /// The one-element semiring `0 = 1`.
    pub fn trivial() -> FiniteSemiring {
        FiniteSemiring::from_fns("trivial", 1, 0, |_, _| 0, |_, _| 0).expect("trivial semiring")
    }

    /// Boolean semiring: `+ = max`, `· = min`.
    pub fn boolean() -> FiniteSemiring {
        chain(2).with_id("B")
    }

    /// Chain `{0 < 1 < .. < n-1}` with `+ = max`, `· = min`, `1 = top`.
    pub fn chain(n: usize) -> FiniteSemiring {
        FiniteSemiring::from_fns(format!("C{n}"), n, n - 1, |a, b| a.max(b), |a, b| a.min(b))
            .expect("chain semiring")
    }

    /// Integers modulo `n`.
    pub fn zmod(n: usize) -> FiniteSemiring {
        let one = if n == 1 { 0 } else { 1 };
        FiniteSemiring::from_fns(
            format!("Z{n}"),
            n,
            one,
            |a, b| (a + b) % n,
            |a, b| (a * b) % n,
        )
        .expect("integers mod n")
    }

    /// Naturals truncated at `n-1`: saturating addition and multiplication.
    pub fn truncated(n: usize) -> FiniteSemiring {
        let cap = n - 1;
        let one = if n == 1 { 0 } else { 1 };
        FiniteSemiring::from_fns(
            format!("N{n}"),
            n,
            one,
            |a, b| (a + b).min(cap),
            |a, b| (a * b).min(cap),
        )
        .expect("truncated naturals")
    }
}
