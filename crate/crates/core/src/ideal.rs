//! Ideals of a finite semiring and the lattice operations on them.
//!
//! The whole semiring is representable as an [`Ideal`] (it is what sums
//! and generated ideals may collapse to) but is flagged improper and never
//! becomes a spectrum point.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classify::prime_witness;
use crate::error::{Error, Result};
use crate::semiring::{ElemSet, FiniteSemiring};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    members: ElemSet,
    order: u8,
}

impl Ideal {
    /// Wraps a member set known to be an ideal of a semiring of order `order`.
    pub(crate) fn from_members(members: ElemSet, order: usize) -> Self {
        Ideal {
            members,
            order: order as u8,
        }
    }

    pub fn members(&self) -> ElemSet {
        self.members
    }

    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn is_proper(&self) -> bool {
        self.members != ElemSet::full(self.order())
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(other.members)
    }

    pub fn is_zero(&self) -> bool {
        self.members == ElemSet::singleton(0)
    }

    pub fn to_doc(&self, semiring: &FiniteSemiring) -> IdealDoc {
        IdealDoc {
            semiring: semiring.id().to_string(),
            members: self.members.to_vec(),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{}", self.members)?;
        if !self.is_proper() {
            f.write_str("(improper)")?;
        }
        Ok(())
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.members, f)
    }
}

/// JSON shape of an ideal: members ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealDoc {
    pub semiring: String,
    pub members: Vec<usize>,
}

/// How the product of two ideals is formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ProductVariant {
    /// Ideal generated by all pairwise products.
    #[default]
    Generated,
    /// Set of all finite sums of pairwise products.
    FiniteSums,
}

impl FiniteSemiring {
    /// True if `set` is nonempty and closed under addition and outer multiplication.
    pub fn is_ideal_set(&self, set: ElemSet) -> bool {
        if set.is_empty() || !set.is_subset(self.full_set()) {
            return false;
        }
        set.iter().all(|a| {
            set.iter().all(|b| set.contains(self.add(a, b)))
                && self.elements().all(|r| set.contains(self.mul(r, a)))
        })
    }

    /// Checks `set` and wraps it as an ideal.
    pub fn ideal(&self, set: ElemSet) -> Result<Ideal> {
        if self.is_ideal_set(set) {
            Ok(Ideal::from_members(set, self.order()))
        } else {
            Err(Error::Range(format!(
                "{set} is not an ideal of {}",
                self.id()
            )))
        }
    }

    pub fn ideal_from_doc(&self, doc: &IdealDoc) -> Result<Ideal> {
        if let Some(&bad) = doc.members.iter().find(|&&a| a >= self.order()) {
            return Err(Error::Range(format!(
                "element {bad} out of range for {}",
                self.id()
            )));
        }
        self.ideal(ElemSet::from_elems(doc.members.iter().copied()))
    }

    pub fn zero_ideal(&self) -> Ideal {
        Ideal::from_members(ElemSet::singleton(0), self.order())
    }

    pub fn whole(&self) -> Ideal {
        Ideal::from_members(self.full_set(), self.order())
    }

    /// Least ideal containing `seed` (and `0`), by fixpoint iteration.
    pub fn generated_ideal(&self, seed: ElemSet) -> Ideal {
        let mut cur = seed.with(0).intersection(self.full_set());
        loop {
            let mut next = cur;
            for a in cur.iter() {
                for r in self.elements() {
                    next = next.with(self.mul(r, a));
                }
                for b in cur.iter() {
                    next = next.with(self.add(a, b));
                }
            }
            if next == cur {
                return Ideal::from_members(cur, self.order());
            }
            cur = next;
        }
    }

    /// Every ideal, ascending by member bitset. Includes the whole semiring
    /// unless `proper_only`.
    pub fn all_ideals(&self, proper_only: bool) -> Vec<Ideal> {
        let n = self.order();
        let full = self.full_set().0 as u32;
        // every ideal contains 0, so only odd bitsets are candidates
        (1..=full)
            .step_by(2)
            .map(|bits| ElemSet(bits as u16))
            .filter(|&s| self.is_ideal_set(s))
            .map(|s| Ideal::from_members(s, n))
            .filter(|i| !proper_only || i.is_proper())
            .collect()
    }

    fn check_family(&self, family: &[Ideal]) -> Result<()> {
        if family.is_empty() {
            return Err(Error::EmptyFamily);
        }
        if let Some(bad) = family.iter().find(|i| i.order() != self.order()) {
            return Err(Error::OrderMismatch(self.order(), bad.order()));
        }
        Ok(())
    }

    /// Set of all finite sums of members drawn from the family.
    pub fn sum_ideals(&self, family: &[Ideal]) -> Result<Ideal> {
        self.check_family(family)?;
        let mut cur = family
            .iter()
            .fold(ElemSet::EMPTY, |s, i| s.union(i.members()));
        loop {
            let mut next = cur;
            for a in cur.iter() {
                for b in cur.iter() {
                    next = next.with(self.add(a, b));
                }
            }
            if next == cur {
                return Ok(Ideal::from_members(cur, self.order()));
            }
            cur = next;
        }
    }

    pub fn product_ideals(&self, a: &Ideal, b: &Ideal) -> Ideal {
        self.product_ideals_with(a, b, ProductVariant::Generated)
    }

    pub fn product_ideals_with(&self, a: &Ideal, b: &Ideal, variant: ProductVariant) -> Ideal {
        let mut products = ElemSet::EMPTY;
        for x in a.members().iter() {
            for y in b.members().iter() {
                products = products.with(self.mul(x, y));
            }
        }
        match variant {
            ProductVariant::Generated => self.generated_ideal(products),
            ProductVariant::FiniteSums => {
                let mut cur = products;
                loop {
                    let mut next = cur;
                    for p in cur.iter() {
                        for q in cur.iter() {
                            next = next.with(self.add(p, q));
                        }
                    }
                    if next == cur {
                        break Ideal::from_members(cur, self.order());
                    }
                    cur = next;
                }
            }
        }
    }

    pub fn intersect_ideals(&self, family: &[Ideal]) -> Result<Ideal> {
        self.check_family(family)?;
        let members = family
            .iter()
            .fold(self.full_set(), |s, i| s.intersection(i.members()));
        Ok(Ideal::from_members(members, self.order()))
    }

    /// `{ r : r^k ∈ a for some k >= 1 }`.
    pub fn radical(&self, a: &Ideal) -> Ideal {
        let members = self
            .elements()
            .filter(|&r| self.power_enters(r, a.members()));
        Ideal::from_members(ElemSet::from_elems(members), self.order())
    }

    /// Whether some power `r^k`, `1 <= k <= n`, lies in `set`. Powers of an
    /// element cycle within `n` steps, so larger exponents add nothing.
    pub(crate) fn power_enters(&self, r: usize, set: ElemSet) -> bool {
        let mut p = r;
        for _ in 0..self.order() {
            if set.contains(p) {
                return true;
            }
            p = self.mul(p, r);
        }
        false
    }

    /// All proper prime ideals, ascending.
    pub fn prime_ideals(&self) -> Vec<Ideal> {
        self.all_ideals(true)
            .into_iter()
            .filter(|p| prime_witness(self, p).is_none())
            .collect()
    }

    /// Intersection of the prime ideals containing `a`; the whole semiring
    /// when no prime does.
    pub fn radical_via_primes(&self, a: &Ideal) -> Ideal {
        let members = self
            .prime_ideals()
            .iter()
            .filter(|p| a.is_subset(p))
            .fold(self.full_set(), |s, p| s.intersection(p.members()));
        Ideal::from_members(members, self.order())
    }

    /// Proper ideals not properly contained in another proper ideal.
    pub fn maximal_ideals(&self) -> Vec<Ideal> {
        let proper = self.all_ideals(true);
        proper
            .iter()
            .filter(|m| !proper.iter().any(|b| b != *m && m.is_subset(b)))
            .copied()
            .collect()
    }

    /// Intersection of all maximal ideals (improper when there are none).
    pub fn jacobson_radical(&self) -> Ideal {
        let members = self
            .maximal_ideals()
            .iter()
            .fold(self.full_set(), |s, m| s.intersection(m.members()));
        Ideal::from_members(members, self.order())
    }

    /// The maximal ideal of least bitset containing `a`.
    pub fn maximal_cover(&self, a: &Ideal) -> Result<Ideal> {
        if !a.is_proper() {
            return Err(Error::ImproperIdeal);
        }
        self.maximal_ideals()
            .into_iter()
            .find(|m| a.is_subset(m))
            .ok_or(Error::NoMaximalIdeal)
    }
}
