//! Exhaustive classification of proper ideals.
//!
//! Each negative verdict carries a witness that [`verify_witnesses`]
//! re-checks from the raw tables.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::semiring::{ElemSet, FiniteSemiring};

/// Which ideals the (strong) irreducibility quantifiers range over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IdealScope {
    /// Every ideal including the whole semiring.
    #[default]
    IncludeWhole,
    ProperOnly,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    /// `(x, y)` with `xy ∈ a`, `x ∉ a`, `y ∉ a`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_prime: Option<(usize, usize)>,
    /// A strictly larger proper ideal.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_maximal: Option<Vec<usize>>,
    /// `(x, y)` with `xy ∈ a`, `x ∉ a`, and no power of `y` in `a`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_primary: Option<(usize, usize)>,
    /// An element of the radical outside `a`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_radical: Option<usize>,
    /// Ideals `b ≠ a ≠ c` with `b ∩ c = a`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_irreducible: Option<(Vec<usize>, Vec<usize>)>,
    /// Ideals `b, c ⊄ a` with `b ∩ c ⊆ a`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_strongly_irreducible: Option<(Vec<usize>, Vec<usize>)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealClassification {
    pub members: Vec<usize>,
    pub prime: bool,
    pub maximal: bool,
    pub primary: bool,
    pub radical_ideal: bool,
    pub irreducible: bool,
    pub strongly_irreducible: bool,
    pub principal: bool,
    pub min_generators: usize,
    /// A smallest generating set, lexicographically first among ties.
    pub generators: Vec<usize>,
    pub witnesses: Witnesses,
}

impl IdealClassification {
    /// The implication chain every classification must satisfy.
    pub fn chain_holds(&self) -> bool {
        (!self.maximal || self.prime)
            && (!self.prime || self.primary)
            && (!self.prime || self.strongly_irreducible)
            && (!self.strongly_irreducible || self.irreducible)
            && (!self.prime || self.radical_ideal)
    }
}

pub fn prime_witness(s: &FiniteSemiring, a: &Ideal) -> Option<(usize, usize)> {
    for x in s.elements().filter(|&x| !a.contains(x)) {
        for y in s.elements().filter(|&y| !a.contains(y)) {
            if a.contains(s.mul(x, y)) {
                return Some((x, y));
            }
        }
    }
    None
}

pub fn primary_witness(s: &FiniteSemiring, a: &Ideal) -> Option<(usize, usize)> {
    for x in s.elements().filter(|&x| !a.contains(x)) {
        for y in s.elements() {
            if a.contains(s.mul(x, y)) && !s.power_enters(y, a.members()) {
                return Some((x, y));
            }
        }
    }
    None
}

fn scoped(ideals: &[Ideal], scope: IdealScope) -> impl Iterator<Item = &Ideal> {
    ideals
        .iter()
        .filter(move |i| scope == IdealScope::IncludeWhole || i.is_proper())
}

pub(crate) fn irreducible_witness(
    ideals: &[Ideal],
    a: &Ideal,
    scope: IdealScope,
) -> Option<(Ideal, Ideal)> {
    for b in scoped(ideals, scope) {
        for c in scoped(ideals, scope) {
            if b.members().intersection(c.members()) == a.members() && b != a && c != a {
                return Some((*b, *c));
            }
        }
    }
    None
}

pub(crate) fn strong_irreducible_witness(
    ideals: &[Ideal],
    a: &Ideal,
    scope: IdealScope,
) -> Option<(Ideal, Ideal)> {
    for b in scoped(ideals, scope) {
        for c in scoped(ideals, scope) {
            let meet = b.members().intersection(c.members());
            if meet.is_subset(a.members()) && !b.is_subset(a) && !c.is_subset(a) {
                return Some((*b, *c));
            }
        }
    }
    None
}

/// Smallest seed generating `a`, searched by size then lexicographically.
pub fn min_generating_set(s: &FiniteSemiring, a: &Ideal) -> Vec<usize> {
    let candidates: Vec<usize> = a.members().iter().filter(|&x| x != 0).collect();
    for size in 0..=candidates.len() {
        let mut found = None;
        for_each_combination(&candidates, size, &mut |combo| {
            if found.is_none()
                && s.generated_ideal(ElemSet::from_elems(combo.iter().copied())) == *a
            {
                found = Some(combo.to_vec());
            }
        });
        if let Some(g) = found {
            return g;
        }
    }
    unreachable!("an ideal generates itself")
}

/// Visits every `k`-subset of `items` in lexicographic order.
pub(crate) fn for_each_combination<T: Copy>(items: &[T], k: usize, f: &mut dyn FnMut(&[T])) {
    fn rec<T: Copy>(
        items: &[T],
        k: usize,
        start: usize,
        cur: &mut Vec<T>,
        f: &mut dyn FnMut(&[T]),
    ) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, f);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut Vec::with_capacity(k), f);
}

pub fn classify(s: &FiniteSemiring, a: &Ideal) -> Result<IdealClassification> {
    classify_with(s, a, &s.all_ideals(false), IdealScope::default())
}

/// Classifies `a` against a precomputed list of all ideals of `s`.
pub fn classify_with(
    s: &FiniteSemiring,
    a: &Ideal,
    ideals: &[Ideal],
    scope: IdealScope,
) -> Result<IdealClassification> {
    if !a.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    let not_prime = prime_witness(s, a);
    let not_maximal = ideals
        .iter()
        .find(|b| b.is_proper() && *b != a && a.is_subset(b))
        .map(|b| b.members().to_vec());
    let not_primary = primary_witness(s, a);
    let radical = s.radical(a);
    let not_radical = radical.members().difference(a.members()).iter().next();
    let not_irreducible = irreducible_witness(ideals, a, scope);
    let not_strongly_irreducible = strong_irreducible_witness(ideals, a, scope);
    let generators = min_generating_set(s, a);
    let as_vecs = |(b, c): (Ideal, Ideal)| (b.members().to_vec(), c.members().to_vec());

    Ok(IdealClassification {
        members: a.members().to_vec(),
        prime: not_prime.is_none(),
        maximal: not_maximal.is_none(),
        primary: not_primary.is_none(),
        radical_ideal: not_radical.is_none(),
        irreducible: not_irreducible.is_none(),
        strongly_irreducible: not_strongly_irreducible.is_none(),
        principal: generators.len() <= 1,
        min_generators: generators.len(),
        generators,
        witnesses: Witnesses {
            not_prime,
            not_maximal,
            not_primary,
            not_radical,
            not_irreducible: not_irreducible.map(as_vecs),
            not_strongly_irreducible: not_strongly_irreducible.map(as_vecs),
        },
    })
}

/// Re-validates every witness in `c` directly against the tables of `s`.
pub fn verify_witnesses(s: &FiniteSemiring, a: &Ideal, c: &IdealClassification) -> bool {
    let set = |v: &Vec<usize>| ElemSet::from_elems(v.iter().copied());
    let is_ideal = |v: &Vec<usize>| s.is_ideal_set(set(v));
    let am = a.members();
    let w = &c.witnesses;
    let mut ok = true;
    ok &= c.prime == w.not_prime.is_none();
    if let Some((x, y)) = w.not_prime {
        ok &= !am.contains(x) && !am.contains(y) && am.contains(s.mul(x, y));
    }
    ok &= c.maximal == w.not_maximal.is_none();
    if let Some(b) = &w.not_maximal {
        let b = set(b);
        ok &= s.is_ideal_set(b) && b != s.full_set() && am.is_subset(b) && b != am;
    }
    ok &= c.primary == w.not_primary.is_none();
    if let Some((x, y)) = w.not_primary {
        ok &= !am.contains(x) && am.contains(s.mul(x, y));
        ok &= (1..=s.order()).all(|k| !am.contains(s.pow(y, k)));
    }
    ok &= c.radical_ideal == w.not_radical.is_none();
    if let Some(r) = w.not_radical {
        ok &= !am.contains(r) && (1..=s.order()).any(|k| am.contains(s.pow(r, k)));
    }
    ok &= c.irreducible == w.not_irreducible.is_none();
    if let Some((b, cc)) = &w.not_irreducible {
        ok &= is_ideal(b) && is_ideal(cc);
        ok &= set(b).intersection(set(cc)) == am && set(b) != am && set(cc) != am;
    }
    ok &= c.strongly_irreducible == w.not_strongly_irreducible.is_none();
    if let Some((b, cc)) = &w.not_strongly_irreducible {
        ok &= is_ideal(b) && is_ideal(cc);
        ok &= set(b).intersection(set(cc)).is_subset(am)
            && !set(b).is_subset(am)
            && !set(cc).is_subset(am);
    }
    ok &= s.generated_ideal(ElemSet::from_elems(c.generators.iter().copied())) == *a;
    ok &= c.principal == (c.min_generators <= 1);
    ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::named::*;

    #[test]
    fn zero_ideal_of_boolean() {
        let b = boolean();
        let c = classify(&b, &b.zero_ideal()).unwrap();
        assert!(c.prime && c.maximal && c.radical_ideal && c.strongly_irreducible && c.principal);
        assert!(c.primary && c.irreducible);
        assert_eq!(c.min_generators, 0);
        assert!(verify_witnesses(&b, &b.zero_ideal(), &c));
    }

    #[test]
    fn zero_ideal_of_z4_is_primary_not_prime() {
        let z4 = zmod(4);
        let c = classify(&z4, &z4.zero_ideal()).unwrap();
        assert!(c.primary);
        assert!(!c.prime);
        assert!(!c.radical_ideal);
        assert_eq!(c.witnesses.not_prime, Some((2, 2)));
        assert_eq!(c.witnesses.not_radical, Some(2));
        assert!(verify_witnesses(&z4, &z4.zero_ideal(), &c));
    }

    #[test]
    fn zero_ideal_of_product_is_reducible() {
        let bb = boolean().direct_product(&boolean()).unwrap();
        let c = classify(&bb, &bb.zero_ideal()).unwrap();
        assert!(!c.irreducible && !c.strongly_irreducible && !c.prime);
        let (x, y) = c.witnesses.not_irreducible.clone().unwrap();
        let mut pair = [x, y];
        pair.sort();
        assert_eq!(pair, [vec![0, 1], vec![0, 2]]);
        assert!(verify_witnesses(&bb, &bb.zero_ideal(), &c));
    }

    #[test]
    fn improper_is_rejected() {
        let b = boolean();
        assert!(matches!(
            classify(&b, &b.whole()),
            Err(Error::ImproperIdeal)
        ));
    }

    #[test]
    fn maximal_ideals_of_products_are_principal() {
        // B×C3: maximal B×{0,1} is generated by (1,1) alone; {0}×C3 by (0,2).
        let s = boolean().direct_product(&chain(3)).unwrap();
        for m in s.maximal_ideals() {
            let c = classify(&s, &m).unwrap();
            assert!(c.principal, "{m}");
        }
        // B×B×B: each maximal ideal is generated by a single idempotent.
        let b3 = boolean()
            .direct_product(&boolean())
            .unwrap()
            .direct_product(&boolean())
            .unwrap();
        let m = b3.maximal_ideals()[0];
        let c = classify(&b3, &m).unwrap();
        assert!(
            c.principal,
            "idempotent generator suffices: {:?}",
            c.generators
        );
    }

    #[test]
    fn scope_does_not_change_verdicts_on_small_semirings() {
        for s in [
            zmod(4),
            chain(4),
            truncated(4),
            boolean().direct_product(&boolean()).unwrap(),
        ] {
            let ideals = s.all_ideals(false);
            for a in s.all_ideals(true) {
                let wide = classify_with(&s, &a, &ideals, IdealScope::IncludeWhole).unwrap();
                let narrow = classify_with(&s, &a, &ideals, IdealScope::ProperOnly).unwrap();
                assert_eq!(wide.irreducible, narrow.irreducible);
                assert_eq!(wide.strongly_irreducible, narrow.strongly_irreducible);
            }
        }
    }

    #[test]
    fn combinations_in_lex_order() {
        let mut seen = Vec::new();
        for_each_combination(&[1, 2, 3], 2, &mut |c| seen.push(c.to_vec()));
        assert_eq!(seen, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        let mut count = 0;
        for_each_combination(&[1, 2, 3], 0, &mut |_| count += 1);
        assert_eq!(count, 1);
    }
}
