//! Exhaustive enumeration of small commutative semirings.
//!
//! Tables are generated symmetric with the identities and zero absorption
//! already in place; only associativity and distributivity are tested.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::semiring::FiniteSemiring;

/// Hard upper bound on the enumerated order.
pub const MAX_ENUMERATION_ORDER: usize = 4;

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANONICAL_ORDER: usize = 8;

/// Unordered pairs `(a, b)`, `a <= b`, drawn from `elems`.
fn free_pairs(elems: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, &a) in elems.iter().enumerate() {
        for &b in &elems[i..] {
            out.push((a, b));
        }
    }
    out
}

/// Fills `table` at every free pair with digits of `code` in base `n`.
fn fill(table: &mut [u8], n: usize, pairs: &[(usize, usize)], mut code: usize) {
    for &(a, b) in pairs {
        let v = (code % n) as u8;
        code /= n;
        table[a * n + b] = v;
        table[b * n + a] = v;
    }
}

fn associative(t: &[u8], n: usize) -> bool {
    let op = |a: usize, b: usize| t[a * n + b] as usize;
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| op(op(a, b), c) == op(a, op(b, c)))))
}

/// Commutativity of both tables lets one side of distributivity suffice.
fn distributive(add: &[u8], mul: &[u8], n: usize) -> bool {
    let p = |a: usize, b: usize| add[a * n + b] as usize;
    let m = |a: usize, b: usize| mul[a * n + b] as usize;
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| m(a, p(b, c)) == p(m(a, b), m(a, c)))))
}

/// Every associative commutative table on `{0..n-1}` with identity `e`.
/// With `absorbing`, `0` is additionally forced to be absorbing.
fn monoid_tables(n: usize, e: usize, absorbing: bool) -> Vec<Vec<u8>> {
    let free: Vec<usize> = (0..n)
        .filter(|&a| a != e && !(absorbing && a == 0))
        .collect();
    let pairs = free_pairs(&free);
    let mut base = vec![0u8; n * n];
    for a in 0..n {
        base[e * n + a] = a as u8;
        base[a * n + e] = a as u8;
    }
    let total = n.pow(pairs.len() as u32);
    (0..total)
        .filter_map(|code| {
            let mut t = base.clone();
            fill(&mut t, n, &pairs, code);
            associative(&t, n).then_some(t)
        })
        .collect()
}

/// Lazy stream of all labeled semirings of order `n` with zero `0`.
pub struct LabeledSemirings {
    n: usize,
    adds: Vec<Vec<u8>>,
    /// `(one, mul table)` in ascending `one` order.
    muls: Vec<(usize, Vec<u8>)>,
    next_add: usize,
    next_mul: usize,
    produced: usize,
}

impl LabeledSemirings {
    fn new(n: usize) -> Self {
        let (adds, muls) = if n == 1 {
            (vec![vec![0]], vec![(0, vec![0])])
        } else {
            let adds = monoid_tables(n, 0, false);
            let muls = (1..n)
                .flat_map(|one| {
                    monoid_tables(n, one, true)
                        .into_iter()
                        .map(move |t| (one, t))
                })
                .collect();
            (adds, muls)
        };
        LabeledSemirings {
            n,
            adds,
            muls,
            next_add: 0,
            next_mul: 0,
            produced: 0,
        }
    }
}

impl Iterator for LabeledSemirings {
    type Item = FiniteSemiring;

    fn next(&mut self) -> Option<FiniteSemiring> {
        while self.next_add < self.adds.len() {
            let add = &self.adds[self.next_add];
            while self.next_mul < self.muls.len() {
                let (one, mul) = &self.muls[self.next_mul];
                self.next_mul += 1;
                if distributive(add, mul, self.n) {
                    let id = format!("L{}-{}", self.n, self.produced);
                    self.produced += 1;
                    return Some(FiniteSemiring::from_flat_unchecked(
                        id,
                        self.n,
                        *one,
                        add.clone(),
                        mul.clone(),
                    ));
                }
            }
            self.next_add += 1;
            self.next_mul = 0;
        }
        None
    }
}

/// Enumerates every commutative semiring on `{0..n-1}` with zero `0`.
///
/// With `up_to_iso`, one representative per isomorphism class is yielded,
/// namely the table pair of minimal canonical form, in ascending form order.
pub fn enumerate_semirings(
    n: usize,
    up_to_iso: bool,
) -> Result<Box<dyn Iterator<Item = FiniteSemiring>>> {
    if n == 0 {
        return Err(Error::Range("cannot enumerate semirings of order 0".into()));
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::SizeLimitExceeded {
            what: "enumeration order",
            got: n,
            limit: MAX_ENUMERATION_ORDER,
        });
    }
    let labeled = LabeledSemirings::new(n);
    if !up_to_iso {
        return Ok(Box::new(labeled));
    }
    let mut classes: BTreeMap<Vec<u8>, ()> = BTreeMap::new();
    for s in labeled {
        classes.insert(canonical_form(&s)?, ());
    }
    let reps: Vec<FiniteSemiring> = classes
        .into_keys()
        .enumerate()
        .map(|(k, form)| from_form(format!("E{n}-{k}"), n, &form))
        .collect();
    Ok(Box::new(reps.into_iter()))
}

fn from_form(id: String, n: usize, form: &[u8]) -> FiniteSemiring {
    let (add, mul) = form.split_at(n * n);
    let one = (0..n)
        .find(|&e| (0..n).all(|a| mul[e * n + a] as usize == a))
        .expect("canonical form keeps a multiplicative identity");
    FiniteSemiring::from_flat_unchecked(id, n, one, add.to_vec(), mul.to_vec())
}

/// All permutations of `{1..n-1}`, each as a full map on `{0..n-1}` fixing `0`.
pub fn permutations_fixing_zero(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..left.len() {
            let x = left.remove(i);
            prefix.push(x);
            rec(prefix, left, out);
            prefix.pop();
            left.insert(i, x);
        }
    }
    let mut out = Vec::new();
    let mut prefix = vec![0];
    let mut left: Vec<usize> = (1..n).collect();
    if n == 0 {
        return vec![vec![]];
    }
    rec(&mut prefix, &mut left, &mut out);
    out
}

/// Tables of `s` relabeled along `perm` (old index -> new index), add then mul.
pub fn relabel(s: &FiniteSemiring, perm: &[usize]) -> Vec<u8> {
    let n = s.order();
    let mut add = vec![0u8; n * n];
    let mut mul = vec![0u8; n * n];
    for a in 0..n {
        for b in 0..n {
            add[perm[a] * n + perm[b]] = perm[s.add(a, b)] as u8;
            mul[perm[a] * n + perm[b]] = perm[s.mul(a, b)] as u8;
        }
    }
    add.extend(mul);
    add
}

/// Lexicographically least relabeled table pair over permutations fixing `0`.
pub fn canonical_form(s: &FiniteSemiring) -> Result<Vec<u8>> {
    if s.order() > MAX_CANONICAL_ORDER {
        return Err(Error::SizeLimitExceeded {
            what: "canonical form order",
            got: s.order(),
            limit: MAX_CANONICAL_ORDER,
        });
    }
    Ok(permutations_fixing_zero(s.order())
        .iter()
        .map(|p| relabel(s, p))
        .min()
        .expect("at least the identity permutation"))
}

pub fn is_isomorphic(s: &FiniteSemiring, t: &FiniteSemiring) -> Result<bool> {
    if s.order() != t.order() {
        return Ok(false);
    }
    Ok(canonical_form(s)? == canonical_form(t)?)
}

/// Number of automorphisms (relabelings fixing both tables).
pub fn automorphism_count(s: &FiniteSemiring) -> usize {
    let mut own = s.add_flat().to_vec();
    own.extend_from_slice(s.mul_flat());
    permutations_fixing_zero(s.order())
        .iter()
        .filter(|p| relabel(s, p) == own)
        .count()
}
