//! Semiring homomorphisms and Bourne quotients.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::semiring::{ElemSet, FiniteSemiring};

/// A map preserving `+`, `·`, `0`, and `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Homomorphism {
    pub source: String,
    pub target: String,
    pub map: Vec<usize>,
}

impl Homomorphism {
    pub fn new(source: &FiniteSemiring, target: &FiniteSemiring, map: Vec<usize>) -> Result<Self> {
        check_map(source, target, &map)?;
        Ok(Homomorphism {
            source: source.id().to_string(),
            target: target.id().to_string(),
            map,
        })
    }

    pub fn identity(s: &FiniteSemiring) -> Self {
        Homomorphism {
            source: s.id().to_string(),
            target: s.id().to_string(),
            map: s.elements().collect(),
        }
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn image(&self, set: ElemSet) -> ElemSet {
        ElemSet::from_elems(set.iter().map(|a| self.map[a]))
    }

    pub fn preimage(&self, set: ElemSet) -> ElemSet {
        ElemSet::from_elems((0..self.map.len()).filter(|&a| set.contains(self.map[a])))
    }

    pub fn is_surjective(&self, target: &FiniteSemiring) -> bool {
        self.image(ElemSet::full(self.map.len())) == target.full_set()
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Homomorphism) -> Homomorphism {
        Homomorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            map: self.map.iter().map(|&b| next.map[b]).collect(),
        }
    }
}

fn check_map(s: &FiniteSemiring, t: &FiniteSemiring, map: &[usize]) -> Result<()> {
    if map.len() != s.order() {
        return Err(Error::NotHomomorphism(format!(
            "map has {} entries, source has {} elements",
            map.len(),
            s.order()
        )));
    }
    if let Some(&bad) = map.iter().find(|&&b| b >= t.order()) {
        return Err(Error::NotHomomorphism(format!(
            "image {bad} outside target"
        )));
    }
    if map[0] != 0 {
        return Err(Error::NotHomomorphism("0 is not sent to 0".into()));
    }
    if map[s.one()] != t.one() {
        return Err(Error::NotHomomorphism("1 is not sent to 1".into()));
    }
    for a in s.elements() {
        for b in s.elements() {
            if map[s.add(a, b)] != t.add(map[a], map[b]) {
                return Err(Error::NotHomomorphism(format!("sum {a}+{b} not preserved")));
            }
            if map[s.mul(a, b)] != t.mul(map[a], map[b]) {
                return Err(Error::NotHomomorphism(format!(
                    "product {a}·{b} not preserved"
                )));
            }
        }
    }
    Ok(())
}

/// `S / ~` for the Bourne congruence of `x`: `a ~ b` iff `a + i = b + j`
/// for some `i, j ∈ x`. Classes are numbered by least member, so the class
/// of `0` is `0`.
pub fn bourne_quotient(s: &FiniteSemiring, x: &Ideal) -> (FiniteSemiring, Homomorphism) {
    let n = s.order();
    // union-find over the generating relation, then closed to a fixpoint
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], a: usize) -> usize {
        let mut r = a;
        while p[r] != r {
            r = p[r];
        }
        let mut c = a;
        while p[c] != r {
            let next = p[c];
            p[c] = r;
            c = next;
        }
        r
    }
    fn union(p: &mut [usize], a: usize, b: usize) -> bool {
        let (ra, rb) = (find(p, a), find(p, b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        p[hi] = lo;
        true
    }
    for a in 0..n {
        for b in 0..n {
            let related = x
                .members()
                .iter()
                .any(|i| x.members().iter().any(|j| s.add(a, i) == s.add(b, j)));
            if related {
                union(&mut parent, a, b);
            }
        }
    }
    // compatibility closure: the relation above is already a congruence,
    // this loop only guards the invariant
    loop {
        let mut changed = false;
        for a in 0..n {
            for b in 0..n {
                if find(&mut parent, a) != find(&mut parent, b) {
                    continue;
                }
                for c in 0..n {
                    changed |= union(&mut parent, s.add(a, c), s.add(b, c));
                    changed |= union(&mut parent, s.mul(a, c), s.mul(b, c));
                }
            }
        }
        if !changed {
            break;
        }
    }

    let roots: Vec<usize> = (0..n).map(|a| find(&mut parent, a)).collect();
    let mut reps: Vec<usize> = roots.clone();
    reps.sort_unstable();
    reps.dedup();
    let class_of: Vec<usize> = roots
        .iter()
        .map(|r| reps.binary_search(r).expect("root is a representative"))
        .collect();
    let m = reps.len();
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &ra in &reps {
        for &rb in &reps {
            add.push(class_of[s.add(ra, rb)] as u8);
            mul.push(class_of[s.mul(ra, rb)] as u8);
        }
    }
    let id = format!("{}/{}", s.id(), x.members());
    let q = FiniteSemiring::from_flat_unchecked(id, m, class_of[s.one()], add, mul);
    let hom = Homomorphism {
        source: s.id().to_string(),
        target: q.id().to_string(),
        map: class_of,
    };
    (q, hom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::is_isomorphic;
    use crate::semiring::named::*;

    fn set(e: &[usize]) -> ElemSet {
        ElemSet::from_elems(e.iter().copied())
    }

    #[test]
    fn quotient_by_zero_is_identity() {
        let b = boolean();
        let (q, h) = bourne_quotient(&b, &b.zero_ideal());
        assert_eq!(q.add_rows(), b.add_rows());
        assert_eq!(q.mul_rows(), b.mul_rows());
        assert_eq!(h.map, vec![0, 1]);
    }

    #[test]
    fn product_quotient_is_boolean() {
        let bb = boolean().direct_product(&boolean()).unwrap();
        let x = bb.ideal(set(&[0, 2])).unwrap();
        let (q, h) = bourne_quotient(&bb, &x);
        assert!(is_isomorphic(&q, &boolean()).unwrap());
        assert_eq!(h.map, vec![0, 1, 0, 1]);
        Homomorphism::new(&bb, &q, h.map.clone()).unwrap();
    }

    #[test]
    fn z4_quotient_is_z2() {
        let z4 = zmod(4);
        let x = z4.ideal(set(&[0, 2])).unwrap();
        let (q, h) = bourne_quotient(&z4, &x);
        assert!(is_isomorphic(&q, &zmod(2)).unwrap());
        assert_eq!(h.map, vec![0, 1, 0, 1]);
    }

    #[test]
    fn saturating_quotient_collapses() {
        // in N3, {0,2} absorbs everything: 1 + 2 = 2 + 2
        let n3 = truncated(3);
        let x = n3.ideal(set(&[0, 2])).unwrap();
        let (q, _) = bourne_quotient(&n3, &x);
        assert!(q.is_trivial());
    }

    #[test]
    fn homomorphism_validation() {
        let b = boolean();
        let z2 = zmod(2);
        assert!(Homomorphism::new(&z2, &b, vec![0, 1]).is_err());
        assert!(Homomorphism::new(&b, &b, vec![0, 1]).is_ok());
        assert!(Homomorphism::new(&b, &b, vec![0, 0]).is_err());
        assert!(Homomorphism::new(&b, &b, vec![0]).is_err());
    }

    #[test]
    fn composition_and_surjectivity() {
        let z4 = zmod(4);
        let x = z4.ideal(set(&[0, 2])).unwrap();
        let (q, h) = bourne_quotient(&z4, &x);
        assert!(h.is_surjective(&q));
        let id = Homomorphism::identity(&z4);
        assert_eq!(id.then(&h).map, h.map);
        assert!(!id.is_surjective(&q));
    }
}
