//! The coarse lower topology on a spectrum.
//!
//! Closed sets are generated from the up-sets `a↑` of every ideal `a`:
//! first closed under intersection, then under finite union. Since union
//! distributes over intersection the result is closed under both.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::spectrum::{PointSet, Spectrum};

/// Default cap on the number of spectrum points.
pub const DEFAULT_POINT_CAP: usize = 20;

/// Upper bound on the number of closed sets ever materialised.
pub const MAX_CLOSED_SETS: usize = 1 << 20;

/// Point cap, overridable through `ISEKI_SIZE_CAP` (clamped to 64).
pub fn point_cap() -> usize {
    std::env::var("ISEKI_SIZE_CAP")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map(|v| v.min(64))
        .unwrap_or(DEFAULT_POINT_CAP)
}

#[derive(Debug, Clone)]
pub struct ClosedFamily {
    /// Every closed set, ascending.
    sets: Vec<PointSet>,
    /// `(a, a↑)` for every ideal `a`.
    subbasis: Vec<(Ideal, PointSet)>,
    /// `Cl({i})` for each point `i`.
    point_closures: Vec<PointSet>,
    full: PointSet,
}

impl ClosedFamily {
    pub fn build(spec: &Spectrum<'_>) -> Result<Self> {
        Self::build_with_cap(spec, point_cap())
    }

    pub fn build_with_cap(spec: &Spectrum<'_>, cap: usize) -> Result<Self> {
        let cap = cap.min(64);
        if spec.len() > cap {
            return Err(Error::SpectrumTooLarge {
                points: spec.len(),
                cap,
            });
        }
        let too_large = || Error::SpectrumTooLarge {
            points: spec.len(),
            cap,
        };
        let full = spec.full();
        let subbasis: Vec<(Ideal, PointSet)> =
            spec.ideals().iter().map(|a| (*a, spec.up_set(a))).collect();

        // intersection closure, seeded with the empty intersection
        let mut meets: HashSet<PointSet> = HashSet::new();
        meets.insert(full);
        let mut work: Vec<PointSet> = Vec::new();
        for &(_, u) in &subbasis {
            if meets.insert(u) {
                work.push(u);
            }
        }
        while let Some(x) = work.pop() {
            let current: Vec<PointSet> = meets.iter().copied().collect();
            for y in current {
                let z = x.intersection(y);
                if meets.insert(z) {
                    work.push(z);
                }
            }
            if meets.len() > MAX_CLOSED_SETS {
                return Err(too_large());
            }
        }

        // finite unions, the empty union included
        let mut sets: HashSet<PointSet> = HashSet::new();
        sets.insert(PointSet::EMPTY);
        let mut basics: Vec<PointSet> = meets.into_iter().collect();
        basics.sort();
        for b in basics {
            let current: Vec<PointSet> = sets.iter().copied().collect();
            for f in current {
                sets.insert(f.union(b));
            }
            if sets.len() > MAX_CLOSED_SETS {
                return Err(too_large());
            }
        }
        let mut sets: Vec<PointSet> = sets.into_iter().collect();
        sets.sort();

        let mut family = ClosedFamily {
            sets,
            subbasis,
            point_closures: Vec::new(),
            full,
        };
        family.point_closures = (0..spec.len())
            .map(|i| family.closure(PointSet::singleton(i)))
            .collect();
        Ok(family)
    }

    pub fn sets(&self) -> &[PointSet] {
        &self.sets
    }

    pub fn subbasis(&self) -> &[(Ideal, PointSet)] {
        &self.subbasis
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn full(&self) -> PointSet {
        self.full
    }

    pub fn is_closed(&self, set: PointSet) -> bool {
        self.sets.binary_search(&set).is_ok()
    }

    /// Smallest closed set containing `pts`: the intersection of every
    /// closed superset.
    pub fn closure(&self, pts: PointSet) -> PointSet {
        self.sets
            .iter()
            .filter(|c| pts.is_subset(**c))
            .fold(self.full, |acc, c| acc.intersection(*c))
    }

    pub fn point_closure(&self, i: usize) -> PointSet {
        self.point_closures[i]
    }

    /// Closure of a finite set as the union of its point closures.
    pub fn closure_of_points(&self, pts: PointSet) -> PointSet {
        pts.iter()
            .fold(PointSet::EMPTY, |acc, i| acc.union(self.point_closures[i]))
    }

    /// A closed `k` is irreducible when nonempty and not the union of two
    /// proper closed subsets. For closed `k1 ⊊ k`, the least closed `k2`
    /// with `k1 ∪ k2 = k` is `Cl(k \ k1)`.
    pub fn is_irreducible(&self, k: PointSet) -> bool {
        self.reduction(k).is_none() && !k.is_empty()
    }

    /// Two proper closed subsets of `k` whose union is `k`, if any.
    pub fn reduction(&self, k: PointSet) -> Option<(PointSet, PointSet)> {
        self.sets
            .iter()
            .filter(|k1| k1.is_subset(k) && **k1 != k)
            .find_map(|&k1| {
                let k2 = self.closure_of_points(k.difference(k1));
                (k2 != k).then_some((k1, k2))
            })
    }

    /// Every nonempty irreducible closed set, ascending.
    pub fn irreducible_sets(&self) -> Vec<PointSet> {
        self.sets
            .iter()
            .copied()
            .filter(|k| self.is_irreducible(*k))
            .collect()
    }

    /// A closed set `u` with `∅ ≠ u ≠ X` whose complement is closed.
    pub fn clopen_split(&self) -> Option<(PointSet, PointSet)> {
        self.sets
            .iter()
            .copied()
            .filter(|u| !u.is_empty() && *u != self.full)
            .find(|u| self.is_closed(self.full.difference(*u)))
            .map(|u| (u, self.full.difference(u)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::named::*;
    use crate::spectrum::SpectrumClass;

    /// Up-closed subsets of the inclusion order, by brute force.
    fn up_closed_subsets(spec: &Spectrum) -> Vec<PointSet> {
        let n = spec.len();
        let mut out = Vec::new();
        for bits in 0..(1u64 << n) {
            let s = PointSet(bits);
            let ok = s.iter().all(|i| {
                (0..n).all(|j| !spec.points()[i].is_subset(&spec.points()[j]) || s.contains(j))
            });
            if ok {
                out.push(s);
            }
        }
        out
    }

    #[test]
    fn one_point_space() {
        let b = boolean();
        let spec = Spectrum::new(&b, SpectrumClass::Prime);
        let fam = ClosedFamily::build(&spec).unwrap();
        assert_eq!(fam.sets(), &[PointSet::EMPTY, PointSet::singleton(0)]);
    }

    #[test]
    fn product_maximal_spectrum_is_discrete() {
        let bb = boolean().direct_product(&boolean()).unwrap();
        let spec = Spectrum::new(&bb, SpectrumClass::Maximal);
        let fam = ClosedFamily::build(&spec).unwrap();
        assert_eq!(fam.len(), 4);
    }

    #[test]
    fn chain_prime_spectrum_is_sierpinski() {
        let c3 = chain(3);
        let spec = Spectrum::new(&c3, SpectrumClass::Prime);
        assert_eq!(spec.point_docs(), vec![vec![0], vec![0, 1]]);
        let fam = ClosedFamily::build(&spec).unwrap();
        assert_eq!(
            fam.sets(),
            &[PointSet::EMPTY, PointSet::singleton(1), PointSet::full(2)]
        );
    }

    #[test]
    fn family_matches_up_closed_subsets() {
        let samples = [
            boolean().direct_product(&chain(3)).unwrap(),
            zmod(6),
            chain(5),
            truncated(4),
            boolean()
                .direct_product(&boolean())
                .unwrap()
                .direct_product(&boolean())
                .unwrap(),
        ];
        for s in &samples {
            for class in SpectrumClass::standard() {
                let spec = Spectrum::new(s, class);
                let fam = ClosedFamily::build(&spec).unwrap();
                assert_eq!(
                    fam.sets(),
                    up_closed_subsets(&spec).as_slice(),
                    "{} {}",
                    s.id(),
                    spec.class()
                );
            }
        }
    }

    #[test]
    fn closures_agree() {
        let s = boolean().direct_product(&chain(3)).unwrap();
        let spec = Spectrum::new(&s, SpectrumClass::Proper);
        let fam = ClosedFamily::build(&spec).unwrap();
        for bits in 0..(1u64 << spec.len()) {
            let p = PointSet(bits);
            assert_eq!(fam.closure(p), fam.closure_of_points(p));
        }
        assert_eq!(fam.closure(PointSet::EMPTY), PointSet::EMPTY);
        assert_eq!(fam.closure(spec.full()), spec.full());
    }

    #[test]
    fn cap_is_enforced() {
        let s = boolean().direct_product(&chain(3)).unwrap();
        let spec = Spectrum::new(&s, SpectrumClass::Proper);
        assert!(matches!(
            ClosedFamily::build_with_cap(&spec, 2),
            Err(Error::SpectrumTooLarge { .. })
        ));
    }
}
