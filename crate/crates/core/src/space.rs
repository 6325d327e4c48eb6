//! Iséki spaces and the topological property checks run on them.
//!
//! Every check returns a plain report value. Where a theorem predicts the
//! outcome, the report carries both the computed verdict and whether the
//! prediction held, plus a witness when it did not.

use serde::ser::Serializer;
use serde::Serialize;

use crate::classify::{for_each_combination, min_generating_set};
use crate::error::Result;
use crate::ideal::Ideal;
use crate::semiring::{ElemSet, FiniteSemiring};
use crate::spectrum::{PointSet, Spectrum, SpectrumClass};
use crate::topology::ClosedFamily;

/// Default family size for the sum-identity and quasi-compactness sweeps.
pub const DEFAULT_FAMILY_SIZE: usize = 3;

/// A spectrum together with its closed-set lattice.
#[derive(Debug, Clone)]
pub struct IsekiSpace<'s> {
    spec: Spectrum<'s>,
    family: ClosedFamily,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct T0Report {
    pub t0: bool,
    /// Two distinct points with the same closure.
    pub witness: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct T1Report {
    pub t1: bool,
    /// A point whose closure is not a singleton.
    pub witness: Option<usize>,
    /// Whether the points are exactly the maximal ideals.
    pub predicate: bool,
    pub agree: bool,
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SoberReport {
    pub sober: bool,
    pub criterion: bool,
    pub agree: bool,
    pub irreducible_closed_sets: usize,
    /// An irreducible closed set without exactly one generic point.
    pub witness: Option<Vec<usize>>,
    /// An ideal whose irreducible up-set has no generic point in the spectrum.
    pub criterion_witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuasiCompactReport {
    /// Finite spaces are always quasi-compact.
    pub quasi_compact: bool,
    pub contains_all_maximals: bool,
    pub families_checked: usize,
    pub empty_intersections: usize,
    pub sum_identity_holds: bool,
    pub mechanism_holds: bool,
    /// Offending ideal family.
    pub witness: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connectivity {
    Connected,
    Disconnected,
    Degenerate,
}

impl Serialize for Connectivity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Connectivity::Connected => s.serialize_bool(true),
            Connectivity::Disconnected => s.serialize_bool(false),
            Connectivity::Degenerate => s.serialize_str("degenerate"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectedReport {
    pub connected: Connectivity,
    pub contains_zero_ideal: bool,
    /// Zero ideal among the points implies connected.
    pub theorem_holds: bool,
    /// A clopen split `(U, X \ U)` when disconnected.
    pub split: Option<(Vec<usize>, Vec<usize>)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrreducibleUpsetReport {
    pub holds: bool,
    pub points_checked: usize,
    /// A point `y` where `Cl({y}) ≠ y↑` or `y↑` is reducible.
    pub witness: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LawVerdict {
    Pass,
    Violation {
        law: String,
        ideals: Vec<Vec<usize>>,
    },
}

impl Serialize for LawVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Witness<'a> {
            law: &'a str,
            ideals: &'a [Vec<usize>],
        }
        match self {
            LawVerdict::Pass => s.serialize_str("pass"),
            LawVerdict::Violation { law, ideals } => Witness { law, ideals }.serialize(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UpsetLawReport {
    pub verdict: LawVerdict,
    pub all_points_radical: bool,
    pub checks: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FgMaximal {
    pub members: Vec<usize>,
    pub min_generators: usize,
    pub present: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FgReport {
    pub k: usize,
    pub points: usize,
    pub maximals: Vec<FgMaximal>,
    pub all_maximals_present: bool,
    /// With no bound on generators every maximal ideal must be a point.
    pub unbounded_contains_maximals: bool,
    pub degenerate: bool,
}

fn docs(ideals: &[Ideal]) -> Vec<Vec<usize>> {
    ideals.iter().map(|i| i.members().to_vec()).collect()
}

impl<'s> IsekiSpace<'s> {
    pub fn new(spec: Spectrum<'s>) -> Result<Self> {
        let family = ClosedFamily::build(&spec)?;
        Ok(IsekiSpace { spec, family })
    }

    pub fn with_cap(spec: Spectrum<'s>, cap: usize) -> Result<Self> {
        let family = ClosedFamily::build_with_cap(&spec, cap)?;
        Ok(IsekiSpace { spec, family })
    }

    pub fn of(semiring: &'s FiniteSemiring, class: SpectrumClass) -> Result<Self> {
        Self::new(Spectrum::new(semiring, class))
    }

    pub fn spectrum(&self) -> &Spectrum<'s> {
        &self.spec
    }

    pub fn family(&self) -> &ClosedFamily {
        &self.family
    }

    pub fn semiring(&self) -> &'s FiniteSemiring {
        self.spec.semiring()
    }

    pub fn up_set(&self, a: &Ideal) -> PointSet {
        self.spec.up_set(a)
    }

    pub fn closure(&self, pts: PointSet) -> PointSet {
        self.family.closure(pts)
    }

    pub fn check_t0(&self) -> T0Report {
        let n = self.spec.len();
        let witness = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| self.family.point_closure(i) == self.family.point_closure(j));
        T0Report {
            t0: witness.is_none(),
            witness,
        }
    }

    pub fn check_t1(&self) -> T1Report {
        let witness =
            (0..self.spec.len()).find(|&i| self.family.point_closure(i) != PointSet::singleton(i));
        let t1 = witness.is_none();
        let predicate = self.spec.points() == self.semiring().maximal_ideals().as_slice();
        T1Report {
            t1,
            witness,
            predicate,
            agree: t1 == predicate,
            degenerate: self.spec.is_empty(),
        }
    }

    pub fn check_sober(&self) -> SoberReport {
        let irreducible = self.family.irreducible_sets();
        let n = self.spec.len();
        let witness = irreducible
            .iter()
            .find(|&&k| {
                (0..n)
                    .filter(|&i| self.family.point_closure(i) == k)
                    .count()
                    != 1
            })
            .map(|k| k.to_vec());

        let criterion_witness = self
            .spec
            .ideals()
            .iter()
            .find(|a| {
                let up = self.spec.up_set(a);
                !up.is_empty()
                    && self.family.is_irreducible(up)
                    && self.spec.index_of(&self.spec.kernel_of(up)).is_none()
            })
            .map(|a| a.members().to_vec());

        let sober = witness.is_none();
        let criterion = criterion_witness.is_none();
        SoberReport {
            sober,
            criterion,
            agree: sober == criterion,
            irreducible_closed_sets: irreducible.len(),
            witness,
            criterion_witness,
        }
    }

    /// Checks the sum/maximal-ideal mechanism behind quasi-compactness
    /// over every ideal family of at most `max_family` members.
    pub fn check_quasi_compact(&self, max_family: usize) -> QuasiCompactReport {
        let s = self.semiring();
        let ideals = self.spec.ideals();
        let all_max = self.spec.contains_all_maximals();
        let maximals = s.maximal_ideals();
        let mut report = QuasiCompactReport {
            quasi_compact: true,
            contains_all_maximals: all_max,
            families_checked: 0,
            empty_intersections: 0,
            sum_identity_holds: true,
            mechanism_holds: true,
            witness: None,
        };
        for size in 1..=max_family.min(ideals.len()) {
            for_each_combination(ideals, size, &mut |fam| {
                report.families_checked += 1;
                let meet = fam.iter().fold(self.spec.full(), |acc, a| {
                    acc.intersection(self.spec.up_set(a))
                });
                let sum = s.sum_ideals(fam).expect("nonempty family");
                let mut bad = false;
                if meet != self.spec.up_set(&sum) {
                    report.sum_identity_holds = false;
                    bad = true;
                }
                if meet.is_empty() {
                    report.empty_intersections += 1;
                    let ok = if all_max {
                        !sum.is_proper()
                    } else {
                        !sum.is_proper()
                            || maximals
                                .iter()
                                .any(|m| sum.is_subset(m) && self.spec.index_of(m).is_none())
                    };
                    if !ok {
                        report.mechanism_holds = false;
                        bad = true;
                    }
                }
                if bad && report.witness.is_none() {
                    report.witness = Some(docs(fam));
                }
            });
        }
        report
    }

    pub fn check_connected(&self) -> ConnectedReport {
        let zero = self.semiring().zero_ideal();
        let contains_zero = zero.is_proper() && self.spec.index_of(&zero).is_some();
        if self.spec.is_empty() {
            return ConnectedReport {
                connected: Connectivity::Degenerate,
                contains_zero_ideal: false,
                theorem_holds: true,
                split: None,
            };
        }
        let split = self.family.clopen_split();
        let connected = if split.is_none() {
            Connectivity::Connected
        } else {
            Connectivity::Disconnected
        };
        ConnectedReport {
            connected,
            contains_zero_ideal: contains_zero,
            theorem_holds: !contains_zero || connected == Connectivity::Connected,
            split: split.map(|(u, v)| (u.to_vec(), v.to_vec())),
        }
    }

    pub fn check_irreducible_upsets(&self) -> IrreducibleUpsetReport {
        let witness = self.spec.points().iter().enumerate().find_map(|(i, y)| {
            let up = self.spec.up_set(y);
            let closure = self.family.closure(PointSet::singleton(i));
            (up != closure || !self.family.is_irreducible(up)).then_some(i)
        });
        IrreducibleUpsetReport {
            holds: witness.is_none(),
            points_checked: self.spec.len(),
            witness,
        }
    }

    /// Exhaustive check of the up-set laws over every ideal, pair, and
    /// family of at most `max_family` ideals.
    pub fn verify_upset_laws(&self, max_family: usize) -> UpsetLawReport {
        let s = self.semiring();
        let ideals = self.spec.ideals();
        let up = |a: &Ideal| self.spec.up_set(a);
        let mut checks = 0usize;
        let mut violation: Option<LawVerdict> = None;
        let mut flag = |law: &str, fam: &[Ideal], ok: bool, checks: &mut usize| {
            *checks += 1;
            if !ok && violation.is_none() {
                violation = Some(LawVerdict::Violation {
                    law: law.to_string(),
                    ideals: docs(fam),
                });
            }
        };

        let zero = s.zero_ideal();
        flag(
            "zero-ideal-upset-is-everything",
            &[zero],
            up(&zero) == self.spec.full(),
            &mut checks,
        );
        flag(
            "whole-upset-is-empty",
            &[s.whole()],
            up(&s.whole()).is_empty(),
            &mut checks,
        );

        for a in ideals {
            for b in ideals {
                if a.is_subset(b) {
                    flag(
                        "order-reversing",
                        &[*a, *b],
                        up(b).is_subset(up(a)),
                        &mut checks,
                    );
                }
                let meet = s.intersect_ideals(&[*a, *b]).expect("pair");
                let prod = s.product_ideals(a, b);
                flag(
                    "union-within-intersection-upset",
                    &[*a, *b],
                    up(a).union(up(b)).is_subset(up(&meet)),
                    &mut checks,
                );
                flag(
                    "intersection-within-product-upset",
                    &[*a, *b],
                    up(&meet).is_subset(up(&prod)),
                    &mut checks,
                );
            }
        }

        for size in 1..=max_family.min(ideals.len()) {
            for_each_combination(ideals, size, &mut |fam| {
                let meet = fam
                    .iter()
                    .fold(self.spec.full(), |acc, a| acc.intersection(up(a)));
                let sum = s.sum_ideals(fam).expect("nonempty family");
                flag(
                    "intersection-is-sum-upset",
                    fam,
                    meet == up(&sum),
                    &mut checks,
                );
            });
        }

        let mut radical_stable = true;
        for a in ideals {
            let r = s.radical(a);
            flag(
                "radical-upset-within",
                &[*a, r],
                up(&r).is_subset(up(a)),
                &mut checks,
            );
            radical_stable &= up(a) == up(&r);
            let gens = min_generating_set(s, a);
            let by_gens = gens.iter().fold(self.spec.full(), |acc, &g| {
                acc.intersection(up(&s.generated_ideal(ElemSet::singleton(g))))
            });
            flag(
                "generator-decomposition",
                &[*a],
                by_gens == up(a),
                &mut checks,
            );
        }
        let all_radical = self.spec.points().iter().all(|x| s.radical(x) == *x);
        flag(
            "radical-points-iff-radical-stable",
            &[],
            all_radical == radical_stable,
            &mut checks,
        );

        UpsetLawReport {
            verdict: violation.unwrap_or(LawVerdict::Pass),
            all_points_radical: all_radical,
            checks,
        }
    }
}

/// Reports which maximal ideals survive in the `fg(k)` spectrum.
pub fn check_fg_spectrum_maximals(s: &FiniteSemiring, k: usize) -> FgReport {
    let spec = Spectrum::new(s, SpectrumClass::FinitelyGenerated(k));
    let unbounded = Spectrum::new(s, SpectrumClass::FinitelyGenerated(s.order()));
    let maximals: Vec<FgMaximal> = s
        .maximal_ideals()
        .iter()
        .map(|m| FgMaximal {
            members: m.members().to_vec(),
            min_generators: min_generating_set(s, m).len(),
            present: spec.index_of(m).is_some(),
        })
        .collect();
    FgReport {
        k,
        points: spec.len(),
        all_maximals_present: maximals.iter().all(|m| m.present),
        unbounded_contains_maximals: unbounded.contains_all_maximals(),
        maximals,
        degenerate: s.is_trivial(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::named::*;

    fn bb() -> FiniteSemiring {
        boolean().direct_product(&boolean()).unwrap()
    }

    #[test]
    fn t0_on_small_spaces() {
        for (s, class) in [
            (boolean(), SpectrumClass::Prime),
            (bb(), SpectrumClass::Maximal),
            (chain(3), SpectrumClass::Prime),
            (trivial(), SpectrumClass::Proper),
        ] {
            let space = IsekiSpace::of(&s, class).unwrap();
            assert!(space.check_t0().t0);
        }
    }

    #[test]
    fn t1_examples() {
        let p = bb();
        let r = IsekiSpace::of(&p, SpectrumClass::Maximal)
            .unwrap()
            .check_t1();
        assert!(r.t1 && r.predicate && r.agree);
        let c3 = chain(3);
        let r = IsekiSpace::of(&c3, SpectrumClass::Prime)
            .unwrap()
            .check_t1();
        assert!(!r.t1 && !r.predicate && r.agree);
        assert_eq!(r.witness, Some(0));
        let t = trivial();
        let r = IsekiSpace::of(&t, SpectrumClass::Prime).unwrap().check_t1();
        assert!(r.t1 && r.predicate && r.degenerate);
    }

    #[test]
    fn t1_fails_to_match_for_partial_antichain() {
        // one of two maximal ideals: T1 holds but the predicate does not
        let p = bb();
        let m = p.maximal_ideals()[0];
        let spec = Spectrum::from_points(&p, SpectrumClass::Maximal, vec![m]);
        let r = IsekiSpace::new(spec).unwrap().check_t1();
        assert!(r.t1 && !r.predicate && !r.agree);
    }

    #[test]
    fn sober_examples() {
        for s in [bb(), zmod(4), chain(4), truncated(3)] {
            let r = IsekiSpace::of(&s, SpectrumClass::Prime)
                .unwrap()
                .check_sober();
            assert!(r.sober && r.criterion && r.agree);
        }
        let r = IsekiSpace::of(&bb(), SpectrumClass::Maximal)
            .unwrap()
            .check_sober();
        assert!(r.sober);
        assert_eq!(r.irreducible_closed_sets, 2);
    }

    #[test]
    fn quasi_compact_mechanism() {
        let p = bb();
        let space = IsekiSpace::of(&p, SpectrumClass::Maximal).unwrap();
        let r = space.check_quasi_compact(DEFAULT_FAMILY_SIZE);
        assert!(
            r.quasi_compact && r.contains_all_maximals && r.mechanism_holds && r.sum_identity_holds
        );
        assert!(r.empty_intersections > 0);
        let halves: Vec<Ideal> = p.maximal_ideals();
        let meet = space
            .up_set(&halves[0])
            .intersection(space.up_set(&halves[1]));
        assert!(meet.is_empty());
        assert!(!p.sum_ideals(&halves).unwrap().is_proper());
        assert_eq!(space.up_set(&p.zero_ideal()), space.spectrum().full());
    }

    #[test]
    fn quasi_compact_mechanism_without_all_maximals() {
        let p = bb();
        let m = p.maximal_ideals()[0];
        let spec = Spectrum::from_points(&p, SpectrumClass::Proper, vec![p.zero_ideal(), m]);
        let r = IsekiSpace::new(spec).unwrap().check_quasi_compact(3);
        assert!(!r.contains_all_maximals);
        assert!(r.mechanism_holds && r.sum_identity_holds);
    }

    #[test]
    fn fg_reports() {
        let r = check_fg_spectrum_maximals(&bb(), 1);
        assert!(r.all_maximals_present && r.unbounded_contains_maximals);
        assert!(r.maximals.iter().all(|m| m.min_generators == 1));
        let r = check_fg_spectrum_maximals(&zmod(4), 1);
        assert_eq!(
            r.maximals,
            vec![FgMaximal {
                members: vec![0, 2],
                min_generators: 1,
                present: true
            }]
        );
        let r = check_fg_spectrum_maximals(&trivial(), 1);
        assert!(r.degenerate && r.maximals.is_empty());
    }

    #[test]
    fn connectedness() {
        for s in [
            bb(),
            zmod(4),
            chain(3),
            boolean().direct_product(&chain(3)).unwrap(),
        ] {
            let r = IsekiSpace::of(&s, SpectrumClass::Proper)
                .unwrap()
                .check_connected();
            assert_eq!(r.connected, Connectivity::Connected);
            assert!(r.contains_zero_ideal && r.theorem_holds);
        }
        let p = bb();
        let r = IsekiSpace::of(&p, SpectrumClass::Maximal)
            .unwrap()
            .check_connected();
        assert_eq!(r.connected, Connectivity::Disconnected);
        assert!(r.theorem_holds);
        let b = boolean();
        let r = IsekiSpace::of(&b, SpectrumClass::Maximal)
            .unwrap()
            .check_connected();
        assert_eq!(r.connected, Connectivity::Connected);
        let t = trivial();
        let r = IsekiSpace::of(&t, SpectrumClass::Proper)
            .unwrap()
            .check_connected();
        assert_eq!(r.connected, Connectivity::Degenerate);
        assert_eq!(
            serde_json::to_string(&r.connected).unwrap(),
            "\"degenerate\""
        );
    }

    #[test]
    fn irreducible_upsets() {
        for (s, class) in [
            (boolean(), SpectrumClass::Prime),
            (bb(), SpectrumClass::Maximal),
            (chain(3), SpectrumClass::Prime),
            (zmod(4), SpectrumClass::Prime),
        ] {
            assert!(
                IsekiSpace::of(&s, class)
                    .unwrap()
                    .check_irreducible_upsets()
                    .holds
            );
        }
    }

    #[test]
    fn upset_laws() {
        for s in [bb(), zmod(4), chain(4), truncated(4)] {
            for class in SpectrumClass::standard() {
                let r = IsekiSpace::of(&s, class).unwrap().verify_upset_laws(3);
                assert_eq!(r.verdict, LawVerdict::Pass, "{} {:?}", s.id(), r);
            }
        }
        // Z4 primes {0,2}: {0}↑ = {0,2}↑
        let z4 = zmod(4);
        let space = IsekiSpace::of(&z4, SpectrumClass::Prime).unwrap();
        let zero = z4.zero_ideal();
        assert_eq!(space.up_set(&zero), space.up_set(&z4.radical(&zero)));
        assert!(space.verify_upset_laws(3).all_points_radical);
        let proper = IsekiSpace::of(&z4, SpectrumClass::Proper).unwrap();
        assert!(!proper.verify_upset_laws(3).all_points_radical);
        assert_eq!(
            serde_json::to_string(&LawVerdict::Pass).unwrap(),
            "\"pass\""
        );
    }
}
