//! Spectra: distinguished classes of proper ideals, viewed as point sets.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::classify::{
    irreducible_witness, min_generating_set, primary_witness, prime_witness,
    strong_irreducible_witness, IdealScope,
};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::semiring::FiniteSemiring;

/// A set of spectrum points, bit `i` standing for `points[i]`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet(pub u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn full(len: usize) -> Self {
        if len >= 64 {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << len) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        PointSet(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        PointSet(it.into_iter().fold(0, |acc, i| acc | 1 << i))
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn union(self, o: PointSet) -> Self {
        PointSet(self.0 | o.0)
    }

    #[inline]
    pub fn intersection(self, o: PointSet) -> Self {
        PointSet(self.0 & o.0)
    }

    #[inline]
    pub fn difference(self, o: PointSet) -> Self {
        PointSet(self.0 & !o.0)
    }

    #[inline]
    pub fn is_subset(self, o: PointSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..64).filter(move |&i| bits >> i & 1 == 1)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

type Predicate = dyn Fn(&FiniteSemiring, &Ideal) -> bool + Send + Sync;

/// A user-supplied spectrum predicate. Must be deterministic.
#[derive(Clone)]
pub struct CustomClass {
    name: String,
    predicate: Arc<Predicate>,
}

impl CustomClass {
    pub fn new(
        name: impl Into<String>,
        predicate: impl Fn(&FiniteSemiring, &Ideal) -> bool + Send + Sync + 'static,
    ) -> Self {
        CustomClass {
            name: name.into(),
            predicate: Arc::new(predicate),
        }
    }
}

#[derive(Clone)]
pub enum SpectrumClass {
    Proper,
    Prime,
    Maximal,
    Primary,
    Irreducible,
    StronglyIrreducible,
    Radical,
    Principal,
    /// Proper ideals with at most `k` generators.
    FinitelyGenerated(usize),
    Custom(CustomClass),
}

impl SpectrumClass {
    /// The eight fixed class tags.
    pub fn standard() -> Vec<SpectrumClass> {
        use SpectrumClass::*;
        vec![
            Proper,
            Prime,
            Maximal,
            Primary,
            Irreducible,
            StronglyIrreducible,
            Radical,
            Principal,
        ]
    }

    pub fn tag(&self) -> String {
        match self {
            SpectrumClass::Proper => "proper".into(),
            SpectrumClass::Prime => "prime".into(),
            SpectrumClass::Maximal => "maximal".into(),
            SpectrumClass::Primary => "primary".into(),
            SpectrumClass::Irreducible => "irreducible".into(),
            SpectrumClass::StronglyIrreducible => "strongly-irreducible".into(),
            SpectrumClass::Radical => "radical".into(),
            SpectrumClass::Principal => "principal".into(),
            SpectrumClass::FinitelyGenerated(k) => format!("fg({k})"),
            SpectrumClass::Custom(c) => format!("custom:{}", c.name),
        }
    }

    /// Whether the proper ideal `a` of `s` belongs to the class.
    /// `ideals` must list every ideal of `s`.
    pub fn admits(&self, s: &FiniteSemiring, a: &Ideal, ideals: &[Ideal]) -> bool {
        if !a.is_proper() {
            return false;
        }
        let scope = IdealScope::default();
        match self {
            SpectrumClass::Proper => true,
            SpectrumClass::Prime => prime_witness(s, a).is_none(),
            SpectrumClass::Maximal => !ideals
                .iter()
                .any(|b| b.is_proper() && b != a && a.is_subset(b)),
            SpectrumClass::Primary => primary_witness(s, a).is_none(),
            SpectrumClass::Irreducible => irreducible_witness(ideals, a, scope).is_none(),
            SpectrumClass::StronglyIrreducible => {
                strong_irreducible_witness(ideals, a, scope).is_none()
            }
            SpectrumClass::Radical => s.radical(a) == *a,
            SpectrumClass::Principal => min_generating_set(s, a).len() <= 1,
            SpectrumClass::FinitelyGenerated(k) => min_generating_set(s, a).len() <= *k,
            SpectrumClass::Custom(c) => (c.predicate)(s, a),
        }
    }
}

impl fmt::Debug for SpectrumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

impl fmt::Display for SpectrumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

impl PartialEq for SpectrumClass {
    fn eq(&self, other: &Self) -> bool {
        self.tag() == other.tag()
    }
}

impl FromStr for SpectrumClass {
    type Err = Error;

    /// Accepts the fixed tags plus `fg(k)` / `fg:k`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        let class = match t.as_str() {
            "proper" => SpectrumClass::Proper,
            "prime" => SpectrumClass::Prime,
            "maximal" => SpectrumClass::Maximal,
            "primary" => SpectrumClass::Primary,
            "irreducible" => SpectrumClass::Irreducible,
            "strongly-irreducible" | "strongly_irreducible" => SpectrumClass::StronglyIrreducible,
            "radical" => SpectrumClass::Radical,
            "principal" => SpectrumClass::Principal,
            _ => {
                let k = t
                    .strip_prefix("fg(")
                    .and_then(|r| r.strip_suffix(')'))
                    .or_else(|| t.strip_prefix("fg:"))
                    .and_then(|k| k.parse().ok())
                    .ok_or_else(|| Error::UnknownClass(s.to_string()))?;
                SpectrumClass::FinitelyGenerated(k)
            }
        };
        Ok(class)
    }
}

/// The points of one spectrum, ascending by member bitset, together with
/// every ideal of the semiring (the subbasis generators).
#[derive(Clone)]
pub struct Spectrum<'s> {
    semiring: &'s FiniteSemiring,
    class: SpectrumClass,
    points: Vec<Ideal>,
    ideals: Vec<Ideal>,
}

impl fmt::Debug for Spectrum<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Spectrum")
            .field("semiring", &self.semiring.id())
            .field("class", &self.class)
            .field("points", &self.points)
            .finish()
    }
}

impl<'s> Spectrum<'s> {
    pub fn new(semiring: &'s FiniteSemiring, class: SpectrumClass) -> Self {
        let ideals = semiring.all_ideals(false);
        let points = ideals
            .iter()
            .filter(|a| class.admits(semiring, a, &ideals))
            .copied()
            .collect();
        Spectrum {
            semiring,
            class,
            points,
            ideals,
        }
    }

    /// A spectrum with an explicit point list. Improper ideals and
    /// duplicates are dropped and the rest sorted.
    pub fn from_points(
        semiring: &'s FiniteSemiring,
        class: SpectrumClass,
        mut points: Vec<Ideal>,
    ) -> Self {
        points.retain(|p| p.is_proper());
        points.sort();
        points.dedup();
        Spectrum {
            semiring,
            class,
            points,
            ideals: semiring.all_ideals(false),
        }
    }

    pub fn semiring(&self) -> &'s FiniteSemiring {
        self.semiring
    }

    pub fn class(&self) -> &SpectrumClass {
        &self.class
    }

    pub fn points(&self) -> &[Ideal] {
        &self.points
    }

    /// Every ideal of the underlying semiring, the whole one included.
    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.points.len())
    }

    pub fn index_of(&self, a: &Ideal) -> Option<usize> {
        self.points.binary_search(a).ok()
    }

    /// Points containing `a`. Empty for the improper ideal.
    pub fn up_set(&self, a: &Ideal) -> PointSet {
        PointSet::from_indices(
            self.points
                .iter()
                .enumerate()
                .filter(|(_, x)| a.is_subset(x))
                .map(|(i, _)| i),
        )
    }

    /// Intersection of the points in `pts` (the whole semiring for `∅`).
    pub fn kernel_of(&self, pts: PointSet) -> Ideal {
        pts.iter().fold(self.semiring.whole(), |acc, i| {
            self.semiring
                .intersect_ideals(&[acc, self.points[i]])
                .expect("family is nonempty")
        })
    }

    /// Whether every maximal ideal of the semiring is a point.
    pub fn contains_all_maximals(&self) -> bool {
        self.semiring
            .maximal_ideals()
            .iter()
            .all(|m| self.index_of(m).is_some())
    }

    pub fn point_docs(&self) -> Vec<Vec<usize>> {
        self.points.iter().map(|p| p.members().to_vec()).collect()
    }
}
