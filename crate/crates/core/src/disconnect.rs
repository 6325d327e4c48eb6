//! Strong disconnections by the up-set subbasis, and the nontrivial
//! idempotent they force when the spectrum holds every maximal ideal and
//! the Jacobson radical vanishes.

use serde::Serialize;

use crate::error::{Error, Hypothesis, Result};
use crate::ideal::Ideal;
use crate::space::IsekiSpace;
use crate::spectrum::PointSet;

/// Two families of ideals whose up-set unions partition the spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisconnectionWitness {
    pub left: Vec<Ideal>,
    pub right: Vec<Ideal>,
    /// Single ideals `(x, y)` with `x↑` and `y↑` equal to the two sides,
    /// when such a reduction exists.
    pub reduced: Option<(Ideal, Ideal)>,
}

#[derive(Serialize)]
struct WitnessDoc {
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
    reduced: Option<(Vec<usize>, Vec<usize>)>,
}

impl Serialize for DisconnectionWitness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v = |f: &[Ideal]| f.iter().map(|i| i.members().to_vec()).collect();
        WitnessDoc {
            left: v(&self.left),
            right: v(&self.right),
            reduced: self
                .reduced
                .map(|(x, y)| (x.members().to_vec(), y.members().to_vec())),
        }
        .serialize(s)
    }
}

impl DisconnectionWitness {
    fn side(space: &IsekiSpace<'_>, family: &[Ideal]) -> PointSet {
        family
            .iter()
            .fold(PointSet::EMPTY, |acc, a| acc.union(space.up_set(a)))
    }

    /// Whether the two unions are nonempty, disjoint, and cover the space.
    pub fn is_valid(&self, space: &IsekiSpace<'_>) -> bool {
        let l = Self::side(space, &self.left);
        let r = Self::side(space, &self.right);
        !l.is_empty()
            && !r.is_empty()
            && l.intersection(r).is_empty()
            && l.union(r) == space.spectrum().full()
    }
}

impl IsekiSpace<'_> {
    /// Searches the closed sets for a clopen split and expresses each side
    /// by the minimal points it contains.
    pub fn strong_disconnection_witness(&self) -> Option<DisconnectionWitness> {
        let (u, v) = self.family().clopen_split()?;
        let spec = self.spectrum();
        let minimal = |side: PointSet| -> Vec<Ideal> {
            side.iter()
                .map(|i| spec.points()[i])
                .filter(|p| {
                    !side
                        .iter()
                        .any(|j| spec.points()[j] != *p && spec.points()[j].is_subset(p))
                })
                .collect()
        };
        let x = spec.kernel_of(u);
        let y = spec.kernel_of(v);
        let reduced = (spec.up_set(&x) == u && spec.up_set(&y) == v).then_some((x, y));
        Some(DisconnectionWitness {
            left: minimal(u),
            right: minimal(v),
            reduced,
        })
    }

    /// Extracts a nontrivial idempotent from a strong disconnection.
    ///
    /// The sides are reduced to `x = ⋂ left` and `y = ⋂ right`; then
    /// `x + y` is the whole semiring and `xy = 0`, so any `a + b = 1` with
    /// `a ∈ x`, `b ∈ y` gives `a = a(a + b) = a²`.
    pub fn idempotent_from_disconnection(
        &self,
        witness: Option<&DisconnectionWitness>,
    ) -> Result<usize> {
        let w = witness.ok_or(Error::HypothesisUnmet(Hypothesis::NoWitness))?;
        if !w.is_valid(self) {
            return Err(Error::HypothesisUnmet(Hypothesis::InvalidWitness));
        }
        if !self.spectrum().contains_all_maximals() {
            return Err(Error::HypothesisUnmet(Hypothesis::MissingMaximal));
        }
        let s = self.semiring();
        if !s.jacobson_radical().is_zero() {
            return Err(Error::HypothesisUnmet(Hypothesis::NonzeroJacobson));
        }
        let x = s.intersect_ideals(&w.left)?;
        let y = s.intersect_ideals(&w.right)?;
        let one = s.one();
        x.members()
            .iter()
            .find_map(|a| y.members().iter().find(|&b| s.add(a, b) == one).map(|_| a))
            .ok_or(Error::NoUnitDecomposition)
    }
}
