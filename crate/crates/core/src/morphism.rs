//! Induced maps between Iséki spaces.
//!
//! A homomorphism `φ: S → T` pulls points of a spectrum of `T` back to
//! ideals of `S`; when those land in the matching spectrum of `S` the
//! pull-back `φ*` is a map of spaces.

use serde::ser::Serializer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homomorphism::Homomorphism;
use crate::ideal::Ideal;
use crate::semiring::FiniteSemiring;
use crate::space::IsekiSpace;
use crate::spectrum::PointSet;

/// Largest source order accepted by [`enumerate_homomorphisms`].
pub const MAX_HOM_SOURCE_ORDER: usize = 8;

/// All homomorphisms `s → t`, lexicographic in the element map.
pub fn enumerate_homomorphisms(
    s: &FiniteSemiring,
    t: &FiniteSemiring,
) -> Result<Vec<Homomorphism>> {
    if s.order() > MAX_HOM_SOURCE_ORDER {
        return Err(Error::SizeLimitExceeded {
            what: "homomorphism source order",
            got: s.order(),
            limit: MAX_HOM_SOURCE_ORDER,
        });
    }
    let n = s.order();
    let mut out = Vec::new();
    let mut map: Vec<Option<usize>> = vec![None; n];

    // partial consistency over the assigned prefix
    fn consistent(s: &FiniteSemiring, t: &FiniteSemiring, map: &[Option<usize>], k: usize) -> bool {
        for a in 0..=k {
            let Some(fa) = map[a] else { continue };
            for b in 0..=k {
                let Some(fb) = map[b] else { continue };
                if let Some(f) = map[s.add(a, b)] {
                    if f != t.add(fa, fb) {
                        return false;
                    }
                }
                if let Some(f) = map[s.mul(a, b)] {
                    if f != t.mul(fa, fb) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn rec(
        s: &FiniteSemiring,
        t: &FiniteSemiring,
        k: usize,
        map: &mut Vec<Option<usize>>,
        out: &mut Vec<Homomorphism>,
    ) {
        if k == s.order() {
            let full: Vec<usize> = map.iter().map(|v| v.expect("assigned")).collect();
            if let Ok(h) = Homomorphism::new(s, t, full) {
                out.push(h);
            }
            return;
        }
        let forced = if k == 0 {
            Some(0)
        } else if k == s.one() {
            Some(t.one())
        } else {
            None
        };
        let choices: Vec<usize> = match forced {
            Some(v) => vec![v],
            None => t.elements().collect(),
        };
        for v in choices {
            map[k] = Some(v);
            if consistent(s, t, map, k) {
                rec(s, t, k + 1, map, out);
            }
            map[k] = None;
        }
    }

    if s.one() == 0 && t.one() != 0 {
        return Ok(out);
    }
    rec(s, t, 0, &mut map, &mut out);
    Ok(out)
}

/// `φ⁻¹(0)`. Improper exactly when `φ` collapses `1` to `0`.
pub fn kernel(hom: &Homomorphism, s: &FiniteSemiring) -> Ideal {
    Ideal::from_members(
        hom.preimage(crate::semiring::ElemSet::singleton(0)),
        s.order(),
    )
}

/// `φ⁻¹(x')`, always an ideal of the source.
pub fn contract_ideal(hom: &Homomorphism, s: &FiniteSemiring, x: &Ideal) -> Ideal {
    Ideal::from_members(hom.preimage(x.members()), s.order())
}

/// Ideal of the target generated by `φ(x)`; may be improper.
pub fn extend_ideal(hom: &Homomorphism, t: &FiniteSemiring, x: &Ideal) -> Ideal {
    t.generated_ideal(hom.image(x.members()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContractionReport {
    pub class: String,
    pub holds: bool,
    /// A target point whose preimage leaves the source spectrum.
    pub counterexample: Option<Vec<usize>>,
}

fn check_spaces(hom: &Homomorphism, source: &IsekiSpace<'_>, target: &IsekiSpace<'_>) {
    debug_assert_eq!(hom.map.len(), source.semiring().order());
    debug_assert!(hom.map.iter().all(|&b| b < target.semiring().order()));
}

/// Whether every preimage of a point of `target` is a point of `source`.
pub fn check_contraction(
    hom: &Homomorphism,
    source: &IsekiSpace<'_>,
    target: &IsekiSpace<'_>,
) -> ContractionReport {
    check_spaces(hom, source, target);
    let s = source.semiring();
    let counterexample = target
        .spectrum()
        .points()
        .iter()
        .find(|x| {
            source
                .spectrum()
                .index_of(&contract_ideal(hom, s, x))
                .is_none()
        })
        .map(|x| x.members().to_vec());
    ContractionReport {
        class: source.spectrum().class().tag(),
        holds: counterexample.is_none(),
        counterexample,
    }
}

/// `φ*: σ_T → σ_S` as a point table together with its continuity checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InducedMap {
    pub hom: Vec<usize>,
    /// `map[i]` is the index in the source spectrum of `φ⁻¹(points_T[i])`.
    pub map: Vec<usize>,
    /// Preimage of every closed set of the source space is closed.
    pub continuous: bool,
    /// `(φ*)⁻¹(a↑) = ⟨φ(a)⟩↑` for every ideal `a` of the source semiring.
    pub subbasis_identity: bool,
}

impl InducedMap {
    pub fn image(&self) -> PointSet {
        PointSet::from_indices(self.map.iter().copied())
    }

    pub fn preimage(&self, set: PointSet) -> PointSet {
        PointSet::from_indices((0..self.map.len()).filter(|&i| set.contains(self.map[i])))
    }

    pub fn forward(&self, set: PointSet) -> PointSet {
        PointSet::from_indices(set.iter().map(|i| self.map[i]))
    }
}

pub fn induced_map(
    hom: &Homomorphism,
    source: &IsekiSpace<'_>,
    target: &IsekiSpace<'_>,
) -> Result<InducedMap> {
    check_spaces(hom, source, target);
    let s = source.semiring();
    let t = target.semiring();
    let mut map = Vec::with_capacity(target.spectrum().len());
    for (i, x) in target.spectrum().points().iter().enumerate() {
        let pulled = contract_ideal(hom, s, x);
        map.push(
            source
                .spectrum()
                .index_of(&pulled)
                .ok_or(Error::ContractionFails { point: i })?,
        );
    }
    let mut induced = InducedMap {
        hom: hom.map.clone(),
        map,
        continuous: false,
        subbasis_identity: false,
    };
    induced.subbasis_identity = source
        .spectrum()
        .ideals()
        .iter()
        .all(|a| induced.preimage(source.up_set(a)) == target.up_set(&extend_ideal(hom, t, a)));
    induced.continuous = source
        .family()
        .sets()
        .iter()
        .all(|c| target.family().is_closed(induced.preimage(*c)));
    Ok(induced)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    pub kernel: Vec<usize>,
    pub kernel_upset: Vec<usize>,
    pub image: Vec<usize>,
    pub injective: bool,
    pub image_is_kernel_upset: bool,
    /// Closed sets of the target space map to closed sets of the image subspace.
    pub closed_onto_image: bool,
    pub continuous: bool,
    pub homeomorphism_onto_kernel_upset: bool,
    /// A point of `Ker(φ)↑` outside the image.
    pub missing_point: Option<Vec<usize>>,
}

/// For surjective `φ`, checks that `φ*` is a homeomorphism of `σ_T` onto
/// the closed subspace `Ker(φ)↑` of `σ_S`.
pub fn check_quotient_homeomorphism(
    hom: &Homomorphism,
    source: &IsekiSpace<'_>,
    target: &IsekiSpace<'_>,
) -> Result<QuotientReport> {
    if !hom.is_surjective(target.semiring()) {
        return Err(Error::NotSurjective);
    }
    let induced = induced_map(hom, source, target)?;
    let ker = kernel(hom, source.semiring());
    let ker_up = source.up_set(&ker);
    let image = induced.image();
    let injective = image.len() == induced.map.len();
    let closed_onto_image = target.family().sets().iter().all(|c| {
        let pushed = induced.forward(*c);
        source.closure(pushed).intersection(image) == pushed
    });
    let image_is_kernel_upset = image == ker_up;
    let missing_point = ker_up
        .difference(image)
        .iter()
        .next()
        .map(|i| source.spectrum().points()[i].members().to_vec());
    Ok(QuotientReport {
        kernel: ker.members().to_vec(),
        kernel_upset: ker_up.to_vec(),
        image: image.to_vec(),
        injective,
        image_is_kernel_upset,
        closed_onto_image,
        continuous: induced.continuous,
        homeomorphism_onto_kernel_upset: injective
            && image_is_kernel_upset
            && closed_onto_image
            && induced.continuous,
        missing_point,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DensityReport {
    pub dense: bool,
    /// `Ker(φ) ⊆ ⋂ σ_S`.
    pub density_rhs: bool,
    pub biconditional_holds: bool,
    pub closure_equals_kernel_upset: bool,
    /// Prime class only: `dense ⟺ √Ker(φ) = ⋂ σ_S`.
    pub prime_equality_holds: Option<bool>,
}

pub fn check_density(
    hom: &Homomorphism,
    source: &IsekiSpace<'_>,
    target: &IsekiSpace<'_>,
) -> Result<DensityReport> {
    let induced = induced_map(hom, source, target)?;
    let s = source.semiring();
    let closure = source.closure(induced.image());
    let dense = closure == source.spectrum().full();
    let ker = kernel(hom, s);
    let meet = source.spectrum().kernel_of(source.spectrum().full());
    let rhs = ker.is_subset(&meet);
    let prime_equality_holds = matches!(
        source.spectrum().class(),
        crate::spectrum::SpectrumClass::Prime
    )
    .then(|| dense == (s.radical(&ker) == meet));
    Ok(DensityReport {
        dense,
        density_rhs: rhs,
        biconditional_holds: dense == rhs,
        closure_equals_kernel_upset: closure == source.up_set(&ker),
        prime_equality_holds,
    })
}

/// `(ψ∘φ)* = φ*∘ψ*` pointwise, for `φ: S → T`, `ψ: T → U`.
pub fn check_functoriality(
    phi: &Homomorphism,
    psi: &Homomorphism,
    on_s: &IsekiSpace<'_>,
    on_t: &IsekiSpace<'_>,
    on_u: &IsekiSpace<'_>,
) -> Result<bool> {
    let phi_star = induced_map(phi, on_s, on_t)?;
    let psi_star = induced_map(psi, on_t, on_u)?;
    let composite = induced_map(&phi.then(psi), on_s, on_u)?;
    Ok((0..on_u.spectrum().len()).all(|i| composite.map[i] == phi_star.map[psi_star.map[i]]))
}

/// A boolean that may not apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    NotApplicable,
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Self {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Verdict::Yes => s.serialize_bool(true),
            Verdict::No => s.serialize_bool(false),
            Verdict::NotApplicable => s.serialize_str("n/a"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MorphismReport {
    pub source: String,
    pub target: String,
    pub hom: Vec<usize>,
    pub class: String,
    pub contraction: bool,
    pub continuous: Verdict,
    pub homeomorphism_onto_kernel_upset: Verdict,
    pub dense: Verdict,
    pub density_rhs: Verdict,
    pub density_biconditional: Verdict,
    pub closure_equals_kernel_upset: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contraction_counterexample: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub missing_point: Option<Vec<usize>>,
}

/// Runs every morphism check for one homomorphism and one class.
pub fn morphism_report(
    hom: &Homomorphism,
    source: &IsekiSpace<'_>,
    target: &IsekiSpace<'_>,
) -> MorphismReport {
    use Verdict::NotApplicable as NA;
    let contraction = check_contraction(hom, source, target);
    let mut report = MorphismReport {
        source: hom.source.clone(),
        target: hom.target.clone(),
        hom: hom.map.clone(),
        class: contraction.class.clone(),
        contraction: contraction.holds,
        continuous: NA,
        homeomorphism_onto_kernel_upset: NA,
        dense: NA,
        density_rhs: NA,
        density_biconditional: NA,
        closure_equals_kernel_upset: NA,
        contraction_counterexample: contraction.counterexample,
        missing_point: None,
    };
    if !contraction.holds {
        return report;
    }
    let induced = induced_map(hom, source, target).expect("contraction holds");
    report.continuous = (induced.continuous && induced.subbasis_identity).into();
    if let Ok(q) = check_quotient_homeomorphism(hom, source, target) {
        report.homeomorphism_onto_kernel_upset = q.homeomorphism_onto_kernel_upset.into();
        report.missing_point = q.missing_point;
    }
    let d = check_density(hom, source, target).expect("contraction holds");
    report.dense = d.dense.into();
    report.density_rhs = d.density_rhs.into();
    report.density_biconditional = d.biconditional_holds.into();
    report.closure_equals_kernel_upset = d.closure_equals_kernel_upset.into();
    report
}
