//! Per-instance reports and the theorem outcomes derived from them.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::Value;

use crate::classify::{classify_with, verify_witnesses, IdealScope};
use crate::disconnect::DisconnectionWitness;
use crate::error::{Error, Hypothesis, Result};
use crate::semiring::FiniteSemiring;
use crate::space::{
    check_fg_spectrum_maximals, ConnectedReport, Connectivity, IrreducibleUpsetReport, IsekiSpace,
    LawVerdict, QuasiCompactReport, SoberReport, T0Report, T1Report, UpsetLawReport,
    DEFAULT_FAMILY_SIZE,
};
use crate::spectrum::SpectrumClass;

/// Topological checks selectable per run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    T0,
    T1,
    Sober,
    Compact,
    Connected,
    UpsetLaws,
    IrreducibleUpsets,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::T0,
        Check::T1,
        Check::Sober,
        Check::Compact,
        Check::Connected,
        Check::UpsetLaws,
        Check::IrreducibleUpsets,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Check::T0 => "t0",
            Check::T1 => "t1",
            Check::Sober => "sober",
            Check::Compact => "compact",
            Check::Connected => "connected",
            Check::UpsetLaws => "upset-laws",
            Check::IrreducibleUpsets => "irreducible-upsets",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        Check::ALL
            .into_iter()
            .find(|c| c.tag() == t || (t == "quasi-compact" && *c == Check::Compact))
            .ok_or_else(|| Error::Field {
                field: "checks".into(),
                msg: format!("unknown check `{s}`"),
            })
    }
}

/// Parses a comma-separated check list; `all` selects everything.
pub fn parse_checks(list: &str) -> Result<Vec<Check>> {
    if list.trim().eq_ignore_ascii_case("all") {
        return Ok(Check::ALL.to_vec());
    }
    let mut checks = list
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(Check::from_str)
        .collect::<Result<Vec<_>>>()?;
    checks.sort();
    checks.dedup();
    Ok(checks)
}

/// One theorem oracle evaluated on one instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Outcome {
    pub theorem: &'static str,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl Outcome {
    pub fn new(theorem: &'static str, pass: bool, witness: impl FnOnce() -> Value) -> Self {
        Outcome {
            theorem,
            pass,
            witness: (!pass).then(witness),
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

/// What happened when asking a disconnected space for an idempotent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdempotentStatus {
    Extracted,
    NoWitness,
    InvalidWitness,
    MissingMaximal,
    NonzeroJacobson,
    NoUnitDecomposition,
}

#[derive(Debug, Clone, Serialize)]
pub struct Details {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t0: Option<T0Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t1: Option<T1Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sober: Option<SoberReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quasi_compact: Option<QuasiCompactReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub connected: Option<ConnectedReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upset_laws: Option<UpsetLawReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub irreducible_upsets: Option<IrreducibleUpsetReport>,
}

/// Everything decided about one `(semiring, class)` space.
#[derive(Debug, Clone, Serialize)]
pub struct TopologyReport {
    pub semiring: String,
    pub class: String,
    pub points: Vec<Vec<usize>>,
    pub closed_set_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t0: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t1: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t1_predicate: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sober: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sober_criterion: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quasi_compact: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub connected: Option<Connectivity>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub disconnection_witness: Option<Option<DisconnectionWitness>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub idempotent: Option<Option<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub idempotent_status: Option<IdempotentStatus>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upset_laws: Option<LawVerdict>,
    pub details: Details,
    /// Theorem oracles that failed on this instance.
    pub oracle_failures: Vec<&'static str>,
    #[serde(skip)]
    pub outcomes: Vec<Outcome>,
}

impl TopologyReport {
    pub fn all_pass(&self) -> bool {
        self.oracle_failures.is_empty()
    }
}

fn sober_by_theorem(class: &SpectrumClass) -> bool {
    matches!(
        class,
        SpectrumClass::Proper | SpectrumClass::Prime | SpectrumClass::StronglyIrreducible
    )
}

/// Runs `checks` on `space`. The idempotent extraction runs with the
/// connectivity check.
pub fn topology_report(space: &IsekiSpace<'_>, checks: &[Check]) -> TopologyReport {
    let spec = space.spectrum();
    let has = |c: Check| checks.contains(&c);
    let mut outcomes = Vec::new();
    let mut details = Details {
        t0: None,
        t1: None,
        sober: None,
        quasi_compact: None,
        connected: None,
        upset_laws: None,
        irreducible_upsets: None,
    };
    let mut r = TopologyReport {
        semiring: space.semiring().id().to_string(),
        class: spec.class().tag(),
        points: spec.point_docs(),
        closed_set_count: space.family().len(),
        t0: None,
        t1: None,
        t1_predicate: None,
        sober: None,
        sober_criterion: None,
        quasi_compact: None,
        connected: None,
        disconnection_witness: None,
        idempotent: None,
        idempotent_status: None,
        upset_laws: None,
        details: details.clone(),
        oracle_failures: Vec::new(),
        outcomes: Vec::new(),
    };

    if has(Check::T0) {
        let t = space.check_t0();
        r.t0 = Some(t.t0);
        outcomes.push(Outcome::new("t0", t.t0, || to_value(&t.witness)));
        details.t0 = Some(t);
    }
    if has(Check::T1) {
        let t = space.check_t1();
        r.t1 = Some(t.t1);
        r.t1_predicate = Some(t.predicate);
        outcomes.push(Outcome::new("t1-characterization", t.agree, || {
            to_value(&t)
        }));
        details.t1 = Some(t);
    }
    if has(Check::Sober) {
        let t = space.check_sober();
        r.sober = Some(t.sober);
        r.sober_criterion = Some(t.criterion);
        outcomes.push(Outcome::new("sober-agreement", t.agree, || to_value(&t)));
        if sober_by_theorem(spec.class()) {
            outcomes.push(Outcome::new("sober-corollary", t.sober, || {
                to_value(&t.witness)
            }));
        }
        details.sober = Some(t);
    }
    if has(Check::Compact) {
        let t = space.check_quasi_compact(DEFAULT_FAMILY_SIZE);
        r.quasi_compact = Some(t.quasi_compact);
        let ok = t.quasi_compact && t.mechanism_holds && t.sum_identity_holds;
        outcomes.push(Outcome::new("quasi-compact-mechanism", ok, || {
            to_value(&t.witness)
        }));
        details.quasi_compact = Some(t);
    }
    if has(Check::Connected) {
        let t = space.check_connected();
        r.connected = Some(t.connected);
        if t.contains_zero_ideal {
            outcomes.push(Outcome::new(
                "connected-zero-ideal",
                t.theorem_holds,
                || to_value(&t.split),
            ));
        }
        let witness = space.strong_disconnection_witness();
        let extraction = space.idempotent_from_disconnection(witness.as_ref());
        let s = space.semiring();
        let status = match &extraction {
            Ok(_) => IdempotentStatus::Extracted,
            Err(Error::HypothesisUnmet(Hypothesis::NoWitness)) => IdempotentStatus::NoWitness,
            Err(Error::HypothesisUnmet(Hypothesis::InvalidWitness)) => {
                IdempotentStatus::InvalidWitness
            }
            Err(Error::HypothesisUnmet(Hypothesis::MissingMaximal)) => {
                IdempotentStatus::MissingMaximal
            }
            Err(Error::HypothesisUnmet(Hypothesis::NonzeroJacobson)) => {
                IdempotentStatus::NonzeroJacobson
            }
            Err(_) => IdempotentStatus::NoUnitDecomposition,
        };
        if matches!(
            status,
            IdempotentStatus::Extracted | IdempotentStatus::NoUnitDecomposition
        ) {
            let ok = extraction
                .as_ref()
                .is_ok_and(|&e| s.mul(e, e) == e && e != s.zero() && e != s.one());
            outcomes.push(Outcome::new("idempotent-extraction", ok, || {
                to_value(&witness)
            }));
        }
        r.idempotent = Some(extraction.ok());
        r.idempotent_status = Some(status);
        r.disconnection_witness = Some(witness);
        details.connected = Some(t);
    }
    if has(Check::UpsetLaws) {
        let t = space.verify_upset_laws(DEFAULT_FAMILY_SIZE);
        let ok = t.verdict == LawVerdict::Pass;
        outcomes.push(Outcome::new("upset-laws", ok, || to_value(&t.verdict)));
        r.upset_laws = Some(t.verdict.clone());
        details.upset_laws = Some(t);
    }
    if has(Check::IrreducibleUpsets) {
        let t = space.check_irreducible_upsets();
        outcomes.push(Outcome::new("irreducible-upsets", t.holds, || {
            to_value(&t.witness)
        }));
        details.irreducible_upsets = Some(t);
    }

    r.details = details;
    r.oracle_failures = outcomes
        .iter()
        .filter(|o| !o.pass)
        .map(|o| o.theorem)
        .collect();
    r.outcomes = outcomes;
    r
}

/// Oracles that depend only on the semiring: the radical equivalence,
/// the classification chain with witness re-validation, and the
/// finitely generated spectrum keeping every maximal ideal.
pub fn semiring_outcomes(s: &FiniteSemiring) -> Vec<Outcome> {
    let mut out = Vec::new();
    let ideals = s.all_ideals(false);
    for a in &ideals {
        let r = s.radical(a);
        let rp = s.radical_via_primes(a);
        out.push(Outcome::new("radical-oracle", r == rp, || {
            serde_json::json!({
                "semiring": s.id(),
                "ideal": a.members().to_vec(),
                "radical": r.members().to_vec(),
                "via_primes": rp.members().to_vec(),
            })
        }));
    }
    for a in ideals.iter().filter(|a| a.is_proper()) {
        let c = classify_with(s, a, &ideals, IdealScope::IncludeWhole).expect("proper ideal");
        let ok = c.chain_holds() && verify_witnesses(s, a, &c);
        out.push(Outcome::new(
            "classification-chain",
            ok,
            || serde_json::json!({ "semiring": s.id(), "classification": to_value(&c) }),
        ));
    }
    if !s.is_trivial() {
        let fg = check_fg_spectrum_maximals(s, s.order());
        out.push(Outcome::new(
            "fg-spectrum-maximals",
            fg.all_maximals_present && fg.unbounded_contains_maximals,
            || serde_json::json!({ "semiring": s.id(), "report": to_value(&fg) }),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::named::*;

    #[test]
    fn check_parsing() {
        assert_eq!(parse_checks("t0,t1").unwrap(), vec![Check::T0, Check::T1]);
        assert_eq!(parse_checks("all").unwrap(), Check::ALL.to_vec());
        assert_eq!(
            parse_checks("upset-laws, t0").unwrap(),
            vec![Check::T0, Check::UpsetLaws]
        );
        assert!(parse_checks("t2").is_err());
    }

    #[test]
    fn product_maximal_report() {
        let bb = boolean().direct_product(&boolean()).unwrap();
        let space = IsekiSpace::of(&bb, SpectrumClass::Maximal).unwrap();
        let r = topology_report(&space, &Check::ALL);
        assert!(r.all_pass(), "{:?}", r.oracle_failures);
        assert_eq!(r.connected, Some(Connectivity::Disconnected));
        assert!(matches!(r.idempotent, Some(Some(1 | 2))));
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["points"], serde_json::json!([[0, 1], [0, 2]]));
        assert_eq!(v["closed_set_count"], 4);
        assert_eq!(v["upset_laws"], "pass");
        assert_eq!(v["t1"], true);
    }

    #[test]
    fn connected_report_has_null_witness() {
        let c3 = chain(3);
        let space = IsekiSpace::of(&c3, SpectrumClass::Prime).unwrap();
        let r = topology_report(&space, &[Check::Connected]);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["connected"], true);
        assert!(v["disconnection_witness"].is_null());
        assert!(v["idempotent"].is_null());
        assert!(v.get("t0").is_none());
    }

    #[test]
    fn empty_spectrum_is_degenerate() {
        let t = trivial();
        let space = IsekiSpace::of(&t, SpectrumClass::Prime).unwrap();
        let r = topology_report(&space, &Check::ALL);
        assert!(r.all_pass());
        assert_eq!(r.connected, Some(Connectivity::Degenerate));
        assert_eq!(serde_json::to_value(&r).unwrap()["connected"], "degenerate");
    }

    #[test]
    fn semiring_oracles_hold_on_small_examples() {
        for s in [boolean(), zmod(4), chain(4), truncated(3), zmod(6)] {
            for o in semiring_outcomes(&s) {
                assert!(o.pass, "{} {}", s.id(), o.theorem);
            }
        }
    }
}
