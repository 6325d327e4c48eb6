//! Theorem sweep over a corpus of semirings.
//!
//! Jobs are independent `(semiring, class)` pairs run on a rayon pool and
//! collected in corpus order, so the report does not depend on the number
//! of workers.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::builtin_semirings;
use crate::enumerate::enumerate_semirings;
use crate::error::{Error, Result};
use crate::homomorphism::{bourne_quotient, Homomorphism};
use crate::morphism::{
    check_contraction, check_density, check_functoriality, check_quotient_homeomorphism,
    enumerate_homomorphisms, induced_map, kernel,
};
use crate::report::{semiring_outcomes, topology_report, Check, Outcome, TopologyReport};
use crate::semiring::FiniteSemiring;
use crate::space::IsekiSpace;
use crate::spectrum::{Spectrum, SpectrumClass};
use crate::topology::point_cap;

/// Failing witnesses kept per theorem.
pub const MAX_WITNESSES: usize = 5;

/// Largest semiring order included in the morphism suite.
pub const DEFAULT_MORPHISM_ORDER: usize = 3;

#[derive(Debug, Clone)]
pub struct Corpus {
    pub description: String,
    pub semirings: Vec<FiniteSemiring>,
}

impl Corpus {
    pub fn builtin() -> Self {
        Corpus {
            description: "builtin catalog".into(),
            semirings: builtin_semirings(),
        }
    }

    /// Every semiring of order `1..=max_order` up to isomorphism.
    pub fn enumerated(max_order: usize) -> Result<Self> {
        let mut semirings = Vec::new();
        for n in 1..=max_order {
            semirings.extend(enumerate_semirings(n, true)?);
        }
        Ok(Corpus {
            description: format!("all semirings of order <= {max_order} up to isomorphism"),
            semirings,
        })
    }

    pub fn builtin_and_enumerated(max_order: usize) -> Result<Self> {
        let mut c = Corpus::builtin();
        let e = Corpus::enumerated(max_order)?;
        c.description = format!("{} + {}", c.description, e.description);
        c.semirings.extend(e.semirings);
        Ok(c)
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub classes: Vec<SpectrumClass>,
    pub checks: Vec<Check>,
    pub point_cap: usize,
    /// Semirings of at most this order enter the morphism suite; 0 skips it.
    pub morphism_max_order: usize,
    pub jobs: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            classes: SpectrumClass::standard(),
            checks: Check::ALL.to_vec(),
            point_cap: point_cap(),
            morphism_max_order: DEFAULT_MORPHISM_ORDER,
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Tally {
    pub instances: usize,
    pub passes: usize,
    pub failures: usize,
    pub witnesses: Vec<Value>,
}

impl Tally {
    fn record(&mut self, o: Outcome) {
        self.instances += 1;
        if o.pass {
            self.passes += 1;
        } else {
            self.failures += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(o.witness.unwrap_or(Value::Null));
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub semiring: String,
    pub class: String,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusSummary {
    pub description: String,
    pub size: usize,
    pub semirings: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub corpus: CorpusSummary,
    pub classes: Vec<String>,
    pub checks: Vec<&'static str>,
    pub morphism_max_order: usize,
    pub instances: Vec<TopologyReport>,
    pub skipped: Vec<Skipped>,
    pub tallies: BTreeMap<&'static str, Tally>,
    pub all_pass: bool,
}

impl SweepReport {
    pub fn tally(&self, theorem: &str) -> Option<&Tally> {
        self.tallies.get(theorem)
    }

    pub fn failing_theorems(&self) -> Vec<&'static str> {
        self.tallies
            .iter()
            .filter(|(_, t)| t.failures > 0)
            .map(|(k, _)| *k)
            .collect()
    }
}

enum Job {
    Done(TopologyReport),
    Skipped(Skipped),
}

fn run_instance(s: &FiniteSemiring, class: &SpectrumClass, cfg: &SweepConfig) -> Job {
    let spec = Spectrum::new(s, class.clone());
    match IsekiSpace::with_cap(spec, cfg.point_cap) {
        Ok(space) => Job::Done(topology_report(&space, &cfg.checks)),
        Err(e) => Job::Skipped(Skipped {
            semiring: s.id().to_string(),
            class: class.tag(),
            reason: e.to_string(),
        }),
    }
}

fn hom_doc(h: &Homomorphism) -> Value {
    json!({ "source": h.source, "target": h.target, "map": h.map })
}

/// Morphism oracles, prime class, for every hom out of `small[i]`.
fn morphism_outcomes(
    i: usize,
    small: &[&FiniteSemiring],
    spaces: &[IsekiSpace<'_>],
    homs: &[Vec<Vec<Homomorphism>>],
) -> Vec<Outcome> {
    let mut out = Vec::new();
    let on_s = &spaces[i];
    for (j, t) in small.iter().enumerate() {
        let on_t = &spaces[j];
        for h in &homs[i][j] {
            let c = check_contraction(h, on_s, on_t);
            out.push(Outcome::new(
                "contraction-prime",
                c.holds,
                || json!({ "hom": hom_doc(h), "point": c.counterexample }),
            ));
            let Ok(m) = induced_map(h, on_s, on_t) else {
                continue;
            };
            out.push(Outcome::new("induced-continuity", m.continuous && m.subbasis_identity, || {
                json!({ "hom": hom_doc(h), "continuous": m.continuous, "subbasis_identity": m.subbasis_identity })
            }));
            if h.is_surjective(t) {
                let q = check_quotient_homeomorphism(h, on_s, on_t)
                    .expect("surjective and contracting");
                out.push(Outcome::new(
                    "quotient-homeomorphism",
                    q.homeomorphism_onto_kernel_upset,
                    || json!({ "hom": hom_doc(h), "report": serde_json::to_value(&q).unwrap() }),
                ));
            }
            let d = check_density(h, on_s, on_t).expect("contracting");
            let doc = || {
                json!({
                    "hom": hom_doc(h),
                    "kernel": kernel(h, small[i]).members().to_vec(),
                    "report": serde_json::to_value(&d).unwrap(),
                })
            };
            out.push(Outcome::new(
                "density-biconditional",
                d.biconditional_holds,
                doc,
            ));
            out.push(Outcome::new(
                "closure-image-kernel",
                d.closure_equals_kernel_upset,
                doc,
            ));
            if let Some(eq) = d.prime_equality_holds {
                out.push(Outcome::new("density-prime-equality", eq, doc));
            }
            for (k, _) in small.iter().enumerate() {
                for g in &homs[j][k] {
                    if let Ok(ok) = check_functoriality(h, g, on_s, on_t, &spaces[k]) {
                        out.push(Outcome::new(
                            "functoriality",
                            ok,
                            || json!({ "first": hom_doc(h), "second": hom_doc(g) }),
                        ));
                    }
                }
            }
        }
    }
    out
}

/// The Bourne quotient by every proper ideal under the prime and proper
/// classes: `σ(S/x)` must map homeomorphically onto `x↑`.
fn quotient_outcomes(s: &FiniteSemiring, cap: usize) -> Vec<Outcome> {
    let mut out = Vec::new();
    for x in s.all_ideals(true) {
        let (q, h) = bourne_quotient(s, &x);
        for class in [SpectrumClass::Prime, SpectrumClass::Proper] {
            let (Ok(on_s), Ok(on_q)) = (
                IsekiSpace::with_cap(Spectrum::new(s, class.clone()), cap),
                IsekiSpace::with_cap(Spectrum::new(&q, class.clone()), cap),
            ) else {
                continue;
            };
            let ideal_upset = on_s.up_set(&x).to_vec();
            let doc = |r: Value| {
                json!({
                    "semiring": s.id(),
                    "ideal": x.members().to_vec(),
                    "class": class.tag(),
                    "quotient_order": q.order(),
                    "ideal_upset": ideal_upset,
                    "report": r,
                })
            };
            match check_quotient_homeomorphism(&h, &on_s, &on_q) {
                Ok(r) => {
                    let ok = r.homeomorphism_onto_kernel_upset && r.image == ideal_upset;
                    out.push(Outcome::new("quotient-corollary", ok, || {
                        doc(serde_json::to_value(&r).unwrap())
                    }));
                }
                Err(e) => out.push(Outcome::new("quotient-corollary", false, || {
                    doc(Value::String(e.to_string()))
                })),
            }
        }
    }
    out
}

pub fn sweep(corpus: &Corpus, cfg: &SweepConfig) -> Result<SweepReport> {
    if corpus.semirings.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.max(1))
        .build()
        .map_err(|e| Error::Range(format!("thread pool: {e}")))?;

    let pairs: Vec<(&FiniteSemiring, &SpectrumClass)> = corpus
        .semirings
        .iter()
        .flat_map(|s| cfg.classes.iter().map(move |c| (s, c)))
        .collect();

    let small: Vec<&FiniteSemiring> = corpus
        .semirings
        .iter()
        .filter(|s| s.order() <= cfg.morphism_max_order)
        .collect();

    let (jobs, per_semiring, quotients, morphisms) = pool.install(|| {
        let jobs: Vec<Job> = pairs
            .par_iter()
            .map(|(s, c)| run_instance(s, c, cfg))
            .collect();
        let per_semiring: Vec<Vec<Outcome>> =
            corpus.semirings.par_iter().map(semiring_outcomes).collect();
        let quotients: Vec<Vec<Outcome>> = corpus
            .semirings
            .par_iter()
            .map(|s| quotient_outcomes(s, cfg.point_cap))
            .collect();

        let spaces: Vec<IsekiSpace<'_>> = small
            .iter()
            .map(|s| {
                IsekiSpace::with_cap(Spectrum::new(s, SpectrumClass::Prime), cfg.point_cap)
                    .expect("small spectra")
            })
            .collect();
        let homs: Vec<Vec<Vec<Homomorphism>>> = small
            .par_iter()
            .map(|s| {
                small
                    .iter()
                    .map(|t| enumerate_homomorphisms(s, t).expect("small order"))
                    .collect()
            })
            .collect();
        let morphisms: Vec<Vec<Outcome>> = (0..small.len())
            .into_par_iter()
            .map(|i| morphism_outcomes(i, &small, &spaces, &homs))
            .collect();
        (jobs, per_semiring, quotients, morphisms)
    });

    let mut tallies: BTreeMap<&'static str, Tally> = BTreeMap::new();
    let mut instances = Vec::new();
    let mut skipped = Vec::new();
    for job in jobs {
        match job {
            Job::Done(r) => {
                for o in r.outcomes.iter().cloned() {
                    tallies.entry(o.theorem).or_default().record(o);
                }
                instances.push(r);
            }
            Job::Skipped(s) => skipped.push(s),
        }
    }
    for o in per_semiring
        .into_iter()
        .chain(quotients)
        .chain(morphisms)
        .flatten()
    {
        tallies.entry(o.theorem).or_default().record(o);
    }
    let all_pass = tallies.values().all(|t| t.failures == 0);
    Ok(SweepReport {
        corpus: CorpusSummary {
            description: corpus.description.clone(),
            size: corpus.semirings.len(),
            semirings: corpus
                .semirings
                .iter()
                .map(|s| s.id().to_string())
                .collect(),
        },
        classes: cfg.classes.iter().map(SpectrumClass::tag).collect(),
        checks: cfg.checks.iter().map(|c| c.tag()).collect(),
        morphism_max_order: cfg.morphism_max_order,
        instances,
        skipped,
        tallies,
        all_pass,
    })
}
