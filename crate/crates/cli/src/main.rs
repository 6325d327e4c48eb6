use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use iseki_core::classify::classify_with;
use iseki_core::classify::{verify_witnesses, IdealScope};
use iseki_core::io::{corpus_text, ingest, ingest_corpus, to_canonical};
use iseki_core::morphism::Verdict;
use iseki_core::report::parse_checks;
use iseki_core::sweep::DEFAULT_MORPHISM_ORDER;
use iseki_core::topology::point_cap;
use iseki_core::{
    builtin_catalog, enumerate_homomorphisms, export_dot, morphism_report, sweep, topology_report,
    Corpus, FiniteSemiring, IsekiSpace, Spectrum, SpectrumClass, SweepConfig,
};

/// Iséki spaces of finite commutative semirings.
///
/// SEMIRING arguments are JSON files, or `catalog:ID` for a built-in entry
/// (see `iseki catalog`).
#[derive(Parser)]
#[command(name = "iseki", version)]
struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a semiring document against the axioms.
    Validate { semiring: String },
    /// Classify every proper ideal.
    Ideals { semiring: String },
    /// List the points of one spectrum.
    Spectrum {
        semiring: String,
        #[arg(long, default_value = "prime")]
        class: SpectrumClass,
    },
    /// Topological checks on one spectrum.
    Topology {
        semiring: String,
        #[arg(long, default_value = "prime")]
        class: SpectrumClass,
        /// Comma-separated: t0,t1,sober,compact,connected,upset-laws,irreducible-upsets, or all.
        #[arg(long, default_value = "all")]
        checks: String,
    },
    /// Induced maps for every homomorphism SOURCE -> TARGET.
    Morphisms {
        source: String,
        target: String,
        #[arg(long, default_value = "prime")]
        class: SpectrumClass,
    },
    /// Run every theorem oracle over a corpus.
    Sweep {
        /// Add all semirings of order <= N up to isomorphism.
        #[arg(long, value_name = "N")]
        enumerate: Option<usize>,
        /// Leave the built-in catalog out of the corpus.
        #[arg(long)]
        no_catalog: bool,
        /// Extra semirings: one document or an array of them.
        #[arg(long, value_name = "FILE")]
        corpus: Vec<PathBuf>,
        /// Comma-separated class tags, or `all` for the eight standard ones.
        #[arg(long, default_value = "all")]
        classes: String,
        #[arg(long, default_value = "all")]
        checks: String,
        /// Largest order in the morphism suite; 0 disables it.
        #[arg(long, default_value_t = DEFAULT_MORPHISM_ORDER)]
        morphism_order: usize,
        /// Worker threads; defaults to the available cores.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Graphviz Hasse diagram of a spectrum.
    ExportDot {
        semiring: String,
        #[arg(long, default_value = "prime")]
        class: SpectrumClass,
    },
    /// Print the built-in catalog as a corpus document.
    Catalog {
        /// Print recipes instead of tables.
        #[arg(long)]
        recipes: bool,
    },
}

fn load(arg: &str) -> Result<FiniteSemiring> {
    if let Some(id) = arg.strip_prefix("catalog:") {
        return builtin_catalog()
            .into_iter()
            .find(|e| e.id == id)
            .map(|e| e.semiring)
            .with_context(|| format!("no catalog entry `{id}`"));
    }
    ingest(arg).with_context(|| format!("reading {arg}"))
}

fn parse_classes(list: &str) -> Result<Vec<SpectrumClass>> {
    if list.trim().eq_ignore_ascii_case("all") {
        return Ok(SpectrumClass::standard());
    }
    list.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.parse::<SpectrumClass>().map_err(Into::into))
        .collect()
}

struct Output {
    text: String,
    ok: bool,
}

fn json_out(v: &impl serde::Serialize, ok: bool) -> Output {
    Output {
        text: to_canonical(v),
        ok,
    }
}

fn run(cmd: Command) -> Result<Output> {
    Ok(match cmd {
        Command::Validate { semiring } => match load(&semiring) {
            Ok(s) => json_out(
                &json!({ "id": s.id(), "n": s.order(), "valid": true }),
                true,
            ),
            Err(e) => {
                let cause = e.root_cause().to_string();
                json_out(
                    &json!({ "source": semiring, "valid": false, "error": cause }),
                    false,
                )
            }
        },
        Command::Ideals { semiring } => {
            let s = load(&semiring)?;
            let ideals = s.all_ideals(false);
            let mut ok = true;
            let mut docs = Vec::new();
            for a in ideals.iter().filter(|a| a.is_proper()) {
                let c = classify_with(&s, a, &ideals, IdealScope::default())?;
                ok &= c.chain_holds() && verify_witnesses(&s, a, &c);
                docs.push(serde_json::to_value(&c)?);
            }
            let radicals: Vec<Value> = ideals
                .iter()
                .map(|a| {
                    let r = s.radical(a);
                    ok &= r == s.radical_via_primes(a);
                    json!({ "ideal": a.members().to_vec(), "radical": r.members().to_vec() })
                })
                .collect();
            let v = json!({
                "semiring": s.id(),
                "ideals": docs,
                "radicals": radicals,
                "jacobson_radical": s.jacobson_radical().members().to_vec(),
            });
            json_out(&v, ok)
        }
        Command::Spectrum { semiring, class } => {
            let s = load(&semiring)?;
            let spec = Spectrum::new(&s, class);
            let v = json!({ "semiring": s.id(), "class": spec.class().tag(), "points": spec.point_docs() });
            json_out(&v, true)
        }
        Command::Topology {
            semiring,
            class,
            checks,
        } => {
            let s = load(&semiring)?;
            let checks = parse_checks(&checks)?;
            let space = IsekiSpace::of(&s, class)?;
            let r = topology_report(&space, &checks);
            json_out(&r, r.all_pass())
        }
        Command::Morphisms {
            source,
            target,
            class,
        } => {
            let s = load(&source)?;
            let t = load(&target)?;
            let on_s = IsekiSpace::of(&s, class.clone())?;
            let on_t = IsekiSpace::of(&t, class.clone())?;
            let homs = enumerate_homomorphisms(&s, &t)?;
            let reports: Vec<_> = homs
                .iter()
                .map(|h| morphism_report(h, &on_s, &on_t))
                .collect();
            let must_contract = matches!(class, SpectrumClass::Prime | SpectrumClass::Proper);
            let ok = reports.iter().all(|r| {
                (r.contraction || !must_contract)
                    && r.continuous != Verdict::No
                    && r.homeomorphism_onto_kernel_upset != Verdict::No
                    && r.density_biconditional != Verdict::No
            });
            json_out(&reports, ok)
        }
        Command::Sweep {
            enumerate,
            no_catalog,
            corpus,
            classes,
            checks,
            morphism_order,
            jobs,
        } => {
            let mut c = Corpus {
                description: String::new(),
                semirings: Vec::new(),
            };
            let mut parts = Vec::new();
            if !no_catalog {
                let b = Corpus::builtin();
                parts.push(b.description);
                c.semirings.extend(b.semirings);
            }
            if let Some(n) = enumerate {
                let e = Corpus::enumerated(n)?;
                parts.push(e.description);
                c.semirings.extend(e.semirings);
            }
            for path in &corpus {
                c.semirings.extend(
                    ingest_corpus(path).with_context(|| format!("reading {}", path.display()))?,
                );
                parts.push(format!("file {}", path.display()));
            }
            if c.semirings.is_empty() {
                bail!("the corpus is empty");
            }
            c.description = parts.join(" + ");
            let defaults = SweepConfig::default();
            let cfg = SweepConfig {
                classes: parse_classes(&classes)?,
                checks: parse_checks(&checks)?,
                point_cap: point_cap(),
                morphism_max_order: morphism_order,
                jobs: jobs.unwrap_or(defaults.jobs),
            };
            let start = Instant::now();
            let r = sweep(&c, &cfg)?;
            eprintln!(
                "swept {} semirings x {} classes in {:.2?}; failing: {:?}",
                r.corpus.size,
                r.classes.len(),
                start.elapsed(),
                r.failing_theorems()
            );
            json_out(&r, r.all_pass)
        }
        Command::ExportDot { semiring, class } => {
            let s = load(&semiring)?;
            Output {
                text: export_dot(&Spectrum::new(&s, class)),
                ok: true,
            }
        }
        Command::Catalog { recipes } => {
            let cat = builtin_catalog();
            if recipes {
                json_out(&cat, true)
            } else {
                let semirings: Vec<FiniteSemiring> = cat.into_iter().map(|e| e.semiring).collect();
                Output {
                    text: corpus_text(&semirings),
                    ok: true,
                }
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out;
    match run(cli.command) {
        Ok(o) => {
            let written = match &out {
                Some(path) => std::fs::write(path, &o.text)
                    .with_context(|| format!("writing {}", path.display())),
                None => {
                    print!("{}", o.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            if o.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
