//! Iséki spaces of finite commutative semirings.
//!
//! A spectrum is a class of proper ideals (prime, maximal, all proper, ...)
//! with the coarse lower topology, whose closed sets are generated by the
//! up-sets `a↑ = {x : a ⊆ x}`. This crate builds those spaces for
//! semirings given by Cayley tables and checks their topological
//! properties exhaustively, with every negative answer backed by a witness.
//!
//! ```
//! use iseki_core::{named, IsekiSpace, SpectrumClass};
//!
//! let bb = named::boolean().direct_product(&named::boolean()).unwrap();
//! let space = IsekiSpace::of(&bb, SpectrumClass::Maximal).unwrap();
//! assert!(space.check_t1().t1);
//! let w = space.strong_disconnection_witness().unwrap();
//! let e = space.idempotent_from_disconnection(Some(&w)).unwrap();
//! assert_eq!(bb.mul(e, e), e);
//! ```

pub mod catalog;
pub mod classify;
pub mod disconnect;
pub mod dot;
pub mod enumerate;
pub mod error;
pub mod homomorphism;
pub mod ideal;
pub mod io;
pub mod morphism;
pub mod report;
pub mod semiring;
pub mod space;
pub mod spectrum;
pub mod sweep;
pub mod topology;

pub use catalog::{builtin_catalog, builtin_semirings, CatalogEntry, Recipe};
pub use classify::{classify, IdealClassification};
pub use disconnect::DisconnectionWitness;
pub use dot::export_dot;
pub use enumerate::{canonical_form, enumerate_semirings, is_isomorphic};
pub use error::{Axiom, Error, Hypothesis, Result};
pub use homomorphism::{bourne_quotient, Homomorphism};
pub use ideal::{Ideal, IdealDoc};
pub use morphism::{enumerate_homomorphisms, morphism_report, InducedMap, MorphismReport};
pub use report::{topology_report, Check, Outcome, TopologyReport};
pub use semiring::{named, ElemSet, FiniteSemiring, RawSemiring};
pub use space::IsekiSpace;
pub use spectrum::{PointSet, Spectrum, SpectrumClass};
pub use sweep::{sweep, Corpus, SweepConfig, SweepReport, Tally};
pub use topology::ClosedFamily;
