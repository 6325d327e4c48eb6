use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Semiring axioms in the order `FiniteSemiring::validate` checks them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    AdditiveIdentity,
    AdditiveCommutativity,
    AdditiveAssociativity,
    MultiplicativeIdentity,
    MultiplicativeCommutativity,
    MultiplicativeAssociativity,
    ZeroAbsorption,
    LeftDistributivity,
    RightDistributivity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::AdditiveIdentity => "additive identity",
            Axiom::AdditiveCommutativity => "additive commutativity",
            Axiom::AdditiveAssociativity => "additive associativity",
            Axiom::MultiplicativeIdentity => "multiplicative identity",
            Axiom::MultiplicativeCommutativity => "multiplicative commutativity",
            Axiom::MultiplicativeAssociativity => "multiplicative associativity",
            Axiom::ZeroAbsorption => "zero absorption",
            Axiom::LeftDistributivity => "left distributivity",
            Axiom::RightDistributivity => "right distributivity",
        };
        f.write_str(s)
    }
}

/// Hypotheses of the idempotent-extraction procedure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Hypothesis {
    /// No strong disconnection witness was supplied or found.
    NoWitness,
    /// The witness does not partition the spectrum.
    InvalidWitness,
    /// Some maximal ideal is missing from the spectrum.
    MissingMaximal,
    /// The intersection of all maximal ideals is not `{0}`.
    NonzeroJacobson,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Hypothesis::NoWitness => "no strong disconnection witness",
            Hypothesis::InvalidWitness => "witness does not partition the spectrum",
            Hypothesis::MissingMaximal => "spectrum does not contain every maximal ideal",
            Hypothesis::NonzeroJacobson => "Jacobson radical is nonzero",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("axiom violated: {axiom} (witness {witness:?})")]
    AxiomViolation { axiom: Axiom, witness: Vec<usize> },

    #[error("malformed semiring: {0}")]
    Range(String),

    #[error("size limit exceeded: {what} is {got}, limit {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("operation needs a nonempty family of ideals")]
    EmptyFamily,

    #[error("ideals belong to semirings of different order ({0} vs {1})")]
    OrderMismatch(usize, usize),

    #[error("operation requires a proper ideal")]
    ImproperIdeal,

    #[error("semiring has no maximal ideal (0 = 1)")]
    NoMaximalIdeal,

    #[error("spectrum has {points} points, cap is {cap}")]
    SpectrumTooLarge { points: usize, cap: usize },

    #[error("hypothesis unmet: {0}")]
    HypothesisUnmet(Hypothesis),

    #[error("no decomposition 1 = x + y with x, y drawn from the witness ideals")]
    NoUnitDecomposition,

    #[error("contraction fails: preimage of point {point} is not in the source spectrum")]
    ContractionFails { point: usize },

    #[error("homomorphism is not surjective")]
    NotSurjective,

    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse {
        line: usize,
        column: usize,
        msg: String,
    },

    #[error("parse error in field `{field}`: {msg}")]
    Field { field: String, msg: String },

    #[error("unknown spectrum class `{0}`")]
    UnknownClass(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
