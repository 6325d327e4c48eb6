//! Built-in semirings and reproducible recipes for them.

use std::fmt;
use std::path::PathBuf;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homomorphism::bourne_quotient;
use crate::semiring::{named, ElemSet, FiniteSemiring};

/// How a catalog semiring is built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Recipe {
    /// `trivial`, `boolean`, `chain:n`, `zmod:n`, `truncated:n`.
    Named {
        name: String,
    },
    Product {
        left: Box<Recipe>,
        right: Box<Recipe>,
    },
    Quotient {
        base: Box<Recipe>,
        ideal: Vec<usize>,
    },
    File {
        path: PathBuf,
    },
}

impl Recipe {
    pub fn named(name: impl Into<String>) -> Self {
        Recipe::Named { name: name.into() }
    }

    pub fn product(left: Recipe, right: Recipe) -> Self {
        Recipe::Product {
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn quotient(base: Recipe, ideal: Vec<usize>) -> Self {
        Recipe::Quotient {
            base: Box::new(base),
            ideal,
        }
    }

    pub fn evaluate(&self) -> Result<FiniteSemiring> {
        match self {
            Recipe::Named { name } => named_semiring(name),
            Recipe::Product { left, right } => left.evaluate()?.direct_product(&right.evaluate()?),
            Recipe::Quotient { base, ideal } => {
                let s = base.evaluate()?;
                if let Some(&bad) = ideal.iter().find(|&&a| a >= s.order()) {
                    return Err(Error::Range(format!("element {bad} outside {}", s.id())));
                }
                let x = s.ideal(ElemSet::from_elems(ideal.iter().copied()))?;
                Ok(bourne_quotient(&s, &x).0)
            }
            Recipe::File { path } => crate::io::ingest(path),
        }
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Named { name } => f.write_str(name),
            Recipe::Product { left, right } => write!(f, "({left} x {right})"),
            Recipe::Quotient { base, ideal } => {
                write!(f, "{base} / {}", ElemSet::from_elems(ideal.iter().copied()))
            }
            Recipe::File { path } => write!(f, "file:{}", path.display()),
        }
    }
}

fn named_semiring(name: &str) -> Result<FiniteSemiring> {
    let (head, arg) = match name.split_once(':') {
        Some((h, a)) => (
            h,
            Some(
                a.parse::<usize>()
                    .map_err(|_| Error::Range(format!("bad size in {name:?}")))?,
            ),
        ),
        None => (name, None),
    };
    let sized = |f: fn(usize) -> FiniteSemiring, n: Option<usize>| match n {
        Some(n) if (1..=crate::semiring::MAX_ORDER).contains(&n) => Ok(f(n)),
        _ => Err(Error::Range(format!("bad size in {name:?}"))),
    };
    match head {
        "trivial" if arg.is_none() => Ok(named::trivial()),
        "boolean" if arg.is_none() => Ok(named::boolean()),
        "chain" => sized(named::chain, arg),
        "zmod" => sized(named::zmod, arg),
        "truncated" => sized(named::truncated, arg),
        _ => Err(Error::Range(format!("unknown named semiring {name:?}"))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub id: String,
    pub recipe: Recipe,
    #[serde(skip)]
    pub semiring: FiniteSemiring,
}

impl CatalogEntry {
    pub fn from_recipe(recipe: Recipe) -> Result<Self> {
        let semiring = recipe.evaluate()?;
        Ok(CatalogEntry {
            id: semiring.id().to_string(),
            recipe,
            semiring,
        })
    }

    /// Whether re-running the recipe gives back the stored semiring.
    pub fn is_reproducible(&self) -> bool {
        self.recipe.evaluate().is_ok_and(|s| s == self.semiring)
    }
}

fn base_recipes() -> Vec<Recipe> {
    let b = || Recipe::named("boolean");
    vec![
        Recipe::named("trivial"),
        b(),
        Recipe::named("zmod:2"),
        Recipe::named("chain:3"),
        Recipe::named("chain:4"),
        Recipe::named("chain:5"),
        Recipe::named("zmod:4"),
        Recipe::product(b(), b()),
        Recipe::product(b(), Recipe::named("chain:3")),
    ]
}

/// The base semirings followed by the Bourne quotient of each by each of
/// its proper ideals.
pub fn builtin_catalog() -> Vec<CatalogEntry> {
    let bases: Vec<CatalogEntry> = base_recipes()
        .into_iter()
        .map(|r| CatalogEntry::from_recipe(r).expect("built-in recipes are valid"))
        .collect();
    let mut out = bases.clone();
    for base in &bases {
        for x in base.semiring.all_ideals(true) {
            let recipe = Recipe::quotient(base.recipe.clone(), x.members().to_vec());
            out.push(CatalogEntry::from_recipe(recipe).expect("quotient of a valid semiring"));
        }
    }
    out
}

/// Catalog semirings only, in catalog order.
pub fn builtin_semirings() -> Vec<FiniteSemiring> {
    builtin_catalog().into_iter().map(|e| e.semiring).collect()
}
