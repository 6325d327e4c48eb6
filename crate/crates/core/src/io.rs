//! Reading and writing semiring documents.
//!
//! The canonical form is compact JSON with the keys in declaration order
//! (`id`, `n`, `one`, `add`, `mul`) and a trailing newline.

use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semiring::{shape_problem, FiniteSemiring, RawSemiring};

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    }
}

fn from_raw(raw: RawSemiring) -> Result<FiniteSemiring> {
    if let Some((field, msg)) = shape_problem(&raw) {
        return Err(Error::Field {
            field: field.to_string(),
            msg,
        });
    }
    FiniteSemiring::validate(&raw)
}

pub fn parse_semiring(text: &str) -> Result<FiniteSemiring> {
    from_raw(serde_json::from_str(text).map_err(parse_error)?)
}

/// Accepts either one semiring document or an array of them.
pub fn parse_corpus(text: &str) -> Result<Vec<FiniteSemiring>> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(parse_error)?;
    let docs = match value {
        serde_json::Value::Array(items) => items,
        other => vec![other],
    };
    docs.into_iter()
        .enumerate()
        .map(|(i, doc)| {
            let raw: RawSemiring = serde_json::from_value(doc).map_err(|e| Error::Field {
                field: format!("[{i}]"),
                msg: e.to_string(),
            })?;
            from_raw(raw)
        })
        .collect()
}

pub fn ingest(path: impl AsRef<Path>) -> Result<FiniteSemiring> {
    parse_semiring(&fs::read_to_string(path)?)
}

pub fn ingest_corpus(path: impl AsRef<Path>) -> Result<Vec<FiniteSemiring>> {
    parse_corpus(&fs::read_to_string(path)?)
}

/// Canonical text of any serializable value.
pub fn to_canonical<T: Serialize + ?Sized>(value: &T) -> String {
    let mut text = serde_json::to_string(value).expect("report types serialize");
    text.push('\n');
    text
}

pub fn semiring_text(s: &FiniteSemiring) -> String {
    to_canonical(&s.to_raw())
}

pub fn corpus_text(corpus: &[FiniteSemiring]) -> String {
    let raws: Vec<RawSemiring> = corpus.iter().map(FiniteSemiring::to_raw).collect();
    to_canonical(&raws)
}

pub fn emit<T: Serialize + ?Sized>(path: impl AsRef<Path>, value: &T) -> Result<()> {
    fs::write(path, to_canonical(value))?;
    Ok(())
}

pub fn emit_semiring(path: impl AsRef<Path>, s: &FiniteSemiring) -> Result<()> {
    emit(path, &s.to_raw())
}
