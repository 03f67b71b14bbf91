//! JSON matroid descriptions.
//!
//! Three shapes are accepted, distinguished by which key is present:
//!
//! ```json
//! {"ground_set_size": 3, "bases": [[0, 1], [0, 2], [1, 2]]}
//! {"ground_set_size": 6, "rank": 3, "circuit_hyperplanes": [[0, 1, 2]]}
//! {"ground_set_size": 2, "flats_by_rank": [[[]], [[0], [1]], [[0, 1]]]}
//! ```
//!
//! Validation failures carry a JSON pointer to the offending value.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::set::{ElementSet, MAX_ELEMENTS};

use super::Matroid;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatroidFile {
    Bases { size: usize, bases: Vec<ElementSet> },
    SparsePaving { size: usize, rank: usize, circuit_hyperplanes: Vec<ElementSet> },
    Flats { size: usize, flats_by_rank: Vec<Vec<ElementSet>> },
}

fn err(pointer: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Json { pointer: pointer.into(), message: message.into() }
}

fn as_usize(v: &Value, ptr: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| err(ptr, "expected a nonnegative integer"))
}

fn as_array<'a>(v: &'a Value, ptr: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| err(ptr, "expected an array"))
}

fn parse_set(v: &Value, ptr: &str, size: usize) -> Result<ElementSet> {
    let mut s = ElementSet::EMPTY;
    for (i, e) in as_array(v, ptr)?.iter().enumerate() {
        let p = format!("{ptr}/{i}");
        let x = as_usize(e, &p)?;
        if x >= size {
            return Err(err(p, format!("element {x} out of range for ground set of size {size}")));
        }
        if s.contains(x) {
            return Err(err(p, format!("element {x} repeated")));
        }
        s.insert(x);
    }
    Ok(s)
}

fn parse_sets(v: &Value, ptr: &str, size: usize) -> Result<Vec<ElementSet>> {
    as_array(v, ptr)?
        .iter()
        .enumerate()
        .map(|(i, s)| parse_set(s, &format!("{ptr}/{i}"), size))
        .collect()
}

fn set_json(s: ElementSet) -> Value {
    Value::from(s.to_vec())
}

impl MatroidFile {
    pub fn parse(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| err("", e.to_string()))?;
        Self::from_value(&value)
    }

    pub fn from_value(value: &Value) -> Result<Self> {
        let obj = value.as_object().ok_or_else(|| err("", "expected an object"))?;
        let size = as_usize(
            obj.get("ground_set_size")
                .ok_or_else(|| err("/ground_set_size", "missing"))?,
            "/ground_set_size",
        )?;
        if size == 0 || size > MAX_ELEMENTS {
            return Err(err(
                "/ground_set_size",
                format!("must be between 1 and {MAX_ELEMENTS}"),
            ));
        }
        if let Some(b) = obj.get("bases") {
            return Ok(MatroidFile::Bases { size, bases: parse_sets(b, "/bases", size)? });
        }
        if let Some(c) = obj.get("circuit_hyperplanes") {
            let rank = as_usize(obj.get("rank").ok_or_else(|| err("/rank", "missing"))?, "/rank")?;
            let circuit_hyperplanes = parse_sets(c, "/circuit_hyperplanes", size)?;
            return Ok(MatroidFile::SparsePaving { size, rank, circuit_hyperplanes });
        }
        if let Some(f) = obj.get("flats_by_rank") {
            let flats_by_rank = as_array(f, "/flats_by_rank")?
                .iter()
                .enumerate()
                .map(|(k, lvl)| parse_sets(lvl, &format!("/flats_by_rank/{k}"), size))
                .collect::<Result<_>>()?;
            return Ok(MatroidFile::Flats { size, flats_by_rank });
        }
        Err(err("", "expected one of \"bases\", \"circuit_hyperplanes\", \"flats_by_rank\""))
    }

    pub fn build(&self) -> Result<Matroid> {
        match self {
            MatroidFile::Bases { size, bases } => Matroid::from_bases(*size, bases),
            MatroidFile::SparsePaving { size, rank, circuit_hyperplanes } => {
                Matroid::sparse_paving(*rank, *size, circuit_hyperplanes)
            }
            MatroidFile::Flats { size, flats_by_rank } => Matroid::from_flats(*size, flats_by_rank),
        }
    }

    /// Describe an existing matroid by its lattice of flats.
    pub fn from_matroid(m: &Matroid) -> Self {
        MatroidFile::Flats { size: m.size(), flats_by_rank: m.flats_by_rank().to_vec() }
    }

    pub fn to_value(&self) -> Value {
        match self {
            MatroidFile::Bases { size, bases } => json!({
                "ground_set_size": size,
                "bases": bases.iter().map(|&b| set_json(b)).collect::<Vec<_>>(),
            }),
            MatroidFile::SparsePaving { size, rank, circuit_hyperplanes } => json!({
                "ground_set_size": size,
                "rank": rank,
                "circuit_hyperplanes":
                    circuit_hyperplanes.iter().map(|&b| set_json(b)).collect::<Vec<_>>(),
            }),
            MatroidFile::Flats { size, flats_by_rank } => json!({
                "ground_set_size": size,
                "flats_by_rank": flats_by_rank
                    .iter()
                    .map(|l| l.iter().map(|&f| set_json(f)).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            }),
        }
    }
}

/// Parse and build a matroid from JSON text.
pub fn parse_matroid_json(text: &str) -> Result<Matroid> {
    MatroidFile::parse(text)?.build()
}
