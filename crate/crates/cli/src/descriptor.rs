//! Matroid descriptors on the command line.
//!
//! ```text
//! uniform:R,N   boolean:N   pg:R,Q   sparse:R,N;012|345   file:PATH
//! ```
//! In `sparse`, each `|`-separated block is a circuit-hyperplane written
//! either as single digits or as comma-separated elements.

use std::fmt;
use std::path::PathBuf;

use mixed_eulerian::matroid::parse_matroid_json;
use mixed_eulerian::{projective_geometry, ElementSet, Matroid};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatroidDescriptor {
    Uniform { rank: usize, size: usize },
    Boolean { size: usize },
    Pg { dimension: usize, q: u64 },
    Sparse { rank: usize, size: usize, circuit_hyperplanes: Vec<Vec<usize>> },
    File(PathBuf),
}

fn parse_error(input: &str, position: usize, message: impl Into<String>) -> CliError {
    CliError::Descriptor { input: input.to_string(), position, message: message.into() }
}

/// Splits `body` on commas, reporting positions relative to `input`.
fn numbers(input: &str, offset: usize, body: &str, expected: usize) -> Result<Vec<u64>, CliError> {
    let mut out = Vec::new();
    let mut at = offset;
    for part in body.split(',') {
        let value = part
            .trim()
            .parse::<u64>()
            .map_err(|_| parse_error(input, at, format!("expected an integer, found {part:?}")))?;
        out.push(value);
        at += part.len() + 1;
    }
    if out.len() != expected {
        return Err(parse_error(input, offset, format!("expected {expected} parameters, found {}", out.len())));
    }
    Ok(out)
}

impl MatroidDescriptor {
    pub fn parse(input: &str) -> Result<Self, CliError> {
        let Some((tag, body)) = input.split_once(':') else {
            return Err(parse_error(input, 0, "expected TAG:PARAMS"));
        };
        let offset = tag.len() + 1;
        match tag {
            "uniform" => {
                let p = numbers(input, offset, body, 2)?;
                Ok(MatroidDescriptor::Uniform { rank: p[0] as usize, size: p[1] as usize })
            }
            "boolean" => {
                let p = numbers(input, offset, body, 1)?;
                Ok(MatroidDescriptor::Boolean { size: p[0] as usize })
            }
            "pg" => {
                let p = numbers(input, offset, body, 2)?;
                Ok(MatroidDescriptor::Pg { dimension: p[0] as usize, q: p[1] })
            }
            "sparse" => {
                let (head, blocks) = body.split_once(';').unwrap_or((body, ""));
                let p = numbers(input, offset, head, 2)?;
                let mut at = offset + head.len() + 1;
                let mut chs = Vec::new();
                for block in blocks.split('|').filter(|b| !b.is_empty()) {
                    let parsed = if block.contains(',') {
                        block.split(',').map(|x| x.trim().parse::<usize>().ok()).collect::<Option<Vec<_>>>()
                    } else {
                        block.chars().map(|ch| ch.to_digit(10).map(|d| d as usize)).collect()
                    };
                    chs.push(parsed.ok_or_else(|| parse_error(input, at, format!("bad block {block:?}")))?);
                    at += block.len() + 1;
                }
                Ok(MatroidDescriptor::Sparse { rank: p[0] as usize, size: p[1] as usize, circuit_hyperplanes: chs })
            }
            "file" if !body.is_empty() => Ok(MatroidDescriptor::File(PathBuf::from(body))),
            "file" => Err(parse_error(input, offset, "missing path")),
            _ => Err(parse_error(input, 0, format!("unknown tag {tag:?}"))),
        }
    }

    pub fn build(&self) -> Result<Matroid, CliError> {
        Ok(match self {
            MatroidDescriptor::Uniform { rank, size } => Matroid::uniform(*rank, *size)?,
            MatroidDescriptor::Boolean { size } => Matroid::boolean(*size)?,
            MatroidDescriptor::Pg { dimension, q } => projective_geometry(*dimension, *q)?,
            MatroidDescriptor::Sparse { rank, size, circuit_hyperplanes } => {
                for ch in circuit_hyperplanes {
                    if let Some(&e) = ch.iter().find(|&&e| e >= *size) {
                        return Err(mixed_eulerian::Error::ElementOutOfRange { element: e, size: *size }.into());
                    }
                }
                let sets: Vec<ElementSet> =
                    circuit_hyperplanes.iter().map(|ch| ch.iter().copied().collect()).collect();
                Matroid::sparse_paving(*rank, *size, &sets)?
            }
            MatroidDescriptor::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                parse_matroid_json(&text)?
            }
        })
    }
}

impl fmt::Display for MatroidDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatroidDescriptor::Uniform { rank, size } => write!(f, "uniform:{rank},{size}"),
            MatroidDescriptor::Boolean { size } => write!(f, "boolean:{size}"),
            MatroidDescriptor::Pg { dimension, q } => write!(f, "pg:{dimension},{q}"),
            MatroidDescriptor::Sparse { rank, size, circuit_hyperplanes } => {
                let blocks: Vec<String> = circuit_hyperplanes
                    .iter()
                    .map(|ch| ch.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","))
                    .collect();
                write!(f, "sparse:{rank},{size};{}", blocks.join("|"))
            }
            MatroidDescriptor::File(path) => write!(f, "file:{}", path.display()),
        }
    }
}
