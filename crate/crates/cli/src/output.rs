use std::collections::BTreeMap;
use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

use crate::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

/// One computed value. Big integers are kept as decimal strings.
#[derive(Clone, Debug, Default, Serialize)]
pub struct OutputRecord {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matroid: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pipeline: Option<String>,
    pub value: String,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, Value>,
    pub millis: u128,
}

impl OutputRecord {
    pub fn new(command: &str, value: impl ToString) -> Self {
        OutputRecord { command: command.to_string(), value: value.to_string(), ..Default::default() }
    }

    pub fn detail(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.details.insert(key.to_string(), value.into());
        self
    }
}

pub fn emit(out: &mut impl Write, format: Format, records: &[OutputRecord]) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Io(e.to_string());
    match format {
        Format::Json => {
            let text = if records.len() == 1 {
                serde_json::to_string_pretty(&records[0])
            } else {
                serde_json::to_string_pretty(records)
            }
            .map_err(|e| CliError::Io(e.to_string()))?;
            writeln!(out, "{text}").map_err(io)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["matroid", "c", "pipeline", "value", "millis"])
                .map_err(|e| CliError::Io(e.to_string()))?;
            for r in records {
                w.write_record([
                    r.matroid.as_deref().unwrap_or(""),
                    r.c.as_deref().unwrap_or(""),
                    r.pipeline.as_deref().unwrap_or(""),
                    &r.value,
                    &r.millis.to_string(),
                ])
                .map_err(|e| CliError::Io(e.to_string()))?;
            }
            w.flush().map_err(io)?;
        }
        Format::Text => {
            for r in records {
                match &r.c {
                    Some(c) if records.len() > 1 => writeln!(out, "{c}\t{}", r.value),
                    _ => writeln!(out, "{}", r.value),
                }
                .map_err(io)?;
                for (k, v) in &r.details {
                    let shown = match v {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    writeln!(out, "  {k}: {shown}").map_err(io)?;
                }
            }
        }
    }
    Ok(())
}
