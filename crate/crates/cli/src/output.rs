// Copyright 2026 The cpk authors
//
// Licensed under the Apache license, version 2.0 (the "license");
// you may not use this file except in compliance with the license.
// You may obtain a copy of the license at
//
//     http://www.apache.org/licenses/license-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the license is distributed on an "as is" basis,
// without warranties or conditions of any kind, either express or implied.
// See the license for the specific language governing permissions and
// limitations under the license.

//! Row output as CSV or JSON lines.
//!
//! JSON floats are written with 17 significant digits and keys in a fixed
//! order, so parsing a line and writing it again gives the same bytes.

use crate::CliError;
use std::io::Write;

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Float(f64),
    Int(u64),
    Text(String),
    Empty,
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Self::Float(v)
    }
}

impl From<Option<f64>> for Value {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Self::Empty, Self::Float)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Self::Int(v as u64)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Self::Text(v.to_string())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Self::Text(v)
    }
}

/// Shortest round-trip form, switching to exponent notation outside
/// [1e-4, 1e6).
fn csv_float(v: f64) -> String {
    let m = v.abs();
    if v == 0.0 || (1e-4..1e6).contains(&m) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

fn json_float(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        "null".to_string()
    }
}

fn csv_field(v: &Value) -> String {
    match v {
        Value::Float(f) => csv_float(*f),
        Value::Int(i) => i.to_string(),
        Value::Text(s) if s.contains([',', '"', '\n']) => format!("\"{}\"", s.replace('"', "\"\"")),
        Value::Text(s) => s.clone(),
        Value::Empty => String::new(),
    }
}

fn json_value(v: &Value) -> String {
    match v {
        Value::Float(f) => json_float(*f),
        Value::Int(i) => i.to_string(),
        Value::Text(s) => serde_json::to_string(s).expect("strings serialize"),
        Value::Empty => "null".to_string(),
    }
}

/// Writes rows sharing one column layout.
pub struct Table<'w> {
    out: &'w mut dyn Write,
    format: crate::args::OutputFormat,
    columns: Vec<String>,
    header_done: bool,
}

impl<'w> Table<'w> {
    pub fn new(
        out: &'w mut dyn Write,
        format: crate::args::OutputFormat,
        columns: Vec<String>,
    ) -> Self {
        Self {
            out,
            format,
            columns,
            header_done: false,
        }
    }

    pub fn row(&mut self, values: &[Value]) -> Result<(), CliError> {
        debug_assert_eq!(values.len(), self.columns.len());
        match self.format {
            crate::args::OutputFormat::Csv => {
                if !self.header_done {
                    writeln!(self.out, "{}", self.columns.join(","))?;
                    self.header_done = true;
                }
                let fields: Vec<String> = values.iter().map(csv_field).collect();
                writeln!(self.out, "{}", fields.join(","))?;
            }
            crate::args::OutputFormat::Json => {
                let pairs: Vec<(&str, &Value)> = self
                    .columns
                    .iter()
                    .map(String::as_str)
                    .zip(values)
                    .collect();
                writeln!(self.out, "{}", json_object(&pairs))?;
            }
        }
        Ok(())
    }

    /// Emits the CSV header even when no row follows.
    pub fn finish(mut self) -> Result<(), CliError> {
        if self.format == crate::args::OutputFormat::Csv && !self.header_done {
            writeln!(self.out, "{}", self.columns.join(","))?;
            self.header_done = true;
        }
        Ok(())
    }
}

fn json_object(pairs: &[(&str, &Value)]) -> String {
    let body: Vec<String> = pairs
        .iter()
        .map(|(k, v)| {
            format!(
                "{}:{}",
                serde_json::to_string(k).expect("keys serialize"),
                json_value(v)
            )
        })
        .collect();
    format!("{{{}}}", body.join(","))
}

/// Parses one JSON output line and writes it back in canonical form.
pub fn canonical_json_line(line: &str) -> Result<String, CliError> {
    let parsed: serde_json::Map<String, serde_json::Value> = serde_json::from_str(line)
        .map_err(|e| CliError::Usage(format!("not a JSON object: {e}")))?;
    let values: Vec<(String, Value)> = parsed
        .into_iter()
        .map(|(k, v)| {
            let value = match v {
                serde_json::Value::Null => Value::Empty,
                serde_json::Value::String(s) => Value::Text(s),
                serde_json::Value::Number(n) => match n.as_u64() {
                    Some(i) if !n.is_f64() => Value::Int(i),
                    _ => Value::Float(n.as_f64().unwrap_or(f64::NAN)),
                },
                other => return Err(CliError::Usage(format!("unexpected JSON value {other}"))),
            };
            Ok((k, value))
        })
        .collect::<Result<_, _>>()?;
    let pairs: Vec<(&str, &Value)> = values.iter().map(|(k, v)| (k.as_str(), v)).collect();
    Ok(json_object(&pairs))
}
