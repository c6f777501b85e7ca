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

//! Command-line front end for `cpk-core`: single-point computations, the
//! reference tables, figure curves and a self-test.

// `!(x > 0.0)` also rejects NaN, which `x <= 0.0` would not.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
mod compute;
mod figure;
pub mod output;
mod selftest;
mod table;

pub use args::{Cli, Command, OutputFormat};
pub use output::canonical_json_line;

use cpk_core::materials::{load_polarizability_table, registry};
use cpk_core::{AtomModel, CpkError};
use std::io::Write;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] CpkError),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("{failed} of {total} points failed")]
    PointFailures { failed: usize, total: usize },

    #[error("{0} self-test check(s) failed")]
    Selftest(usize),
}

impl CliError {
    /// 2 for usage errors, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) => 2,
            _ => 1,
        }
    }
}

/// Runs one parsed command, writing data to `out` and summaries to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    cpk_core::par::configure_threads().map_err(|e| CliError::Usage(e.to_string()))?;
    match &cli.command {
        Command::Compute(a) => compute::run(a, cli.output, out),
        Command::Table(a) => table::run(a, cli.output, out, err),
        Command::Figure(a) => figure::run(a, cli.output, out),
        Command::Selftest => selftest::run(out),
    }
}

/// A registry atom by name, or a polarizability table read from a file.
pub(crate) fn resolve_atom(name: &str) -> Result<AtomModel, CliError> {
    if let Some(preset) = registry().atom(name) {
        return Ok(preset.model.clone());
    }
    let path = Path::new(name);
    if path.is_file() {
        return read_table_file(path);
    }
    Err(CliError::Usage(format!(
        "unknown atom '{name}' (expected he-star, na, cs or a table file)"
    )))
}

pub(crate) fn read_table_file(path: &Path) -> Result<AtomModel, CliError> {
    let file = std::fs::File::open(path)
        .map_err(|e| CliError::Usage(format!("cannot open {}: {e}", path.display())))?;
    Ok(load_polarizability_table(std::io::BufReader::new(file))?)
}
