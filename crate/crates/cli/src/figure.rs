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

use crate::args::{FigureArgs, OutputFormat};
use crate::output::{Table, Value};
use crate::{resolve_atom, CliError};
use cpk_core::asymptotics::log_grid;
use cpk_core::materials::{registry, PolarizabilityTable};
use cpk_core::report::figure_rows;
use std::io::Write;

/// Separation range of the factor figures, m.
const FIGURE_RANGE: (f64, f64) = (0.15e-6, 8e-6);

pub(crate) fn run(
    args: &FigureArgs,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    if args.which == 3 {
        return polarizability_curves(args, format, out);
    }
    let atom = resolve_atom(&args.atom)?;
    let grid = log_grid(FIGURE_RANGE.0, FIGURE_RANGE.1, args.points as usize);
    let rows = figure_rows(args.which, &atom, &registry().gold, args.temperature, &grid)?;
    let columns = ["a_um", "curve1", "curve2", "curve3", "curve4"];
    let mut table = Table::new(out, format, columns.iter().map(|c| c.to_string()).collect());
    for r in rows {
        let mut values: Vec<Value> = vec![r.a_um.into()];
        values.extend(r.curves.iter().map(|&c| Value::from(c)));
        table.row(&values)?;
    }
    table.finish()
}

fn polarizability_curves(
    args: &FigureArgs,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    if args.polarizability_file.is_empty() {
        return Err(CliError::Usage(
            "figure 3 needs at least one --polarizability-file".into(),
        ));
    }
    let columns = ["dataset", "xi_au", "ratio"];
    let mut table = Table::new(out, format, columns.iter().map(|c| c.to_string()).collect());
    for path in &args.polarizability_file {
        let file = std::fs::File::open(path)
            .map_err(|e| CliError::Usage(format!("cannot open {}: {e}", path.display())))?;
        let data = PolarizabilityTable::parse(std::io::BufReader::new(file))?;
        let name = path.file_name().map_or_else(
            || path.display().to_string(),
            |n| n.to_string_lossy().into_owned(),
        );
        for &(xi, ratio) in data.source_rows() {
            table.row(&[name.as_str().into(), xi.into(), ratio.into()])?;
        }
    }
    table.finish()
}
