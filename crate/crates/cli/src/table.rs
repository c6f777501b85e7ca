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

use crate::args::{OutputFormat, TableArgs};
use crate::output::{Table, Value};
use crate::{read_table_file, CliError};
use cpk_core::report::{table_rows, TableOptions};
use std::io::Write;

pub(crate) fn run(
    args: &TableArgs,
    format: OutputFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let exact_he = args
        .polarizability_file
        .as_deref()
        .map(read_table_file)
        .transpose()?;
    let with_exact = exact_he.is_some();
    let opts = TableOptions {
        reflection: args.reflection.into(),
        exact_he,
        all_cells: args.all_cells,
    };
    let rows = table_rows(args.which, &opts)?;

    let mut columns = vec!["a_um", "atom"];
    if with_exact {
        columns.push("a_exact");
    }
    columns.extend(["b_lifshitz", "c_large", "d_short"]);
    if args.diff {
        if with_exact {
            columns.push("diff_a");
        }
        columns.extend(["diff_b", "diff_c", "diff_d"]);
    }
    let mut table = Table::new(out, format, columns.iter().map(|c| c.to_string()).collect());
    let mut worst: f64 = 0.0;
    let mut cells = 0;
    for r in &rows {
        let mut values: Vec<Value> = vec![r.a_um.into(), r.atom.into()];
        if with_exact {
            values.push(r.exact.into());
        }
        values.extend([Some(r.lifshitz).into(), r.large.into(), r.short.into()]);
        if args.diff {
            if with_exact {
                values.push(
                    r.exact
                        .zip(r.golden_exact)
                        .map(|(c, g)| (c - g).abs())
                        .into(),
                );
            }
            for d in r.diffs() {
                if let Some(d) = d {
                    worst = worst.max(d);
                    cells += 1;
                }
                values.push(d.into());
            }
        }
        table.row(&values)?;
    }
    table.finish()?;
    if args.diff {
        writeln!(
            err,
            "max |diff| over {cells} printed cells in columns (b)-(d): {worst:.5}"
        )?;
    }
    Ok(())
}
