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

use crate::args::OutputFormat;
use crate::output::{canonical_json_line, Table, Value};
use crate::CliError;
use cpk_core::asymptotics::{large_coefficients, short_blocks};
use cpk_core::lifshitz::{ideal_baselines, lifshitz_correction};
use cpk_core::materials::registry;
use cpk_core::report::{figure_rows, table_rows, TableOptions};
use cpk_core::special::inc_gamma_upper;
use cpk_core::units::reduce;
use cpk_core::{AtomModel, ComputeConfig, MetalModel, Quantity, ReflectionModel};
use std::io::Write;

struct Checks<'w> {
    out: &'w mut dyn Write,
    failed: usize,
}

impl Checks<'_> {
    fn record(&mut self, name: &str, ok: bool, detail: String) -> Result<(), CliError> {
        self.failed += usize::from(!ok);
        writeln!(
            self.out,
            "{} {name}: {detail}",
            if ok { "PASS" } else { "FAIL" }
        )?;
        Ok(())
    }
}

pub(crate) fn run(out: &mut dyn Write) -> Result<(), CliError> {
    let mut c = Checks { out, failed: 0 };
    let reg = registry();
    let he = &reg.atom("he-star").expect("registry atom").model;

    for which in [1u8, 2] {
        let rows = table_rows(which, &TableOptions::default())?;
        let worst = rows.iter().map(|r| r.max_diff()).fold(0.0, f64::max);
        c.record(
            &format!("table {which} golden cells"),
            worst <= 1e-3,
            format!("max |diff| {worst:.5}"),
        )?;
    }

    let s = reduce(150e-9, 300.0, &reg.gold, he)?;
    let cfg = ComputeConfig::default().with_reflection(ReflectionModel::Impedance);
    let r = lifshitz_correction(&s, &reg.gold, he, &cfg)?;
    c.record(
        "He* corrections at 150 nm",
        (1.0 - r.eta - 0.497).abs() <= 0.01 && (1.0 - r.kappa - 0.57).abs() <= 0.01,
        format!("1 - eta {:.4}, 1 - kappa {:.4}", 1.0 - r.eta, 1.0 - r.kappa),
    )?;

    let fixed = AtomModel::static_atom();
    let s = reduce(8e-6, 300.0, &MetalModel::Ideal, &fixed)?;
    let r = lifshitz_correction(&s, &MetalModel::Ideal, &fixed, &ComputeConfig::default())?;
    let closed = large_coefficients(s.tau, Quantity::Energy)?.base;
    c.record(
        "ideal static eta at 8 um matches closed form",
        (r.eta / closed - 1.0).abs() <= 1e-9,
        format!("{:.10} vs {closed:.10}", r.eta),
    )?;

    let b = short_blocks(0.3, Quantity::Energy)?;
    c.record(
        "short-separation block at beta 0.3",
        (b.b0 / 4.471_253_410_145_901 - 1.0).abs() <= 1e-12,
        format!("{:.15}", b.b0),
    )?;

    let g = inc_gamma_upper(0, 1.0)?;
    c.record(
        "Gamma(0, 1)",
        (g / 0.219_383_934_395_520_27 - 1.0).abs() <= 1e-13,
        format!("{g:.16}"),
    )?;

    let (e0, f0) = ideal_baselines(1e-6, Some(1e-30))?;
    c.record(
        "F0/E0 = 4/a",
        (f0 / e0 * 1e-6 / 4.0 - 1.0).abs() <= 1e-14,
        format!("{:.15e}", f0 / e0),
    )?;

    let curves = figure_rows(1, he, &reg.gold, 300.0, &[0.2e-6])?[0].curves;
    let [c1, c2, c3, c4] = curves;
    c.record(
        "figure 1 curve ordering at 0.2 um",
        c1 <= c2 && c2 <= c4 && c1 <= c3 && c3 <= c4,
        format!("{c1:.4} {c2:.4} {c3:.4} {c4:.4}"),
    )?;

    let mut buf = Vec::new();
    let mut t = Table::new(
        &mut buf,
        OutputFormat::Json,
        vec!["eta".into(), "l_used".into(), "validity".into()],
    );
    t.row(&[Value::from(r.eta), r.truncation.l_used.into(), "ok".into()])?;
    let line = String::from_utf8_lossy(&buf).trim_end().to_string();
    let again = canonical_json_line(&line)?;
    c.record("JSON round trip", again == line, line)?;

    if c.failed > 0 {
        return Err(CliError::Selftest(c.failed));
    }
    Ok(())
}
