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

//! Row builders for the reference tables and figure curves.

use crate::asymptotics::{
    crossover_select, large_factor, short_factor, CrossoverPolicy, JoiningPoints,
};
use crate::error::{domain, Result};
use crate::golden;
use crate::lifshitz::{matsubara_factor, ComputeConfig, Quantity, ReflectionModel};
use crate::materials::{registry, AtomModel, MetalModel};
use crate::par::map_indexed;
use crate::units::reduce;

/// Temperature of the reference tables and figures, K.
pub const REFERENCE_TEMPERATURE: f64 = 300.0;

/// Branch switch used for the figure curves: 1.2 µm (energy), 1.3 µm (force).
pub const FIGURE_JOINING: JoiningPoints = JoiningPoints {
    energy: 1.2e-6,
    force: 1.3e-6,
};

/// Which quantity a table or figure shows.
pub fn quantity_of(which: u8) -> Result<Quantity> {
    match which {
        1 => Ok(Quantity::Energy),
        2 => Ok(Quantity::Force),
        _ => Err(domain(format!(
            "tables and factor figures are numbered 1 and 2, got {which}"
        ))),
    }
}

/// Options for [`table_rows`].
#[derive(Debug, Clone)]
pub struct TableOptions {
    /// Reflection coefficients for column (b).
    pub reflection: ReflectionModel,
    /// He* model for column (a), usually a tabulated polarizability.
    pub exact_he: Option<AtomModel>,
    /// Compute columns (c) and (d) for every row, not just the printed cells.
    pub all_cells: bool,
}

impl Default for TableOptions {
    fn default() -> Self {
        Self {
            reflection: ReflectionModel::Impedance,
            exact_he: None,
            all_cells: false,
        }
    }
}

/// One (separation, atom) cell group of a reproduced table.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub a_um: f64,
    /// Registry name of the atom.
    pub atom: &'static str,
    /// Column (a); He* only and only with an exact polarizability.
    pub exact: Option<f64>,
    /// Column (b): Lifshitz formula, single-oscillator atom.
    pub lifshitz: f64,
    /// Column (c): large-separation expansion.
    pub large: Option<f64>,
    /// Column (d): short-separation expansion.
    pub short: Option<f64>,
    /// Printed (a) value for He*.
    pub golden_exact: Option<f64>,
    /// Printed (b), (c), (d).
    pub golden: [Option<f64>; 3],
}

impl TableRow {
    /// |computed − printed| for (b), (c), (d); `None` where either is absent.
    pub fn diffs(&self) -> [Option<f64>; 3] {
        let computed = [Some(self.lifshitz), self.large, self.short];
        let mut out = [None; 3];
        for i in 0..3 {
            if let (Some(c), Some(g)) = (computed[i], self.golden[i]) {
                out[i] = Some((c - g).abs());
            }
        }
        out
    }

    /// Largest deviation over the printed (b), (c), (d) cells.
    pub fn max_diff(&self) -> f64 {
        self.diffs()
            .iter()
            .flatten()
            .fold(0.0, |m: f64, d| m.max(*d))
    }
}

/// Reproduces Table 1 (η) or Table 2 (κ) at T = 300 K for He*, Na and Cs
/// near gold. Rows are ordered by separation, then atom.
pub fn table_rows(which: u8, opts: &TableOptions) -> Result<Vec<TableRow>> {
    let q = quantity_of(which)?;
    let rows = golden::table(which).unwrap_or_default();
    let reg = registry();
    let cfg = ComputeConfig::default().with_reflection(opts.reflection);
    let jobs: Vec<(usize, &'static str)> = (0..rows.len())
        .flat_map(|i| golden::ATOMS.iter().map(move |&name| (i, name)))
        .collect();
    map_indexed(&jobs, |_, &(i, name)| {
        let row = &rows[i];
        let preset = reg.atom(name).expect("registry atom");
        let golden = row.columns(name).expect("golden atom");
        let a = row.a_um * 1e-6;
        let state = reduce(a, REFERENCE_TEMPERATURE, &reg.gold, &preset.model)?;
        let lifshitz = matsubara_factor(&state, &reg.gold, &preset.model, &cfg, q)?.value;
        let large = if opts.all_cells || golden[1].is_some() {
            Some(large_factor(&state, &reg.gold, &preset.model, q)?.0)
        } else {
            None
        };
        let short = if opts.all_cells || golden[2].is_some() {
            Some(short_factor(&state, &reg.gold, &preset.model, q)?.0.value)
        } else {
            None
        };
        let exact = match (&opts.exact_he, name) {
            (Some(model), "he-star") => {
                let s = reduce(a, REFERENCE_TEMPERATURE, &reg.gold, model)?;
                Some(matsubara_factor(&s, &reg.gold, model, &cfg, q)?.value)
            }
            _ => None,
        };
        let golden_exact = if name == "he-star" { row.he[0] } else { None };
        Ok(TableRow {
            a_um: row.a_um,
            atom: name,
            exact,
            lifshitz,
            large,
            short,
            golden_exact,
            golden,
        })
    })
    .into_iter()
    .collect()
}

/// One point of a factor figure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FigureRow {
    pub a_um: f64,
    /// Curve 1: real metal, dynamic atom. Curve 2: ideal metal, dynamic
    /// atom. Curve 3: real metal, static atom. Curve 4: ideal metal, static
    /// atom.
    pub curves: [f64; 4],
}

/// Figure 1 (η) or 2 (κ): the four curves from the joined asymptotic
/// branches on the given separations (m).
pub fn figure_rows(
    which: u8,
    atom: &AtomModel,
    metal: &MetalModel,
    temperature: f64,
    separations: &[f64],
) -> Result<Vec<FigureRow>> {
    let q = quantity_of(which)?;
    let policy = CrossoverPolicy::Fixed(FIGURE_JOINING);
    let static_atom = AtomModel::static_atom();
    let variants: [(&MetalModel, &AtomModel); 4] = [
        (metal, atom),
        (&MetalModel::Ideal, atom),
        (metal, &static_atom),
        (&MetalModel::Ideal, &static_atom),
    ];
    map_indexed(separations, |_, &a| {
        let mut curves = [0.0; 4];
        for (slot, (m, at)) in curves.iter_mut().zip(variants) {
            let state = reduce(a, temperature, m, at)?;
            let r = crossover_select(&state, m, at, policy)?;
            *slot = match q {
                Quantity::Energy => r.eta,
                Quantity::Force => r.kappa,
            };
        }
        Ok(FigureRow {
            a_um: a * 1e6,
            curves,
        })
    })
    .into_iter()
    .collect()
}
