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

use crate::args::{ComputeArgs, MethodArg, OutputFormat, QuantityArg};
use crate::output::{Table, Value};
use crate::{resolve_atom, CliError};
use cpk_core::asymptotics::{
    auto_joining_points, crossover_select, large_factor, log_grid, short_factor, CrossoverPolicy,
    JoiningPoints,
};
use cpk_core::lifshitz::{lifshitz_correction, TruncationReport};
use cpk_core::materials::registry;
use cpk_core::par::map_indexed;
use cpk_core::units::reduce;
use cpk_core::{AtomModel, ComputeConfig, CorrectionResult, MetalModel, Method, Quantity};
use std::io::Write;

pub(crate) const COLUMNS: [&str; 10] = [
    "a_m", "T_K", "method", "eta", "kappa", "energy_J", "force_N", "l_used", "est_tail", "validity",
];

#[derive(Debug, Clone, Copy, PartialEq)]
enum Path {
    Lifshitz,
    Short,
    Large,
    /// Joining points, or `None` at T = 0 where only the short branch applies.
    Auto(Option<JoiningPoints>),
}

fn resolve_metal(args: &ComputeArgs) -> Result<MetalModel, CliError> {
    if args.ideal_metal {
        return Ok(MetalModel::Ideal);
    }
    let base = registry().metal(&args.metal).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown metal '{}' (expected au or ideal)",
            args.metal
        ))
    })?;
    if args.omega_p.is_none() && args.gamma.is_none() {
        return Ok(base);
    }
    let omega_p = args.omega_p.or(base.plasma_frequency()).ok_or_else(|| {
        CliError::Usage("--gamma needs a plasma frequency; the ideal metal has none".into())
    })?;
    let metal = match args.gamma {
        Some(gamma) => MetalModel::drude(omega_p, gamma),
        None => MetalModel::plasma(omega_p),
    };
    metal.map_err(|e| CliError::Usage(e.to_string()))
}

fn resolve_separations(args: &ComputeArgs) -> Result<Vec<f64>, CliError> {
    let a = match args.grid {
        Some(g) => log_grid(g.start, g.stop, g.count),
        None => args.separations.clone(),
    };
    if a.is_empty() {
        return Err(CliError::Usage(
            "give separations with --a or --grid".into(),
        ));
    }
    if a.windows(2).any(|w| w[1] <= w[0]) {
        return Err(CliError::Usage(
            "separations must be strictly increasing".into(),
        ));
    }
    Ok(a)
}

fn asymptotics_apply(metal: &MetalModel, atom: &AtomModel) -> bool {
    atom.oscillators().is_some() && !matches!(metal, MetalModel::Drude { .. })
}

fn paths(
    method: MethodArg,
    metal: &MetalModel,
    atom: &AtomModel,
    temperature: f64,
) -> Result<Vec<Path>, CliError> {
    let auto = || -> Result<Path, CliError> {
        if temperature > 0.0 && asymptotics_apply(metal, atom) {
            Ok(Path::Auto(Some(auto_joining_points(
                metal,
                atom,
                temperature,
            )?)))
        } else {
            Ok(Path::Auto(None))
        }
    };
    Ok(match method {
        MethodArg::Lifshitz => vec![Path::Lifshitz],
        MethodArg::AsymptShort => vec![Path::Short],
        MethodArg::AsymptLarge => vec![Path::Large],
        MethodArg::Auto => vec![auto()?],
        MethodArg::All => {
            let mut p = vec![Path::Lifshitz];
            if asymptotics_apply(metal, atom) {
                p.push(Path::Short);
                if temperature > 0.0 {
                    p.push(Path::Large);
                }
                p.push(auto()?);
            }
            p
        }
    })
}

fn label(path: Path, r: Option<&CorrectionResult>) -> String {
    match (path, r) {
        (Path::Lifshitz, _) => Method::Lifshitz.tag().into(),
        (Path::Short, _) => Method::AsymptShort.tag().into(),
        (Path::Large, _) => Method::AsymptLarge.tag().into(),
        (Path::Auto(_), Some(r)) => format!("auto:{}/{}", r.method.tag(), r.kappa_method.tag()),
        (Path::Auto(_), None) => "auto".into(),
    }
}

fn evaluate(
    path: Path,
    a: f64,
    temperature: f64,
    metal: &MetalModel,
    atom: &AtomModel,
    cfg: &ComputeConfig,
) -> cpk_core::Result<CorrectionResult> {
    let state = reduce(a, temperature, metal, atom)?;
    let r = match path {
        Path::Lifshitz => return lifshitz_correction(&state, metal, atom, cfg),
        Path::Short => {
            let (eta, v) = short_factor(&state, metal, atom, Quantity::Energy)?;
            let (kappa, _) = short_factor(&state, metal, atom, Quantity::Force)?;
            let mut r = CorrectionResult::new(eta.value, kappa.value, Method::AsymptShort);
            r.validity = v;
            r.truncation = TruncationReport {
                l_used: eta.truncation.l_used.max(kappa.truncation.l_used),
                est_tail: eta.truncation.est_tail.max(kappa.truncation.est_tail),
            };
            r
        }
        Path::Large => {
            let (eta, v) = large_factor(&state, metal, atom, Quantity::Energy)?;
            let (kappa, _) = large_factor(&state, metal, atom, Quantity::Force)?;
            let mut r = CorrectionResult::new(eta, kappa, Method::AsymptLarge);
            r.validity = v;
            r
        }
        Path::Auto(Some(j)) => crossover_select(&state, metal, atom, CrossoverPolicy::Fixed(j))?,
        Path::Auto(None) => crossover_select(&state, metal, atom, CrossoverPolicy::Auto)?,
    };
    r.with_absolute(a, atom.alpha0)
}

pub(crate) fn run(
    args: &ComputeArgs,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    if !(args.temperature >= 0.0) || !args.temperature.is_finite() {
        return Err(CliError::Usage(format!(
            "temperature must be nonnegative, got {}",
            args.temperature
        )));
    }
    let metal = resolve_metal(args)?;
    let mut atom = resolve_atom(&args.atom)?;
    if args.static_atom {
        atom = AtomModel::static_atom();
    }
    if let Some(alpha0) = args.alpha0 {
        atom = atom
            .with_alpha0(alpha0)
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let separations = resolve_separations(args)?;
    let cfg = ComputeConfig::default().with_reflection(args.reflection.into());
    let paths = paths(args.method, &metal, &atom, args.temperature)?;
    let jobs: Vec<(f64, Path)> = separations
        .iter()
        .flat_map(|&a| paths.iter().map(move |&p| (a, p)))
        .collect();
    let results = map_indexed(&jobs, |_, &(a, p)| {
        evaluate(p, a, args.temperature, &metal, &atom, &cfg)
    });

    let (want_eta, want_kappa) = match args.quantity {
        QuantityArg::Eta => (true, false),
        QuantityArg::Kappa => (false, true),
        QuantityArg::Both => (true, true),
    };
    let keep = |on: bool, v: Option<f64>| if on { v.into() } else { Value::Empty };
    let mut table = Table::new(out, format, COLUMNS.iter().map(|c| c.to_string()).collect());
    let mut failed = 0;
    for (&(a, path), result) in jobs.iter().zip(&results) {
        let row: Vec<Value> = match result {
            Ok(r) => vec![
                a.into(),
                args.temperature.into(),
                label(path, Some(r)).into(),
                keep(want_eta, Some(r.eta)),
                keep(want_kappa, Some(r.kappa)),
                keep(want_eta, r.energy),
                keep(want_kappa, r.force),
                r.truncation.l_used.into(),
                r.truncation.est_tail.into(),
                r.validity.as_str().into(),
            ],
            Err(e) => {
                failed += 1;
                let mut row = vec![a.into(), args.temperature.into(), label(path, None).into()];
                row.extend(std::iter::repeat_n(Value::Empty, 6));
                row.push(format!("error: {e}").into());
                row
            }
        };
        table.row(&row)?;
    }
    table.finish()?;
    if failed > 0 {
        return Err(CliError::PointFailures {
            failed,
            total: jobs.len(),
        });
    }
    Ok(())
}
