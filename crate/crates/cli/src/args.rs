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

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Casimir-Polder correction factors for an atom near a metal wall.
#[derive(Debug, Parser)]
#[command(name = "cpk", version, about)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv, global = true)]
    pub output: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Correction factors at chosen separations.
    Compute(ComputeArgs),
    /// Reference table 1 (η) or 2 (κ) with printed values alongside.
    Table(TableArgs),
    /// Curve data: 1 (η curves), 2 (κ curves) or 3 (polarizability tables).
    Figure(FigureArgs),
    /// Run the built-in golden comparisons and spot checks.
    Selftest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Lifshitz,
    AsymptShort,
    AsymptLarge,
    Auto,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum QuantityArg {
    Eta,
    Kappa,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReflectionArg {
    Fresnel,
    Impedance,
}

impl From<ReflectionArg> for cpk_core::ReflectionModel {
    fn from(r: ReflectionArg) -> Self {
        match r {
            ReflectionArg::Fresnel => Self::Fresnel,
            ReflectionArg::Impedance => Self::Impedance,
        }
    }
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Registry atom (he-star, na, cs) or a polarizability table file.
    #[arg(long, default_value = "he-star")]
    pub atom: String,

    /// Registry metal (au, ideal).
    #[arg(long, default_value = "au")]
    pub metal: String,

    /// Plasma frequency override, rad/s.
    #[arg(long)]
    pub omega_p: Option<f64>,

    /// Drude relaxation frequency, rad/s; selects the Drude model.
    #[arg(long)]
    pub gamma: Option<f64>,

    /// Separations, e.g. `150nm`, `1.2um`, `3e-6m`; comma-separated or repeated.
    #[arg(long = "a", value_delimiter = ',', value_parser = parse_length, conflicts_with = "grid")]
    pub separations: Vec<f64>,

    /// Logarithmic grid `start,stop,count`, e.g. `150nm,8um,20`.
    #[arg(long, value_parser = parse_grid)]
    pub grid: Option<Grid>,

    /// Temperature, K.
    #[arg(long = "T", default_value_t = 300.0)]
    pub temperature: f64,

    #[arg(long, value_enum, default_value_t = MethodArg::Lifshitz)]
    pub method: MethodArg,

    #[arg(long, value_enum, default_value_t = QuantityArg::Both)]
    pub quantity: QuantityArg,

    /// Treat the wall as an ideal metal (β_p = 0).
    #[arg(long, conflicts_with_all = ["omega_p", "gamma"])]
    pub ideal_metal: bool,

    /// Use the static polarizability (β_A = 0).
    #[arg(long)]
    pub static_atom: bool,

    /// Static polarizability α(0), m³; enables absolute energy and force.
    #[arg(long)]
    pub alpha0: Option<f64>,

    /// Reflection coefficients of the wall in the Lifshitz evaluation.
    #[arg(long, value_enum, default_value_t = ReflectionArg::Fresnel)]
    pub reflection: ReflectionArg,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// 1 for η, 2 for κ.
    #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
    pub which: u8,

    /// Append the absolute deviation from the printed values.
    #[arg(long)]
    pub diff: bool,

    /// He* polarizability table for column (a).
    #[arg(long)]
    pub polarizability_file: Option<std::path::PathBuf>,

    /// Compute the asymptotic columns in every row, not only where printed.
    #[arg(long)]
    pub all_cells: bool,

    #[arg(long, value_enum, default_value_t = ReflectionArg::Impedance)]
    pub reflection: ReflectionArg,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    /// 1 (η curves), 2 (κ curves) or 3 (polarizability tables).
    #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
    pub which: u8,

    #[arg(long, default_value = "he-star")]
    pub atom: String,

    /// Number of separations on the [0.15, 8] µm log grid.
    #[arg(long, default_value_t = 60, value_parser = clap::value_parser!(u32).range(2..))]
    pub points: u32,

    #[arg(long = "T", default_value_t = 300.0)]
    pub temperature: f64,

    /// Polarizability table(s) for figure 3.
    #[arg(long)]
    pub polarizability_file: Vec<std::path::PathBuf>,
}

/// A logarithmic separation grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

/// Parses a length with an optional `nm`, `um`/`µm` or `m` suffix; a bare
/// number is in metres.
pub fn parse_length(raw: &str) -> Result<f64, String> {
    let s = raw.trim();
    // Dividing by an exact power of ten rounds once, so "150nm" is 1.5e-7.
    let (number, per_metre) = if let Some(n) = s.strip_suffix("nm") {
        (n, 1e9)
    } else if let Some(n) = s.strip_suffix("um").or_else(|| s.strip_suffix("µm")) {
        (n, 1e6)
    } else if let Some(n) = s.strip_suffix('m') {
        (n, 1.0)
    } else {
        (s, 1.0)
    };
    let v: f64 = number
        .trim()
        .parse()
        .map_err(|_| format!("cannot read length '{raw}'"))?;
    if !(v > 0.0) || !v.is_finite() {
        return Err(format!("length must be positive, got '{raw}'"));
    }
    Ok(v / per_metre)
}

fn parse_grid(raw: &str) -> Result<Grid, String> {
    let parts: Vec<&str> = raw.split(',').collect();
    let [start, stop, count] = parts.as_slice() else {
        return Err(format!("grid needs start,stop,count; got '{raw}'"));
    };
    let grid = Grid {
        start: parse_length(start)?,
        stop: parse_length(stop)?,
        count: count
            .trim()
            .parse()
            .map_err(|_| format!("cannot read grid count '{count}'"))?,
    };
    if grid.count == 0 || grid.stop < grid.start || (grid.count > 1 && grid.stop == grid.start) {
        return Err(format!("grid '{raw}' is empty or decreasing"));
    }
    Ok(grid)
}
