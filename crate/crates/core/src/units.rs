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

//! Physical constants and the single conversion site from SI to the
//! dimensionless variables used by every other module.

use crate::error::{domain, Result};
use crate::materials::{AtomModel, MetalModel};
use std::f64::consts::PI;

/// Reduced Planck constant, J·s (CODATA 2018).
pub const HBAR: f64 = 1.054_571_817e-34;
/// Speed of light in vacuum, m/s (exact).
pub const C: f64 = 2.997_924_58e8;
/// Boltzmann constant, J/K (exact).
pub const K_B: f64 = 1.380_649e-23;
/// Elementary charge, C (exact).
pub const ELECTRON_CHARGE: f64 = 1.602_176_634e-19;
/// Energy of one atomic unit of frequency, in eV, as used by polarizability tables.
pub const HARTREE_EV: f64 = 27.21;

/// Read-only bundle of the pinned constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub hbar: f64,
    pub c: f64,
    pub k_b: f64,
    /// Multiply an energy in eV by this to get an angular frequency in rad/s.
    pub electron_charge_over_hbar: f64,
}

pub const CODATA_2018: PhysicalConstants = PhysicalConstants {
    hbar: HBAR,
    c: C,
    k_b: K_B,
    electron_charge_over_hbar: ELECTRON_CHARGE / HBAR,
};

/// Converts a photon energy in eV to an angular frequency in rad/s.
pub fn ev_to_angular_frequency(ev: f64) -> Result<f64> {
    if !(ev >= 0.0) || !ev.is_finite() {
        return Err(domain(format!(
            "energy must be finite and nonnegative, got {ev} eV"
        )));
    }
    Ok(ev * CODATA_2018.electron_charge_over_hbar)
}

/// Plasma frequency ω_p = 2πc/λ_p.
pub fn plasma_frequency_from_wavelength(lambda_p: f64) -> Result<f64> {
    if !(lambda_p > 0.0) || !lambda_p.is_finite() {
        return Err(domain(format!(
            "plasma wavelength must be positive, got {lambda_p} m"
        )));
    }
    Ok(2.0 * PI * C / lambda_p)
}

/// Converts a frequency in atomic units (1 a.u. = 27.21 eV) to rad/s.
pub fn atomic_units_to_angular_frequency(au: f64) -> Result<f64> {
    ev_to_angular_frequency(au * HARTREE_EV)
}

/// Inverse of [`atomic_units_to_angular_frequency`].
pub fn angular_frequency_to_atomic_units(omega: f64) -> f64 {
    omega / (HARTREE_EV * CODATA_2018.electron_charge_over_hbar)
}

/// Characteristic frequency ω_c = c/(2a).
pub fn characteristic_frequency(a: f64) -> f64 {
    C / (2.0 * a)
}

/// Dimensionless temperature τ = 4π a k_B T / (ħ c).
pub fn dimensionless_temperature(a: f64, temperature: f64) -> f64 {
    4.0 * PI * a * K_B * temperature / (HBAR * C)
}

/// Reduced variables for a given separation, temperature, wall and atom.
#[derive(Debug, Clone, PartialEq)]
pub struct DimensionlessState {
    /// Separation, m.
    pub a: f64,
    /// Temperature, K.
    pub temperature: f64,
    /// ω_c = c/(2a), rad/s.
    pub omega_c: f64,
    /// τ = 4π a k_B T/(ħc).
    pub tau: f64,
    /// β_p = ω_c/ω_p; zero for an ideal metal.
    pub beta_p: f64,
    /// β_{A,n} = ω_c/ω_{0n}, one per oscillator term; empty for static or tabulated atoms.
    pub beta_a: Vec<f64>,
}

impl DimensionlessState {
    /// Matsubara frequency ζ_l = l·τ.
    pub fn zeta(&self, l: usize) -> f64 {
        l as f64 * self.tau
    }

    /// The state at the same separation but T = 0.
    pub fn at_zero_temperature(&self) -> Self {
        Self {
            temperature: 0.0,
            tau: 0.0,
            ..self.clone()
        }
    }
}

/// Builds the [`DimensionlessState`] for `(a, T)`.
pub fn reduce(
    a: f64,
    temperature: f64,
    metal: &MetalModel,
    atom: &AtomModel,
) -> Result<DimensionlessState> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(domain(format!("separation must be positive, got {a} m")));
    }
    if !(temperature >= 0.0) || !temperature.is_finite() {
        return Err(domain(format!(
            "temperature must be nonnegative, got {temperature} K"
        )));
    }
    let omega_c = characteristic_frequency(a);
    let beta_p = metal.plasma_frequency().map_or(0.0, |wp| omega_c / wp);
    let beta_a = atom
        .oscillators()
        .map(|terms| terms.iter().map(|o| omega_c / o.omega0).collect())
        .unwrap_or_default();
    Ok(DimensionlessState {
        a,
        temperature,
        omega_c,
        tau: dimensionless_temperature(a, temperature),
        beta_p,
        beta_a,
    })
}
