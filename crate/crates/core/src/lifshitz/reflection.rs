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

use super::config::ReflectionModel;
use crate::materials::{MetalModel, Permittivity};

/// Fresnel reflection coefficients (r∥, r⊥) of the wall in dimensionless
/// variables, with y ≥ ζ.
///
/// `inv_beta_p_sq` is the ζ → 0 limit of ζ²(ε − 1): 1/β_p² for the plasma
/// model, 0 for a Drude metal and +∞ for an ideal metal. It is only read at
/// ζ = 0, where r∥ = 1 for every model.
///
/// ```
/// use cpk_core::lifshitz::reflection_coefficients;
/// use cpk_core::materials::Permittivity;
///
/// // Normal incidence (y = ζ): both equal (√ε − 1)/(√ε + 1).
/// let (par, perp) = reflection_coefficients(Permittivity::Finite(101.0), 1.0, 1.0, 100.0);
/// let normal = (101f64.sqrt() - 1.0) / (101f64.sqrt() + 1.0);
/// assert!((par - normal).abs() < 1e-14 && (perp - normal).abs() < 1e-14);
///
/// let (par, perp) = reflection_coefficients(Permittivity::Finite(101.0), 1.0, 2.0, 100.0);
/// assert!((par - 0.903_881_873).abs() < 1e-9 && (perp - 0.672_078_439).abs() < 1e-9);
/// ```
pub fn reflection_coefficients(
    eps: Permittivity,
    zeta: f64,
    y: f64,
    inv_beta_p_sq: f64,
) -> (f64, f64) {
    if zeta == 0.0 {
        return (1.0, fresnel_static_perp(inv_beta_p_sq, y));
    }
    match eps {
        Permittivity::Infinite => (1.0, 1.0),
        Permittivity::Finite(e) => fresnel(zeta * zeta * (e - 1.0), zeta, y),
    }
}

/// Leontovich surface-impedance coefficients, same argument conventions as
/// [`reflection_coefficients`].
pub fn impedance_coefficients(
    eps: Permittivity,
    zeta: f64,
    y: f64,
    inv_beta_p_sq: f64,
) -> (f64, f64) {
    if zeta == 0.0 {
        return (1.0, impedance_static_perp(inv_beta_p_sq, y));
    }
    match eps {
        Permittivity::Infinite => (1.0, 1.0),
        Permittivity::Finite(e) => impedance(zeta * zeta * (e - 1.0), zeta, y),
    }
}

#[inline]
pub(crate) fn fresnel(k: f64, zeta: f64, y: f64) -> (f64, f64) {
    let s = (y * y + k).sqrt();
    let ey = y + k * y / (zeta * zeta);
    // εy − s = K·(y/ζ² − 1/(y + s)), free of cancellation for small K.
    let par = k * (y / (zeta * zeta) - 1.0 / (y + s)) / (ey + s);
    let perp = k / ((s + y) * (s + y));
    (par, perp)
}

#[inline]
fn impedance(k: f64, zeta: f64, y: f64) -> (f64, f64) {
    let z = zeta / (zeta * zeta + k).sqrt();
    let par = (y - z * zeta) / (y + z * zeta);
    let perp = (zeta - z * y) / (zeta + z * y);
    (par, perp)
}

fn fresnel_static_perp(k0: f64, y: f64) -> f64 {
    if k0.is_infinite() {
        1.0
    } else {
        let s = (y * y + k0).sqrt();
        k0 / ((s + y) * (s + y))
    }
}

fn impedance_static_perp(k0: f64, y: f64) -> f64 {
    if k0.is_infinite() {
        1.0
    } else {
        let r = k0.sqrt();
        (r - y) / (r + y)
    }
}

/// The wall response in reduced form, K(ζ) = ζ²(ε(iζω_c) − 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Wall {
    Ideal,
    /// K(ζ) = k_inf·ζ/(ζ + g); g = 0 for the plasma model.
    Finite {
        k_inf: f64,
        g: f64,
    },
}

impl Wall {
    pub(crate) fn new(metal: &MetalModel, omega_c: f64) -> Self {
        match *metal {
            MetalModel::Ideal => Self::Ideal,
            MetalModel::Plasma { omega_p } => Self::Finite {
                k_inf: (omega_p / omega_c).powi(2),
                g: 0.0,
            },
            MetalModel::Drude { omega_p, gamma } => Self::Finite {
                k_inf: (omega_p / omega_c).powi(2),
                g: gamma / omega_c,
            },
        }
    }

    /// ζ → 0 limit of K(ζ).
    pub(crate) fn k_static(&self) -> f64 {
        match *self {
            Self::Ideal => f64::INFINITY,
            Self::Finite { k_inf, g } => {
                if g == 0.0 {
                    k_inf
                } else {
                    0.0
                }
            }
        }
    }

    /// Coefficients at (ζ, y) for the chosen reflection model.
    #[inline]
    pub(crate) fn coefficients(&self, model: ReflectionModel, zeta: f64, y: f64) -> (f64, f64) {
        match *self {
            Self::Ideal => (1.0, 1.0),
            Self::Finite { k_inf, g } => {
                if zeta == 0.0 {
                    let k0 = self.k_static();
                    return match model {
                        ReflectionModel::Fresnel => (1.0, fresnel_static_perp(k0, y)),
                        ReflectionModel::Impedance => (1.0, impedance_static_perp(k0, y)),
                    };
                }
                let k = k_inf * zeta / (zeta + g);
                match model {
                    ReflectionModel::Fresnel => fresnel(k, zeta, y),
                    ReflectionModel::Impedance => impedance(k, zeta, y),
                }
            }
        }
    }
}
