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

//! The y-integral shared by the Matsubara sum and the zero-temperature form.

use super::config::{ComputeConfig, Quantity};
use super::reflection::Wall;
use crate::error::Result;
use crate::quadrature::{integrate_adaptive, laguerre40, laguerre60};

/// Upper end of the fallback u-interval; e^{−80} is far below any tolerance.
const FALLBACK_SPAN: f64 = 80.0;

#[inline]
fn integrand(wall: &Wall, cfg: &ComputeConfig, zeta: f64, y: f64, q: Quantity) -> f64 {
    let (par, perp) = wall.coefficients(cfg.reflection, zeta, y);
    let f = 2.0 * y * y * par + zeta * zeta * (perp - par);
    match q {
        Quantity::Energy => f,
        Quantity::Force => f * y,
    }
}

/// e^{ζ}·∫_ζ^∞ e^{−y} g(y) dy with g = 2y²r∥ + ζ²(r⊥ − r∥) (times y for the
/// force), evaluated as ∫₀^∞ e^{−u} g(ζ + u) du.
pub(crate) fn y_integral(wall: &Wall, cfg: &ComputeConfig, zeta: f64, q: Quantity) -> Result<f64> {
    let g = |u: f64| integrand(wall, cfg, zeta, zeta + u, q);
    let fine = laguerre60().integrate(g);
    let coarse = laguerre40().integrate(g);
    if (fine - coarse).abs() <= cfg.quad_rel_tol * fine.abs() {
        return Ok(fine);
    }
    let (v, _) = integrate_adaptive(
        |u| (-u).exp() * g(u),
        0.0,
        FALLBACK_SPAN,
        0.1 * cfg.quad_rel_tol,
        0.0,
    )?;
    Ok(v)
}
