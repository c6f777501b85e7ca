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

use crate::error::{domain, CpkError, Result};
use crate::lifshitz::Quantity;
use crate::special::{hyp1f1_scaled_unchecked as hyp1f1_scaled, ln_gamma_scaled_unchecked};

/// Hard cap on the number of series terms.
pub const MAX_SERIES_TERMS: usize = 500;
const MIN_TERMS: usize = 8;
const REL_TOL: f64 = 1e-15;

/// One of the six short-separation series with its truncation data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesTerm {
    pub value: f64,
    /// Size of the last accepted correction to the accelerated sum.
    pub error_estimate: f64,
    pub terms: usize,
}

/// Σ₁…Σ₆ evaluated at β_A.
///
/// For Σ₁, Σ₃ and Σ₅ (the ₁F₁ series) the returned value is the plain sum,
/// which grows like e^{1/β}; use it only for moderate 1/β. The energy and
/// force variants differ by the substitutions Γ(δ, x) → Γ(δ + 1, x) and
/// ₁F₁(1, γ; x) → ((γ − 1)/(γβ))·₁F₁(1, γ + 1; x), x = 1/β.
///
/// ```
/// use cpk_core::asymptotics::sigma_series;
/// use cpk_core::Quantity;
///
/// let s2 = sigma_series(0.5, 2, Quantity::Energy).unwrap();
/// assert!(s2.value > 0.0 && s2.terms < 80);
/// ```
pub fn sigma_series(beta: f64, which: u8, q: Quantity) -> Result<SeriesTerm> {
    check_beta(beta)?;
    let mut s = sigma_scaled(beta, which, q)?;
    if matches!(which, 1 | 3 | 5) {
        let grow = (1.0 / beta).exp();
        s.value *= grow;
        s.error_estimate *= grow;
        if !s.value.is_finite() {
            return Err(CpkError::OutOfRegime(format!(
                "Σ{which} overflows at β = {beta:e}"
            )));
        }
    }
    Ok(s)
}

pub(crate) fn check_beta(beta: f64) -> Result<()> {
    if beta.is_nan() || beta <= 0.0 {
        return Err(domain(format!("β_A must be positive, got {beta}")));
    }
    if beta >= 1.0 {
        return Err(CpkError::OutOfRegime(format!(
            "β_A = {beta} ≥ 1: short-separation series diverge"
        )));
    }
    Ok(())
}

/// ln|Γ(δ, x)| substituted per quantity.
#[inline]
fn ln_g(delta: i32, x: f64, q: Quantity) -> f64 {
    let d = match q {
        Quantity::Energy => delta,
        Quantity::Force => delta + 1,
    };
    ln_gamma_scaled_unchecked(d, x) - x
}

/// ln(e^{−x}·h(γ)) substituted per quantity.
#[inline]
fn ln_h_scaled(gamma: f64, x: f64, q: Quantity) -> f64 {
    match q {
        Quantity::Energy => hyp1f1_scaled(gamma, x).ln(),
        Quantity::Force => {
            ((gamma - 1.0) / gamma).ln() + x.ln() + hyp1f1_scaled(gamma + 1.0, x).ln()
        }
    }
}

/// Σ_which with the ₁F₁ series multiplied by e^{−x}; the Γ series are
/// returned as is.
pub(crate) fn sigma_scaled(beta: f64, which: u8, q: Quantity) -> Result<SeriesTerm> {
    let x = 1.0 / beta;
    let lx = x.ln();
    let start = match which {
        1 | 2 | 6 => 0,
        3..=5 => 1,
        _ => return Err(domain(format!("series index must be 1..=6, got {which}"))),
    };
    let term = |k: usize| -> f64 {
        let kf = k as f64;
        let ki = k as i32;
        let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
        let ln_mag = match which {
            1 => ln_h_scaled(2.0 * kf + 5.0, x, q) - ((2.0 * kf + 1.0) * (2.0 * kf + 4.0)).ln(),
            2 => (2.0 * kf + 1.0) * lx + ln_g(2 - 2 * ki, x, q) - (2.0 * kf + 1.0).ln(),
            3 => {
                ln_h_scaled(2.0 * kf + 4.0, x, q) + (kf + 2.0).ln()
                    - (2.0 * kf + 1.0).ln()
                    - 2.0 * (2.0 * kf + 3.0).ln()
            }
            4 => {
                (2.0 * kf + 6.0) * lx + ln_g(-2 * ki - 1, x, q) + kf.ln()
                    - ((2.0 * kf + 1.0) * (2.0 * kf + 3.0)).ln()
            }
            5 => {
                ln_h_scaled(2.0 * kf + 5.0, x, q) + (4.0 * kf * kf + 16.0 * kf + 11.0).ln()
                    - ((kf + 2.0) * (2.0 * kf + 1.0) * (2.0 * kf + 3.0) * (2.0 * kf + 5.0)).ln()
            }
            _ => {
                let poly = 8.0 * kf * kf + 16.0 * kf - 2.0;
                let mag = (2.0 * kf + 8.0) * lx + ln_g(-2 * ki - 2, x, q) + poly.abs().ln()
                    - ((2.0 * kf + 1.0) * (2.0 * kf + 3.0) * (2.0 * kf + 5.0)).ln();
                return sign * poly.signum() * mag.exp();
            }
        };
        sign * ln_mag.exp()
    };
    let mut acc = EulerSum::default();
    let mut quiet = 0;
    for (n, k) in (start..start + MAX_SERIES_TERMS).enumerate() {
        let step = acc.push(term(k));
        let scale = acc.sum.abs().max(f64::MIN_POSITIVE);
        if n + 1 >= MIN_TERMS && step.abs() <= REL_TOL * scale {
            quiet += 1;
            if quiet >= 2 {
                return Ok(SeriesTerm {
                    value: acc.sum,
                    error_estimate: step.abs(),
                    terms: n + 1,
                });
            }
        } else {
            quiet = 0;
        }
    }
    Err(CpkError::Series {
        which,
        terms: MAX_SERIES_TERMS,
    })
}

/// Euler-van Wijngaarden transformation of an alternating series, raising
/// the order of the difference table only while it keeps shrinking.
#[derive(Debug, Default)]
struct EulerSum {
    table: Vec<f64>,
    order: usize,
    sum: f64,
}

impl EulerSum {
    /// Adds the next signed term and returns the change of the estimate.
    fn push(&mut self, term: f64) -> f64 {
        if self.table.is_empty() {
            self.table.push(term);
            self.order = 1;
            self.sum = 0.5 * term;
            return self.sum;
        }
        let mut tmp = self.table[0];
        self.table[0] = term;
        for j in 0..self.order - 1 {
            let next = self.table[j + 1];
            self.table[j + 1] = 0.5 * (self.table[j] + tmp);
            tmp = next;
        }
        let last = 0.5 * (self.table[self.order - 1] + tmp);
        if self.table.len() <= self.order {
            self.table.push(last);
        } else {
            self.table[self.order] = last;
        }
        let step = if last.abs() <= self.table[self.order - 1].abs() {
            self.order += 1;
            0.5 * last
        } else {
            last
        };
        self.sum += step;
        step
    }
}
