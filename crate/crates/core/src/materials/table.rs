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

use crate::error::{CpkError, Result};
use crate::units::{atomic_units_to_angular_frequency, HARTREE_EV};
use std::io::BufRead;

/// Tolerance for α(iξ)/α(0) exceeding one in an ingested table.
const RATIO_SLACK: f64 = 1e-6;

/// Tabulated α(iξ)/α(0) on a grid of imaginary frequencies.
///
/// Interpolation is monotone cubic (Fritsch–Carlson) in the variables
/// (ξ², α(0)/α(iξ)), in which a single-oscillator polarizability is a straight
/// line. Beyond the grid the last two points define a single-oscillator tail
/// c/(1 + ξ²/ω²), so the ratio decays as (ω/ξ)².
#[derive(Debug, Clone, PartialEq)]
pub struct PolarizabilityTable {
    xi: Vec<f64>,
    ratio: Vec<f64>,
    s: Vec<f64>,
    v: Vec<f64>,
    slopes: Vec<f64>,
    tail: Tail,
    /// Rows as read, frequency in atomic units.
    source: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Tail {
    Oscillator { intercept: f64, slope: f64 },
    InverseSquare { s_last: f64, r_last: f64 },
}

fn ingest(line: usize, message: impl Into<String>) -> CpkError {
    CpkError::Ingestion {
        line,
        message: message.into(),
    }
}

impl PolarizabilityTable {
    /// Reads a two-column text table: frequency in atomic units, normalized
    /// polarizability. Blank lines and lines starting with `#` are skipped.
    pub fn parse(reader: impl BufRead) -> Result<Self> {
        let mut rows: Vec<(usize, f64, f64)> = Vec::new();
        let mut last_line = 0;
        for (idx, line) in reader.lines().enumerate() {
            let lineno = idx + 1;
            last_line = lineno;
            let line = line.map_err(|e| ingest(lineno, e.to_string()))?;
            let text = line.trim();
            if text.is_empty() || text.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = text.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(ingest(
                    lineno,
                    format!("expected 2 columns, found {}", fields.len()),
                ));
            }
            let num = |s: &str| {
                s.parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| ingest(lineno, format!("cannot parse number '{s}'")))
            };
            rows.push((lineno, num(fields[0])?, num(fields[1])?));
        }
        if rows.is_empty() {
            return Err(ingest(last_line, "no data rows"));
        }
        Self::from_rows(&rows)
    }

    /// Builds a table from (frequency in a.u., ratio) pairs.
    pub fn from_atomic_units(points: &[(f64, f64)]) -> Result<Self> {
        let rows: Vec<_> = points
            .iter()
            .enumerate()
            .map(|(i, &(x, r))| (i + 1, x, r))
            .collect();
        if rows.is_empty() {
            return Err(CpkError::State("empty polarizability grid".into()));
        }
        Self::from_rows(&rows)
    }

    fn from_rows(rows: &[(usize, f64, f64)]) -> Result<Self> {
        let mut xi = Vec::with_capacity(rows.len() + 1);
        let mut ratio = Vec::with_capacity(rows.len() + 1);
        for (k, &(line, x_au, r)) in rows.iter().enumerate() {
            if x_au < 0.0 {
                return Err(ingest(line, "negative frequency"));
            }
            if r <= 0.0 {
                return Err(ingest(line, "polarizability ratio must be positive"));
            }
            if k > 0 {
                let (_, prev_x, prev_r) = rows[k - 1];
                if x_au <= prev_x {
                    return Err(ingest(line, "frequency column must be strictly increasing"));
                }
                if r > prev_r * (1.0 + 1e-12) {
                    return Err(ingest(line, "polarizability ratio must be nonincreasing"));
                }
            }
            if x_au == 0.0 && (r - 1.0).abs() > RATIO_SLACK {
                return Err(ingest(line, "ratio at zero frequency must be 1"));
            }
            if x_au > 0.0 && r > 1.0 + RATIO_SLACK {
                return Err(ingest(line, "ratio exceeds 1 at nonzero frequency"));
            }
            if k == 0 && x_au > 0.0 {
                xi.push(0.0);
                ratio.push(1.0);
            }
            xi.push(atomic_units_to_angular_frequency(x_au)?);
            ratio.push(if x_au == 0.0 { 1.0 } else { r.min(1.0) });
        }
        if xi.len() < 2 {
            return Err(ingest(rows[0].0, "need at least two grid points"));
        }
        let source = rows.iter().map(|&(_, x, r)| (x, r)).collect();
        Ok(Self::build(xi, ratio, source))
    }

    fn build(xi: Vec<f64>, ratio: Vec<f64>, source: Vec<(f64, f64)>) -> Self {
        let s: Vec<f64> = xi.iter().map(|x| x * x).collect();
        let v: Vec<f64> = ratio.iter().map(|r| 1.0 / r).collect();
        let slopes = fritsch_carlson(&s, &v);
        let n = s.len();
        let m = (v[n - 1] - v[n - 2]) / (s[n - 1] - s[n - 2]);
        let b0 = v[n - 1] - m * s[n - 1];
        let tail = if m > 0.0 && b0 > 0.0 {
            Tail::Oscillator {
                intercept: b0,
                slope: m,
            }
        } else {
            Tail::InverseSquare {
                s_last: s[n - 1],
                r_last: ratio[n - 1],
            }
        };
        Self {
            xi,
            ratio,
            s,
            v,
            slopes,
            tail,
            source,
        }
    }

    /// Grid in rad/s (including a prepended ξ = 0 point when needed).
    pub fn frequencies(&self) -> &[f64] {
        &self.xi
    }

    pub fn ratios(&self) -> &[f64] {
        &self.ratio
    }

    /// Rows as ingested, frequency in atomic units.
    pub fn source_rows(&self) -> &[(f64, f64)] {
        &self.source
    }

    /// Effective oscillator frequency (rad/s) of the high-frequency tail, if the
    /// two-point fit was physical.
    pub fn tail_frequency(&self) -> Option<f64> {
        match self.tail {
            Tail::Oscillator { intercept, slope } => Some((intercept / slope).sqrt()),
            Tail::InverseSquare { .. } => None,
        }
    }

    pub(crate) fn ratio_at(&self, xi: f64) -> f64 {
        let s = xi * xi;
        let n = self.s.len();
        if s >= self.s[n - 1] {
            return match self.tail {
                Tail::Oscillator { intercept, slope } => 1.0 / (intercept + slope * s),
                Tail::InverseSquare { s_last, r_last } => r_last * s_last / s,
            };
        }
        let k = self
            .s
            .partition_point(|&x| x <= s)
            .saturating_sub(1)
            .min(n - 2);
        let h = self.s[k + 1] - self.s[k];
        let t = (s - self.s[k]) / h;
        let t2 = t * t;
        let t3 = t2 * t;
        let v = (2.0 * t3 - 3.0 * t2 + 1.0) * self.v[k]
            + (t3 - 2.0 * t2 + t) * h * self.slopes[k]
            + (-2.0 * t3 + 3.0 * t2) * self.v[k + 1]
            + (t3 - t2) * h * self.slopes[k + 1];
        1.0 / v
    }
}

fn fritsch_carlson(x: &[f64], y: &[f64]) -> Vec<f64> {
    let n = x.len();
    let delta: Vec<f64> = (0..n - 1)
        .map(|k| (y[k + 1] - y[k]) / (x[k + 1] - x[k]))
        .collect();
    let mut m = vec![0.0; n];
    m[0] = delta[0];
    m[n - 1] = delta[n - 2];
    for k in 1..n - 1 {
        m[k] = if delta[k - 1] * delta[k] > 0.0 {
            0.5 * (delta[k - 1] + delta[k])
        } else {
            0.0
        };
    }
    for k in 0..n - 1 {
        if delta[k] == 0.0 {
            m[k] = 0.0;
            m[k + 1] = 0.0;
            continue;
        }
        let a = m[k] / delta[k];
        let b = m[k + 1] / delta[k];
        let r = a * a + b * b;
        if r > 9.0 {
            let t = 3.0 / r.sqrt();
            m[k] = t * a * delta[k];
            m[k + 1] = t * b * delta[k];
        }
    }
    m
}

/// Reads a polarizability table and wraps it as an atom model.
pub fn load_polarizability_table(source: impl BufRead) -> Result<super::AtomModel> {
    Ok(super::AtomModel::tabulated(PolarizabilityTable::parse(
        source,
    )?))
}

/// 1 a.u. of frequency in rad/s.
pub fn atomic_unit_of_frequency() -> f64 {
    HARTREE_EV * crate::units::CODATA_2018.electron_charge_over_hbar
}
