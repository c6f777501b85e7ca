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

use cpk_core::materials::{
    atomic_unit_of_frequency, load_polarizability_table, registry, Oscillator, Permittivity,
    PolarizabilityTable,
};
use cpk_core::{AtomModel, CpkError, MetalModel};
use proptest::prelude::*;
use std::io::Cursor;

fn finite(p: Permittivity) -> f64 {
    match p {
        Permittivity::Finite(v) => v,
        Permittivity::Infinite => f64::INFINITY,
    }
}

/// Two-oscillator table in atomic units with a sparse, uneven grid.
fn synthetic_table() -> AtomModel {
    let mut text = String::from("# xi_au ratio\n\n");
    let mut x = 0.0;
    while x < 3.0 {
        let r = 0.7 / (1.0 + (x / 0.15f64).powi(2)) + 0.3 / (1.0 + (x / 0.9f64).powi(2));
        text.push_str(&format!("{x:.6}  {r:.12}\n"));
        x += if x < 0.5 { 0.02 } else { 0.1 };
    }
    load_polarizability_table(Cursor::new(text)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn permittivity_decays(wp in 1e14f64..1e17, ratio in 1e-4f64..0.099, x1 in 1e10f64..1e18, k in 1.0001f64..100.0) {
        let x2 = x1 * k;
        for metal in [MetalModel::plasma(wp).unwrap(), MetalModel::drude(wp, ratio * wp).unwrap()] {
            let e1 = finite(metal.permittivity_at(x1).unwrap());
            let e2 = finite(metal.permittivity_at(x2).unwrap());
            prop_assert!(e2 < e1 && e2 > 1.0);
        }
        prop_assert_eq!(MetalModel::Ideal.permittivity_at(x1).unwrap(), Permittivity::Infinite);
    }

    #[test]
    fn polarizability_ratio_bounded_and_nonincreasing(x1 in 0.0f64..1e17, k in 1.0f64..50.0, w in 0.05f64..0.95) {
        let x2 = x1 * k;
        let multi = AtomModel::multi_oscillator(vec![
            Oscillator { weight: w, omega0: 1.2e15 },
            Oscillator { weight: 1.0 - w, omega0: 7e15 },
        ])
        .unwrap();
        let atoms = [
            AtomModel::static_atom(),
            AtomModel::single_oscillator(2.36e15).unwrap(),
            multi,
            synthetic_table(),
        ];
        for atom in &atoms {
            let r1 = atom.ratio_at(x1).unwrap();
            let r2 = atom.ratio_at(x2).unwrap();
            prop_assert!(r1 > 0.0 && r1 <= 1.0);
            prop_assert!(r2 <= r1);
        }
    }

    #[test]
    fn single_term_multi_is_single(omega0 in 1e14f64..1e17, xi in 0.0f64..1e18) {
        let single = AtomModel::single_oscillator(omega0).unwrap();
        let multi = AtomModel::multi_oscillator(vec![Oscillator { weight: 1.0, omega0 }]).unwrap();
        prop_assert_eq!(single.ratio_at(xi).unwrap().to_bits(), multi.ratio_at(xi).unwrap().to_bits());
    }
}

#[test]
fn table_tracks_its_source_and_extrapolates() {
    let atom = synthetic_table();
    let au = atomic_unit_of_frequency();
    let exact = |x: f64| 0.7 / (1.0 + (x / 0.15f64).powi(2)) + 0.3 / (1.0 + (x / 0.9f64).powi(2));
    for x in [0.013, 0.07, 0.31, 1.55, 2.87] {
        let r = atom.ratio_at(x * au).unwrap();
        assert!((r - exact(x)).abs() < 2e-3, "{x}: {r} vs {}", exact(x));
    }
    // The tail keeps decaying like ξ⁻².
    let far = atom.ratio_at(30.0 * au).unwrap();
    let farther = atom.ratio_at(60.0 * au).unwrap();
    assert!((far / farther - 4.0).abs() < 0.1);
}

#[test]
fn malformed_tables_report_the_line() {
    let cases = [
        ("0 1\n0.2 0.5\n0.1 0.4\n", 3),
        ("0 1\n0.1 abc\n", 2),
        ("# header\n0 1\n0.1 0.5 9\n", 3),
        ("0 1\n0.1 1.5\n", 2),
    ];
    for (text, want) in cases {
        match PolarizabilityTable::parse(Cursor::new(text)) {
            Err(CpkError::Ingestion { line, .. }) => assert_eq!(line, want, "{text:?}"),
            other => panic!("{text:?}: {other:?}"),
        }
    }
}

#[test]
fn registry_lookups() {
    let reg = registry();
    for name in ["He*", "he-star", "NA", "cs"] {
        assert!(reg.atom(name).is_some(), "{name}");
    }
    assert!(reg.atom("xe").is_none());
    assert_eq!(reg.metal("Au"), Some(reg.gold));
    assert_eq!(reg.metal("ideal"), Some(MetalModel::Ideal));
    assert!(reg.metal("silver").is_none());
}
