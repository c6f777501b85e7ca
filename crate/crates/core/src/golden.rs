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

//! Published reference values at T = 300 K for the He*, Na and Cs atoms near
//! a gold wall, used to check table reproduction.
//!
//! Columns per atom: (a) Lifshitz with the accurate He* polarizability,
//! (b) Lifshitz with the single-oscillator model, (c) large-separation
//! expansion, (d) short-separation expansion. Column (a) exists for He* only.
//! Missing cells are `None`.

/// One printed row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GoldenRow {
    pub a_um: f64,
    /// He*: columns (a), (b), (c), (d).
    pub he: [Option<f64>; 4],
    /// Na: columns (b), (c), (d).
    pub na: [Option<f64>; 3],
    /// Cs: columns (b), (c), (d).
    pub cs: [Option<f64>; 3],
}

impl GoldenRow {
    /// Columns (b), (c), (d) for a registry atom name.
    pub fn columns(&self, atom: &str) -> Option<[Option<f64>; 3]> {
        match atom {
            "he-star" => Some([self.he[1], self.he[2], self.he[3]]),
            "na" => Some(self.na),
            "cs" => Some(self.cs),
            _ => None,
        }
    }
}

/// Free-energy correction factor η.
pub const TABLE_I: &[GoldenRow] = &[
    GoldenRow {
        a_um: 0.15,
        he: [Some(0.5039), Some(0.5032), None, Some(0.505)],
        na: [Some(0.6415), None, Some(0.6452)],
        cs: [Some(0.5705), None, Some(0.5731)],
    },
    GoldenRow {
        a_um: 0.2,
        he: [Some(0.5899), Some(0.59), None, Some(0.5912)],
        na: [Some(0.7194), None, Some(0.7217)],
        cs: [Some(0.6551), None, Some(0.6567)],
    },
    GoldenRow {
        a_um: 0.3,
        he: [Some(0.707), Some(0.7077), None, Some(0.7083)],
        na: [Some(0.8124), None, Some(0.8134)],
        cs: [Some(0.763), None, Some(0.7637)],
    },
    GoldenRow {
        a_um: 0.4,
        he: [Some(0.7801), Some(0.781), None, Some(0.7814)],
        na: [Some(0.8635), None, Some(0.864)],
        cs: [Some(0.8259), None, Some(0.8264)],
    },
    GoldenRow {
        a_um: 0.5,
        he: [Some(0.8285), Some(0.8294), None, Some(0.8298)],
        na: [Some(0.8946), None, Some(0.895)],
        cs: [Some(0.8657), None, Some(0.8661)],
    },
    GoldenRow {
        a_um: 0.6,
        he: [Some(0.862), Some(0.8627), None, Some(0.8632)],
        na: [Some(0.9149), None, Some(0.9154)],
        cs: [Some(0.8922), None, Some(0.8928)],
    },
    GoldenRow {
        a_um: 0.7,
        he: [Some(0.8859), Some(0.8865), None, Some(0.8872)],
        na: [Some(0.9289), Some(0.9235), Some(0.9297)],
        cs: [Some(0.9108), None, Some(0.9116)],
    },
    GoldenRow {
        a_um: 0.8,
        he: [Some(0.9035), Some(0.904), None, Some(0.9051)],
        na: [Some(0.939), Some(0.9354), Some(0.9401)],
        cs: [Some(0.9243), None, Some(0.9254)],
    },
    GoldenRow {
        a_um: 0.9,
        he: [Some(0.9167), Some(0.9172), None, Some(0.9187)],
        na: [Some(0.9464), Some(0.944), Some(0.948)],
        cs: [Some(0.9342), Some(0.9283), Some(0.9358)],
    },
    GoldenRow {
        a_um: 1.0,
        he: [Some(0.9269), Some(0.9272), None, Some(0.9294)],
        na: [Some(0.952), Some(0.9502), Some(0.9541)],
        cs: [Some(0.9418), Some(0.9375), Some(0.9439)],
    },
    GoldenRow {
        a_um: 1.1,
        he: [Some(0.9347), Some(0.935), Some(0.9281), Some(0.9379)],
        na: [Some(0.9562), Some(0.9549), Some(0.959)],
        cs: [Some(0.9475), Some(0.9444), Some(0.9504)],
    },
    GoldenRow {
        a_um: 1.2,
        he: [Some(0.9409), Some(0.9411), Some(0.936), Some(0.9448)],
        na: [Some(0.9594), Some(0.9584), None],
        cs: [Some(0.952), Some(0.9496), Some(0.9556)],
    },
    GoldenRow {
        a_um: 1.3,
        he: [Some(0.9458), Some(0.946), Some(0.942), Some(0.9504)],
        na: [Some(0.9619), Some(0.9612), None],
        cs: [Some(0.9555), Some(0.9537), Some(0.9599)],
    },
    GoldenRow {
        a_um: 1.4,
        he: [Some(0.9498), Some(0.9499), Some(0.9468), Some(0.9552)],
        na: [Some(0.964), Some(0.9633), None],
        cs: [Some(0.9583), Some(0.9569), None],
    },
    GoldenRow {
        a_um: 1.5,
        he: [Some(0.9531), Some(0.9532), Some(0.9508), Some(0.9592)],
        na: [Some(0.9656), Some(0.9651), None],
        cs: [Some(0.9606), Some(0.9596), None],
    },
    GoldenRow {
        a_um: 2.0,
        he: [Some(0.9668), Some(0.9669), Some(0.9659), None],
        na: [Some(0.9741), Some(0.9739), None],
        cs: [Some(0.9712), Some(0.9708), None],
    },
    GoldenRow {
        a_um: 2.5,
        he: [Some(0.9889), Some(0.9889), Some(0.9885), None],
        na: [Some(0.9935), Some(0.9934), None],
        cs: [Some(0.9917), Some(0.9914), None],
    },
    GoldenRow {
        a_um: 3.0,
        he: [Some(1.031), Some(1.031), Some(1.03), None],
        na: [Some(1.034), Some(1.033), None],
        cs: [Some(1.032), Some(1.032), None],
    },
    GoldenRow {
        a_um: 3.5,
        he: [Some(1.096), Some(1.096), Some(1.095), None],
        na: [Some(1.097), Some(1.097), None],
        cs: [Some(1.097), Some(1.097), None],
    },
    GoldenRow {
        a_um: 4.0,
        he: [Some(1.182), Some(1.182), Some(1.182), None],
        na: [Some(1.183), Some(1.183), None],
        cs: [Some(1.183), Some(1.183), None],
    },
    GoldenRow {
        a_um: 4.5,
        he: [Some(1.286), Some(1.286), Some(1.285), None],
        na: [Some(1.286), Some(1.286), None],
        cs: [Some(1.286), Some(1.286), None],
    },
    GoldenRow {
        a_um: 5.0,
        he: [Some(1.402), Some(1.402), Some(1.402), None],
        na: [Some(1.402), Some(1.402), None],
        cs: [Some(1.402), Some(1.402), None],
    },
    GoldenRow {
        a_um: 6.0,
        he: [Some(1.656), Some(1.656), Some(1.656), None],
        na: [Some(1.656), Some(1.656), None],
        cs: [Some(1.656), Some(1.656), None],
    },
    GoldenRow {
        a_um: 7.0,
        he: [Some(1.924), Some(1.924), Some(1.924), None],
        na: [Some(1.924), Some(1.924), None],
        cs: [Some(1.924), Some(1.924), None],
    },
    GoldenRow {
        a_um: 8.0,
        he: [Some(2.196), Some(2.196), Some(2.196), None],
        na: [Some(2.196), Some(2.196), None],
        cs: [Some(2.196), Some(2.196), None],
    },
];

/// Force correction factor κ.
pub const TABLE_II: &[GoldenRow] = &[
    GoldenRow {
        a_um: 0.15,
        he: [Some(0.4298), Some(0.4284), None, Some(0.4309)],
        na: [Some(0.5707), None, Some(0.5762)],
        cs: [Some(0.4959), None, Some(0.4995)],
    },
    GoldenRow {
        a_um: 0.2,
        he: [Some(0.5151), Some(0.5146), None, Some(0.5163)],
        na: [Some(0.6553), None, Some(0.6586)],
        cs: [Some(0.5835), None, Some(0.5858)],
    },
    GoldenRow {
        a_um: 0.3,
        he: [Some(0.6388), Some(0.6394), None, Some(0.6402)],
        na: [Some(0.7625), None, Some(0.764)],
        cs: [Some(0.7028), None, Some(0.7039)],
    },
    GoldenRow {
        a_um: 0.4,
        he: [Some(0.7214), Some(0.7224), None, Some(0.7229)],
        na: [Some(0.8246), None, Some(0.8254)],
        cs: [Some(0.7769), None, Some(0.7775)],
    },
    GoldenRow {
        a_um: 0.5,
        he: [Some(0.7787), Some(0.7798), None, Some(0.7811)],
        na: [Some(0.8637), None, Some(0.8641)],
        cs: [Some(0.8257), None, Some(0.826)],
    },
    GoldenRow {
        a_um: 0.6,
        he: [Some(0.8198), Some(0.8208), None, Some(0.8211)],
        na: [Some(0.8899), None, Some(0.8902)],
        cs: [Some(0.8593), None, Some(0.8596)],
    },
    GoldenRow {
        a_um: 0.7,
        he: [Some(0.85), Some(0.8511), None, Some(0.8513)],
        na: [Some(0.9083), None, Some(0.9085)],
        cs: [Some(0.8834), None, Some(0.8837)],
    },
    GoldenRow {
        a_um: 0.8,
        he: [Some(0.8729), Some(0.8739), None, Some(0.8741)],
        na: [Some(0.9218), None, Some(0.9221)],
        cs: [Some(0.9013), None, Some(0.9016)],
    },
    GoldenRow {
        a_um: 0.9,
        he: [Some(0.8905), Some(0.8914), None, Some(0.8918)],
        na: [Some(0.932), Some(0.9276), Some(0.9324)],
        cs: [Some(0.9149), None, Some(0.9152)],
    },
    GoldenRow {
        a_um: 1.0,
        he: [Some(0.9056), Some(0.9052), None, Some(0.9057)],
        na: [Some(0.9399), Some(0.9368), Some(0.9405)],
        cs: [Some(0.9254), None, Some(0.9259)],
    },
    GoldenRow {
        a_um: 1.1,
        he: [Some(0.9155), Some(0.9161), Some(0.9036), Some(0.917)],
        na: [Some(0.9461), Some(0.9438), Some(0.9469)],
        cs: [Some(0.9336), Some(0.928), Some(0.9345)],
    },
    GoldenRow {
        a_um: 1.2,
        he: [Some(0.9244), Some(0.9249), Some(0.9154), Some(0.9261)],
        na: [Some(0.9509), Some(0.9492), Some(0.9522)],
        cs: [Some(0.9402), Some(0.9359), Some(0.9414)],
    },
    GoldenRow {
        a_um: 1.3,
        he: [Some(0.9312), Some(0.9318), Some(0.9246), Some(0.9337)],
        na: [Some(0.9547), Some(0.9533), Some(0.9565)],
        cs: [Some(0.9453), Some(0.942), Some(0.9471)],
    },
    GoldenRow {
        a_um: 1.4,
        he: [Some(0.9371), Some(0.9374), Some(0.9317), Some(0.94)],
        na: [Some(0.9576), Some(0.9565), None],
        cs: [Some(0.9494), Some(0.9468), Some(0.952)],
    },
    GoldenRow {
        a_um: 1.5,
        he: [Some(0.9416), Some(0.9418), Some(0.9373), Some(0.9454)],
        na: [Some(0.9598), Some(0.9589), None],
        cs: [Some(0.9525), Some(0.9504), Some(0.956)],
    },
    GoldenRow {
        a_um: 2.0,
        he: [Some(0.9515), Some(0.9516), Some(0.9498), None],
        na: [Some(0.9623), Some(0.962), None],
        cs: [Some(0.958), Some(0.9572), None],
    },
    GoldenRow {
        a_um: 2.5,
        he: [Some(0.9505), Some(0.9506), Some(0.9498), None],
        na: [Some(0.9577), Some(0.9575), None],
        cs: [Some(0.9549), Some(0.9545), None],
    },
    GoldenRow {
        a_um: 3.0,
        he: [Some(0.9507), Some(0.9507), Some(0.9503), None],
        na: [Some(0.9556), Some(0.9555), None],
        cs: [Some(0.9537), Some(0.9534), None],
    },
    GoldenRow {
        a_um: 3.5,
        he: [Some(0.962), Some(0.962), Some(0.9617), None],
        na: [Some(0.9653), Some(0.9652), None],
        cs: [Some(0.964), Some(0.9639), None],
    },
    GoldenRow {
        a_um: 4.0,
        he: [Some(0.9902), Some(0.9902), Some(0.99), None],
        na: [Some(0.9925), Some(0.9924), None],
        cs: [Some(0.9916), Some(0.9915), None],
    },
    GoldenRow {
        a_um: 4.5,
        he: [Some(1.037), Some(1.037), Some(1.037), None],
        na: [Some(1.038), Some(1.038), None],
        cs: [Some(1.038), Some(1.038), None],
    },
    GoldenRow {
        a_um: 5.0,
        he: [Some(1.1), Some(1.1), Some(1.1), None],
        na: [Some(1.101), Some(1.101), None],
        cs: [Some(1.1), Some(1.1), None],
    },
    GoldenRow {
        a_um: 6.0,
        he: [Some(1.261), Some(1.261), Some(1.261), None],
        na: [Some(1.262), Some(1.262), None],
        cs: [Some(1.262), Some(1.262), None],
    },
    GoldenRow {
        a_um: 7.0,
        he: [Some(1.45), Some(1.45), Some(1.45), None],
        na: [Some(1.45), Some(1.45), None],
        cs: [Some(1.45), Some(1.45), None],
    },
    GoldenRow {
        a_um: 8.0,
        he: [Some(1.649), Some(1.649), Some(1.649), None],
        na: [Some(1.649), Some(1.649), None],
        cs: [Some(1.649), Some(1.649), None],
    },
];

/// Table by number (1 or 2).
pub fn table(n: u8) -> Option<&'static [GoldenRow]> {
    match n {
        1 => Some(TABLE_I),
        2 => Some(TABLE_II),
        _ => None,
    }
}

/// Atoms in column order.
pub const ATOMS: [&str; 3] = ["he-star", "na", "cs"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(TABLE_I.len(), 25);
        assert_eq!(TABLE_II.len(), 25);
        assert_eq!(TABLE_I[0].a_um, 0.15);
        assert_eq!(TABLE_II[24].a_um, 8.0);
        assert!(TABLE_I.iter().all(|r| r.he[1].is_some()));
        assert_eq!(table(3), None);
    }
}
