//! JSON forms of the domain types.
//!
//! | type             | JSON                                   |
//! |------------------|----------------------------------------|
//! | complex          | `[re, im]`                             |
//! | quaternion       | `[x0, x1, x2, x3]`                     |
//! | point            | `[x, y, z]`                            |
//! | complex pair     | `{"z": [re, im], "w": [re, im]}`       |
//! | extended complex | `[re, im]` or `"inf"`                  |
//! | axis-angle       | `{"theta": radians, "axis": [x, y, z]}`|
//!
//! Numbers are written as the shortest decimal that parses back to the same
//! `f64`. Objects with unknown fields are rejected.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::point::Point3;
use crate::quat::{ComplexPair, Quaternion};
use crate::riemann::ExtendedComplex;
use crate::su2::Su2Matrix;

pub type ComplexJson = [f64; 2];
pub type QuaternionJson = [f64; 4];
pub type PointJson = [f64; 3];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairJson {
    pub z: ComplexJson,
    pub w: ComplexJson,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxisAngleJson {
    pub theta: f64,
    pub axis: PointJson,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExtendedJson {
    Finite(ComplexJson),
    Infinity(InfinityTag),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum InfinityTag {
    #[serde(rename = "inf")]
    Inf,
}

/// A 2×2 complex matrix, row-major.
pub type MatrixJson = [[ComplexJson; 2]; 2];

pub fn complex(c: Complex64) -> ComplexJson {
    [c.re, c.im]
}

pub fn to_complex(c: ComplexJson) -> Complex64 {
    Complex64::new(c[0], c[1])
}

pub fn quaternion(q: Quaternion) -> QuaternionJson {
    q.to_array()
}

pub fn to_quaternion(q: QuaternionJson) -> Quaternion {
    Quaternion::new(q[0], q[1], q[2], q[3])
}

pub fn point(p: Point3) -> PointJson {
    p.to_array()
}

pub fn to_point(p: PointJson) -> Point3 {
    Point3::from(p)
}

pub fn pair(v: ComplexPair) -> PairJson {
    PairJson { z: complex(v.z), w: complex(v.w) }
}

pub fn to_pair(v: PairJson) -> ComplexPair {
    ComplexPair::new(to_complex(v.z), to_complex(v.w))
}

pub fn extended(u: ExtendedComplex) -> ExtendedJson {
    match u {
        ExtendedComplex::Finite(c) => ExtendedJson::Finite(complex(c)),
        ExtendedComplex::Infinity => ExtendedJson::Infinity(InfinityTag::Inf),
    }
}

pub fn to_extended(u: ExtendedJson) -> ExtendedComplex {
    match u {
        ExtendedJson::Finite(c) => ExtendedComplex::from_complex(to_complex(c)),
        ExtendedJson::Infinity(_) => ExtendedComplex::Infinity,
    }
}

pub fn matrix(m: &Su2Matrix) -> MatrixJson {
    m.entries().map(|row| row.map(complex))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        let v = ComplexPair::from_parts(1.0, -0.5, 0.25, 2.0);
        assert_eq!(serde_json::to_string(&pair(v)).unwrap(), r#"{"z":[1.0,-0.5],"w":[0.25,2.0]}"#);
        assert_eq!(serde_json::to_string(&extended(ExtendedComplex::Infinity)).unwrap(), r#""inf""#);
        assert_eq!(serde_json::to_string(&extended(ExtendedComplex::finite(0.1, 3.0))).unwrap(), "[0.1,3.0]");
    }

    #[test]
    fn parsing() {
        let v: PairJson = serde_json::from_str(r#"{"z": [1, 0], "w": [0, 1]}"#).unwrap();
        assert_eq!(to_pair(v), ComplexPair::from_parts(1.0, 0.0, 0.0, 1.0));
        assert!(serde_json::from_str::<PairJson>(r#"{"z": [1, 0], "w": [0, 1], "x": 1}"#).is_err());
        assert!(serde_json::from_str::<AxisAngleJson>(r#"{"theta": 1, "axis": [0, 0, 1], "unit": "deg"}"#).is_err());
        let inf: ExtendedJson = serde_json::from_str(r#""inf""#).unwrap();
        assert_eq!(to_extended(inf), ExtendedComplex::Infinity);
        assert!(serde_json::from_str::<ExtendedJson>(r#""nan""#).is_err());
    }

    #[test]
    fn shortest_round_trip_numbers() {
        let x: f64 = 0.1 + 0.2;
        let text = serde_json::to_string(&[x]).unwrap();
        assert_eq!(text, "[0.30000000000000004]");
        let back: [f64; 1] = serde_json::from_str(&text).unwrap();
        assert_eq!(back[0].to_bits(), x.to_bits());
    }
}
