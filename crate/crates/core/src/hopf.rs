//! The three Hopf maps `S³ → S²` and their fibers.
//!
//! | variant   | map                                   |
//! |-----------|---------------------------------------|
//! | `Classic` | `(z, w) ↦ stereo₃⁻¹(z/w)`             |
//! | `Quat`    | `g ↦ g i g*`                          |
//! | `Bloch`   | `(a, b) ↦ stereo₃⁻¹(conj(a/b))`       |
//!
//! Each fiber is a circle: `Quat` fibers are orbits of right multiplication
//! by `e^{iθ}`, `Classic` and `Bloch` fibers are orbits of complex scalar
//! multiplication.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::point::Point3;
use crate::quat::{ComplexPair, Quaternion};
use crate::riemann::{stereo3_inv, ExtendedComplex};
use crate::rotation::{lift_bloch, lift_quat_hopf};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HopfVariant {
    Classic,
    Quat,
    Bloch,
}

impl HopfVariant {
    pub const ALL: [HopfVariant; 3] = [HopfVariant::Classic, HopfVariant::Quat, HopfVariant::Bloch];

    pub fn as_str(self) -> &'static str {
        match self {
            HopfVariant::Classic => "classic",
            HopfVariant::Quat => "quat",
            HopfVariant::Bloch => "bloch",
        }
    }

    /// Applies the variant's map to a point of `S³` given in `ℂ²` form.
    pub fn apply(self, v: ComplexPair) -> Result<Point3> {
        match self {
            HopfVariant::Classic => hopf_classic(v),
            HopfVariant::Quat => quat_hopf(Quaternion::from_complex_pair(v)),
            HopfVariant::Bloch => bloch(v.require_unit()?),
        }
    }

    /// A deterministic preimage of `base`, as a point of `S³` in `ℂ²` form.
    pub fn lift(self, base: Point3) -> Result<ComplexPair> {
        match self {
            HopfVariant::Classic => lift_classic(base),
            HopfVariant::Quat => lift_quat_hopf(base).map(Quaternion::to_complex_pair),
            HopfVariant::Bloch => lift_bloch(base),
        }
    }
}

impl fmt::Display for HopfVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for HopfVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classic" => Ok(HopfVariant::Classic),
            "quat" => Ok(HopfVariant::Quat),
            "bloch" => Ok(HopfVariant::Bloch),
            other => Err(Error::InvalidArgument(format!("unknown Hopf variant `{other}`"))),
        }
    }
}

/// `p ↦ g p g*` for a unit quaternion `g`.
///
/// The scalar part of `g p g*` vanishes identically and is dropped.
pub fn conjugate_action(g: Quaternion, p: Point3) -> Result<Point3> {
    let g = g.require_unit()?;
    Ok(conjugate_unchecked(g, p))
}

pub(crate) fn conjugate_unchecked(g: Quaternion, p: Point3) -> Point3 {
    (g * Quaternion::pure(p) * g.conjugate()).vector()
}

/// `g ↦ g i g*`.
pub fn quat_hopf(g: Quaternion) -> Result<Point3> {
    conjugate_action(g, Point3::X)
}

/// `(a, b) ↦ stereo₃⁻¹(conj(a/b))`, with `a/b = ∞` when `b = 0`.
///
/// Defined on all of `ℂ² ∖ {0}` and constant on complex lines.
pub fn bloch(v: ComplexPair) -> Result<Point3> {
    let v = v.require_nonzero()?;
    Ok(stereo3_inv(ratio(v).conj()))
}

/// `(z, w) ↦ stereo₃⁻¹(z/w)` on `S³`, in closed form
/// `(2 Re(z w̄), 2 Im(z w̄), |z|² − |w|²)`.
pub fn hopf_classic(v: ComplexPair) -> Result<Point3> {
    let ComplexPair { z, w } = v.require_unit()?;
    let zw = z * w.conj();
    Ok(Point3::new(2.0 * zw.re, 2.0 * zw.im, z.norm_sqr() - w.norm_sqr()))
}

/// `(x, y, z) ↦ (z, y, x)`.
#[inline]
pub fn reverse(p: Point3) -> Point3 {
    Point3::new(p.z, p.y, p.x)
}

/// `count` points evenly spaced in the fiber parameter over the fiber of
/// `base`, starting from the variant's canonical lift.
pub fn fiber_sample(variant: HopfVariant, base: Point3, count: usize) -> Result<Vec<ComplexPair>> {
    if count == 0 {
        return Err(Error::InvalidArgument("fiber sample count must be at least 1".into()));
    }
    let base = base.require_unit()?;
    let lift = variant.lift(base)?;
    let points = (0..count)
        .map(|k| {
            let theta = TAU * k as f64 / count as f64;
            match variant {
                HopfVariant::Quat => (Quaternion::from_complex_pair(lift) * Quaternion::exp_i(theta)).to_complex_pair(),
                HopfVariant::Classic | HopfVariant::Bloch => lift.scale(Complex64::from_polar(1.0, theta)),
            }
        })
        .collect();
    Ok(points)
}

/// Canonical preimage under `hopf_classic`: `(cos θ/2, e^{−iφ} sin θ/2)` for
/// spherical coordinates `(θ, φ)` of `p`.
fn lift_classic(p: Point3) -> Result<ComplexPair> {
    let bloch_lift = lift_bloch(p)?;
    Ok(ComplexPair::new(bloch_lift.z, bloch_lift.w.conj()))
}

fn ratio(v: ComplexPair) -> ExtendedComplex {
    if v.w.re == 0.0 && v.w.im == 0.0 {
        ExtendedComplex::Infinity
    } else {
        ExtendedComplex::from_complex(v.z / v.w)
    }
}
