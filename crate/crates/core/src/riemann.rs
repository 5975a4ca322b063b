//! The complex projective line `ℙ¹`, the extended plane `ℂ⁺ = ℂ ∪ {∞}`,
//! the chart `[z₀, z₁] ↦ z₀/z₁`, and stereographic projection.
//!
//! Two projections are provided: [`stereo1`] from the pole `(1, 0, 0)`
//! (coordinates `(y, z)`) and [`stereo3`] from the pole `(0, 0, 1)`
//! (coordinates `(x, y)`). Both share one implementation that only sees the
//! pole coordinate and the two in-plane coordinates.

use num_complex::Complex64;

use crate::error::Result;
use crate::point::Point3;
use crate::quat::ComplexPair;
use crate::{EPS_NORM, EPS_PROJ};

/// A point of `ℂ⁺`. `Finite` values never hold NaN or infinite parts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedComplex {
    Finite(Complex64),
    Infinity,
}

impl ExtendedComplex {
    /// Wraps `c`, sending values that overflowed to the point at infinity.
    pub fn from_complex(c: Complex64) -> Self {
        if c.re.is_finite() && c.im.is_finite() {
            ExtendedComplex::Finite(c)
        } else {
            ExtendedComplex::Infinity
        }
    }

    pub fn finite(re: f64, im: f64) -> Self {
        Self::from_complex(Complex64::new(re, im))
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, ExtendedComplex::Infinity)
    }

    /// Complex conjugation; `∞` is fixed.
    pub fn conj(self) -> Self {
        match self {
            ExtendedComplex::Finite(c) => ExtendedComplex::Finite(c.conj()),
            ExtendedComplex::Infinity => ExtendedComplex::Infinity,
        }
    }

    /// Multiplication by `i`; `∞` is fixed.
    pub fn mul_i(self) -> Self {
        match self {
            ExtendedComplex::Finite(c) => ExtendedComplex::Finite(Complex64::new(-c.im, c.re)),
            ExtendedComplex::Infinity => ExtendedComplex::Infinity,
        }
    }
}

/// A point `[z₀, z₁]` of `ℙ¹`.
///
/// The stored representative is canonical: unit norm, with `z₁` real and
/// positive when `|z₁| > EPS_NORM`, otherwise `z₀` real and positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectivePoint {
    rep: ComplexPair,
}

impl ProjectivePoint {
    /// `[1, 0]`, the point fixed by the diagonal torus of `SU(2)`.
    pub fn basepoint() -> Self {
        Self { rep: ComplexPair::from_parts(1.0, 0.0, 0.0, 0.0) }
    }

    pub fn rep(&self) -> ComplexPair {
        self.rep
    }

    /// Equality of classes: `|z w′ − w z′| ≤ EPS_PROJ · max(1, |v||v′|)`.
    pub fn proj_eq(&self, other: &ProjectivePoint) -> bool {
        self.cross_term(other) <= EPS_PROJ * (self.rep.norm() * other.rep.norm()).max(1.0)
    }

    /// `|z w′ − w z′|` on the canonical representatives: the sine of the
    /// angle between the two complex lines.
    pub fn cross_term(&self, other: &ProjectivePoint) -> f64 {
        let (a, b) = (self.rep, other.rep);
        (a.z * b.w - a.w * b.z).norm()
    }
}

/// The canonical projection `ℂ² ∖ {0} → ℙ¹`.
pub fn project(v: ComplexPair) -> Result<ProjectivePoint> {
    let v = v.require_nonzero()?;
    // Rescale first so the norm cannot overflow or underflow.
    let m = v.z.re.abs().max(v.z.im.abs()).max(v.w.re.abs()).max(v.w.im.abs());
    let v = ComplexPair::new(v.z / m, v.w / m);
    let unit = ComplexPair::new(v.z / v.norm(), v.w / v.norm());
    let anchor = if unit.w.norm() > EPS_NORM { unit.w } else { unit.z };
    let phase = anchor.conj() / anchor.norm();
    Ok(ProjectivePoint { rep: unit.scale(phase) })
}

/// The chart `[z₀, z₁] ↦ z₀/z₁`, with `[z₀, 0] ↦ ∞`.
pub fn chart(p: &ProjectivePoint) -> ExtendedComplex {
    let ComplexPair { z, w } = p.rep;
    if w.re == 0.0 && w.im == 0.0 {
        ExtendedComplex::Infinity
    } else {
        ExtendedComplex::from_complex(z / w)
    }
}

/// Stereographic projection from the pole `(1, 0, 0)`:
/// `(x, y, z) ↦ y/(1−x) + i z/(1−x)`.
pub fn stereo1(p: Point3) -> ExtendedComplex {
    stereo_from_pole(p.x, p.y, p.z)
}

/// Stereographic projection from the pole `(0, 0, 1)`:
/// `(x, y, z) ↦ x/(1−z) + i y/(1−z)`.
pub fn stereo3(p: Point3) -> ExtendedComplex {
    stereo_from_pole(p.z, p.x, p.y)
}

pub fn stereo1_inv(u: ExtendedComplex) -> Point3 {
    let (h, a, b) = stereo_inv_to_pole(u);
    Point3::new(h, a, b)
}

pub fn stereo3_inv(u: ExtendedComplex) -> Point3 {
    let (h, a, b) = stereo_inv_to_pole(u);
    Point3::new(a, b, h)
}

// On the sphere a² + b² = (1 − h)(1 + h), so on the upper hemisphere
// (a + ib)/(1 − h) equals (1 + h)(a + ib)/(a² + b²), which avoids dividing
// by the cancellation-prone 1 − h.
fn stereo_from_pole(h: f64, a: f64, b: f64) -> ExtendedComplex {
    if 1.0 - h < 1e-300 {
        return ExtendedComplex::Infinity;
    }
    if h <= 0.0 {
        let d = 1.0 - h;
        return ExtendedComplex::finite(a / d, b / d);
    }
    let r2 = a * a + b * b;
    if r2 == 0.0 {
        return ExtendedComplex::Infinity;
    }
    let s = (1.0 + h) / r2;
    ExtendedComplex::finite(a * s, b * s)
}

// Returns (pole coordinate, first plane coordinate, second plane coordinate).
fn stereo_inv_to_pole(u: ExtendedComplex) -> (f64, f64, f64) {
    let u = match u {
        ExtendedComplex::Infinity => return (1.0, 0.0, 0.0),
        ExtendedComplex::Finite(u) => u,
    };
    let r2 = u.norm_sqr();
    if r2 <= 1.0 {
        let d = r2 + 1.0;
        return ((r2 - 1.0) / d, 2.0 * u.re / d, 2.0 * u.im / d);
    }
    // |u| > 1: work with s = 1/u, scaled so that |u|² never overflows.
    let m = u.re.abs().max(u.im.abs());
    let scaled = u / m;
    let s = scaled.conj() / (scaled.norm_sqr() * m);
    let s2 = s.norm_sqr();
    let d = 1.0 + s2;
    ((1.0 - s2) / d, 2.0 * s.re / d, -2.0 * s.im / d)
}
