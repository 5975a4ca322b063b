//! Rotations of ℝ³ in the quaternion and Bloch-sphere conventions.
//!
//! For an angle `θ` and unit axis `n̂`:
//!
//! * `g_Q(θ, n̂) = cos θ/2 + sin θ/2 (n₁ i + n₂ j + n₃ k)` rotates by
//!   conjugation, `R(θ, n̂, p) = g_Q p g_Q*`, or equivalently by left
//!   multiplication on any `QuatHopf` preimage of `p`.
//! * `g_B(θ, n̂) = [[cos θ/2 − i n₃ sin θ/2, sin θ/2 (−n₂ − i n₁)], …]`
//!   rotates by acting on any `Bloch` preimage of `p`.
//!
//! The two matrices are related by `g_B(θ, n̂) = g_Q(−θ, reverse(n̂))`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hopf::{bloch, conjugate_unchecked, quat_hopf, reverse};
use crate::point::Point3;
use crate::quat::{ComplexPair, Quaternion};
use crate::su2::Su2Matrix;

/// A unit vector of ℝ³, checked at construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitVector3(Point3);

impl UnitVector3 {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::from_point(Point3::new(x, y, z))
    }

    pub fn from_point(p: Point3) -> Result<Self> {
        p.require_unit().map(UnitVector3)
    }

    pub fn get(self) -> Point3 {
        self.0
    }
}

/// Rotation by `theta` radians about `axis`, right-handed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisAngle {
    pub theta: f64,
    pub axis: UnitVector3,
}

impl AxisAngle {
    pub fn new(theta: f64, axis: Point3) -> Result<Self> {
        Ok(Self { theta, axis: UnitVector3::from_point(axis)? })
    }

    /// Recovers `(θ, n̂)` with `θ ∈ [0, 2π]` from a unit quaternion, so that
    /// `gq(from_quaternion(q)) = q`. The identity yields the axis `(1, 0, 0)`.
    pub fn from_quaternion(q: Quaternion) -> Result<Self> {
        let q = q.require_unit()?;
        let v = q.vector();
        let s = v.norm();
        if s == 0.0 {
            let theta = if q.x0 < 0.0 { 2.0 * PI } else { 0.0 };
            return Ok(Self { theta, axis: UnitVector3(Point3::X) });
        }
        Ok(Self { theta: 2.0 * s.atan2(q.x0), axis: UnitVector3(v * (1.0 / s)) })
    }

    pub fn axis(&self) -> Point3 {
        self.axis.0
    }
}

/// The quaternion-convention matrix `g_Q(θ, n̂)`, as a unit quaternion.
pub fn gq(aa: &AxisAngle) -> Quaternion {
    let (s, c) = (aa.theta / 2.0).sin_cos();
    let n = aa.axis();
    Quaternion::new(c, s * n.x, s * n.y, s * n.z)
}

/// The Bloch-convention matrix `g_B(θ, n̂)`.
pub fn gb(aa: &AxisAngle) -> Su2Matrix {
    let (s, c) = (aa.theta / 2.0).sin_cos();
    let n = aa.axis();
    Su2Matrix::from_parts_unchecked(Complex64::new(c, -n.z * s), Complex64::new(-n.y * s, -n.x * s))
}

/// `R(θ, n̂, p) = g_Q p g_Q*`.
pub fn rotate(aa: &AxisAngle, p: Point3) -> Point3 {
    conjugate_unchecked(gq(aa), p)
}

/// `QuatHopf(g_Q h_Q)` for a preimage `h_Q` of the point to rotate.
pub fn rotate_via_quat_hopf(aa: &AxisAngle, hq: Quaternion) -> Result<Point3> {
    let hq = hq.require_unit()?;
    quat_hopf(gq(aa) * hq)
}

/// `Bloch(g_B ⊙ h_B)` for a preimage `h_B` of the point to rotate.
pub fn rotate_via_bloch(aa: &AxisAngle, hb: ComplexPair) -> Result<Point3> {
    let hb = hb.require_nonzero()?;
    bloch(gb(aa).act_on_vector(hb))
}

/// `(cos θ/2, e^{iφ} sin θ/2)` for the spherical coordinates `(θ, φ)` of `p`.
/// At the poles `φ = 0`.
pub fn lift_bloch(p: Point3) -> Result<ComplexPair> {
    let p = p.require_unit()?;
    let rho = p.x.hypot(p.y);
    let polar = rho.atan2(p.z);
    let azimuth = if rho == 0.0 { 0.0 } else { p.y.atan2(p.x) };
    let (s, c) = (polar / 2.0).sin_cos();
    Ok(ComplexPair::new(Complex64::new(c, 0.0), Complex64::from_polar(s, azimuth)))
}

/// A unit quaternion `h` with `h i h* = p`: the rotation carrying `i` to `p`
/// about `i × p`. Returns `1` at `p = i` and `j` at `p = −i`.
pub fn lift_quat_hopf(p: Point3) -> Result<Quaternion> {
    let p = p.require_unit()?;
    let cross = Point3::X.cross(p);
    let sin = cross.norm();
    if sin <= 1e-300 {
        return Ok(if p.x > 0.0 { Quaternion::ONE } else { Quaternion::J });
    }
    let angle = sin.atan2(p.x);
    Ok(gq(&AxisAngle { theta: angle, axis: UnitVector3(cross * (1.0 / sin)) }))
}

/// The right-hand side of `g ⊙ h = h̃ gᵀ`, computed with quaternion
/// multiplication and read back as a vector of `ℂ²`.
pub fn matvec_as_quat(g: &Su2Matrix, h: ComplexPair) -> ComplexPair {
    (Quaternion::from_complex_pair(h) * g.to_quaternion().transpose()).to_complex_pair()
}

/// Both matrix forms of one rotation: `(g_Q(θ, n̂), g_B(θ, n̂))`.
pub fn convert_convention(aa: &AxisAngle) -> (Quaternion, Su2Matrix) {
    (gq(aa), gb(aa))
}

/// Evaluates `QuatHopf(g_Q h_Q)` and `Bloch(g_B ⊙ h_B)` for
/// `h_Q = lift_quat_hopf(p) e^{i fiber_q}` and `h_B = fiber_b lift_bloch(p)`.
/// Both equal `R(θ, n̂, p)`.
pub fn reconcile(aa: &AxisAngle, p: Point3, fiber_q: f64, fiber_b: Complex64) -> Result<(Point3, Point3)> {
    if fiber_b.norm() == 0.0 {
        return Err(Error::ZeroVector);
    }
    let hq = lift_quat_hopf(p)? * Quaternion::exp_i(fiber_q);
    let hb = lift_bloch(p)?.scale(fiber_b);
    let quat_side = quat_hopf(gq(aa) * hq)?;
    let bloch_side = bloch(gb(aa).act_on_vector(hb))?;
    Ok((quat_side, bloch_side))
}

/// The quaternion whose conjugation action equals the rotation `g_B` effects
/// through `Bloch`: `g_B` read as `g_Q(−θ, reverse(n̂))`.
pub fn gb_as_quat_rotation(aa: &AxisAngle) -> Result<Quaternion> {
    let flipped = AxisAngle::new(-aa.theta, reverse(aa.axis()))?;
    Ok(gq(&flipped))
}
