//! Quaternion arithmetic and the identifications `ℍ = ℝ⁴ = ℂ²`.
//!
//! A quaternion `x0 + x1 i + x2 j + x3 k` is stored scalar-first. Viewed as
//! a vector of `ℂ²` it is `(x0 + i x1, x2 + i x3)`, i.e. `z + w j` with
//! `{1, j}` as complex basis. Unit and pure quaternions are not separate
//! types; [`Quaternion::require_unit`] and [`Quaternion::pure_part`] check
//! those refinements.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::point::Point3;
use crate::EPS_NORM;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub x0: f64,
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

/// A vector `(z, w)` of `ℂ²`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexPair {
    pub z: Complex64,
    pub w: Complex64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    #[inline]
    pub const fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        Self { x0, x1, x2, x3 }
    }

    #[inline]
    pub fn to_array(self) -> [f64; 4] {
        [self.x0, self.x1, self.x2, self.x3]
    }

    /// `cos θ + i sin θ`, the unit complex number `e^{iθ}` inside `ℍ`.
    pub fn exp_i(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self::new(c, s, 0.0, 0.0)
    }

    #[inline]
    pub fn conjugate(self) -> Self {
        Self::new(self.x0, -self.x1, -self.x2, -self.x3)
    }

    #[inline]
    pub fn norm_squared(self) -> f64 {
        self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    /// Transpose: the quaternion of the transposed `SU(2)` matrix,
    /// `(a, b, c, d) ↦ (a, b, −c, d)`.
    ///
    /// An involution and an anti-automorphism: `(pq)ᵀ = qᵀ pᵀ`.
    #[inline]
    pub fn transpose(self) -> Self {
        Self::new(self.x0, self.x1, -self.x2, self.x3)
    }

    /// The vector part `(x1, x2, x3)`, with no check on the scalar part.
    #[inline]
    pub fn vector(self) -> Point3 {
        Point3::new(self.x1, self.x2, self.x3)
    }

    /// Embeds `p = (x, y, z)` as the pure quaternion `x i + y j + z k`.
    #[inline]
    pub fn pure(p: Point3) -> Self {
        Self::new(0.0, p.x, p.y, p.z)
    }

    /// Inverse of [`Quaternion::pure`]; fails if the scalar part exceeds
    /// [`EPS_NORM`].
    pub fn pure_part(self) -> Result<Point3> {
        if self.x0.abs() > EPS_NORM {
            return Err(Error::NotPure { scalar: self.x0 });
        }
        Ok(self.vector())
    }

    pub fn require_unit(self) -> Result<Self> {
        let sq = self.norm_squared();
        if (sq - 1.0).abs() <= EPS_NORM {
            Ok(self)
        } else {
            Err(Error::NotUnit { norm: sq.sqrt() })
        }
    }

    #[inline]
    pub fn to_complex_pair(self) -> ComplexPair {
        ComplexPair::new(Complex64::new(self.x0, self.x1), Complex64::new(self.x2, self.x3))
    }

    #[inline]
    pub fn from_complex_pair(v: ComplexPair) -> Self {
        Self::new(v.z.re, v.z.im, v.w.re, v.w.im)
    }

    pub fn distance(self, other: Quaternion) -> f64 {
        (self - other).norm()
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;

    /// Hamilton product: `i² = j² = k² = −1`, `ij = k`, `jk = i`, `ki = j`.
    #[inline]
    fn mul(self, b: Quaternion) -> Quaternion {
        let a = self;
        Quaternion::new(
            a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
            a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
            a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
            a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, s: f64) -> Quaternion {
        Quaternion::new(self.x0 * s, self.x1 * s, self.x2 * s, self.x3 * s)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, b: Quaternion) -> Quaternion {
        Quaternion::new(self.x0 + b.x0, self.x1 + b.x1, self.x2 + b.x2, self.x3 + b.x3)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, b: Quaternion) -> Quaternion {
        Quaternion::new(self.x0 - b.x0, self.x1 - b.x1, self.x2 - b.x2, self.x3 - b.x3)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.x0, -self.x1, -self.x2, -self.x3)
    }
}

impl ComplexPair {
    #[inline]
    pub const fn new(z: Complex64, w: Complex64) -> Self {
        Self { z, w }
    }

    pub fn from_parts(z_re: f64, z_im: f64, w_re: f64, w_im: f64) -> Self {
        Self::new(Complex64::new(z_re, z_im), Complex64::new(w_re, w_im))
    }

    #[inline]
    pub fn norm_squared(self) -> f64 {
        self.z.norm_sqr() + self.w.norm_sqr()
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn scale(self, lambda: Complex64) -> Self {
        Self::new(lambda * self.z, lambda * self.w)
    }

    pub fn distance(self, other: ComplexPair) -> f64 {
        ((self.z - other.z).norm_sqr() + (self.w - other.w).norm_sqr()).sqrt()
    }

    /// The transpose map `T(z, w) = (z, −w̄)`, i.e. [`Quaternion::transpose`]
    /// read through the `ℂ²` identification.
    #[inline]
    pub fn transpose_map(self) -> Self {
        Self::new(self.z, -self.w.conj())
    }

    pub fn require_unit(self) -> Result<Self> {
        let sq = self.norm_squared();
        if (sq - 1.0).abs() <= EPS_NORM {
            Ok(self)
        } else {
            Err(Error::NotUnit { norm: sq.sqrt() })
        }
    }

    /// The nonzero refinement used by projection: both coordinates with
    /// magnitude at most [`EPS_NORM`] count as the zero vector.
    pub fn require_nonzero(self) -> Result<Self> {
        if self.z.norm() <= EPS_NORM && self.w.norm() <= EPS_NORM {
            Err(Error::ZeroVector)
        } else {
            Ok(self)
        }
    }
}
