//! `SU(2)` in the form `[[z, w], [−w̄, z̄]]` and its actions on `ℂ²` and `ℙ¹`.

use num_complex::Complex64;

use crate::error::Result;
use crate::quat::{ComplexPair, Quaternion};
use crate::riemann::{project, ProjectivePoint};

/// The matrix `[[z, w], [−w̄, z̄]]`; only `(z, w)` is stored.
///
/// [`Su2Matrix::new`] checks `|z|² + |w|² = 1`. Products are not
/// renormalized, so a matrix obtained from [`Su2Matrix::multiply`] carries
/// whatever rounding drift the product introduced.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Su2Matrix {
    z: Complex64,
    w: Complex64,
}

impl Su2Matrix {
    pub fn new(z: Complex64, w: Complex64) -> Result<Self> {
        ComplexPair::new(z, w).require_unit()?;
        Ok(Self { z, w })
    }

    pub(crate) fn from_parts_unchecked(z: Complex64, w: Complex64) -> Self {
        Self { z, w }
    }

    pub fn identity() -> Self {
        Self { z: Complex64::new(1.0, 0.0), w: Complex64::new(0.0, 0.0) }
    }

    /// `diag(e^{iθ}, e^{−iθ})`, the isotropy subgroup of `[1, 0]`.
    pub fn torus(theta: f64) -> Self {
        Self { z: Complex64::from_polar(1.0, theta), w: Complex64::new(0.0, 0.0) }
    }

    /// `x0 + x1 i + x2 j + x3 k ↦ z = x0 + i x1, w = x2 + i x3`.
    pub fn from_quaternion(q: Quaternion) -> Result<Self> {
        let q = q.require_unit()?;
        let v = q.to_complex_pair();
        Ok(Self { z: v.z, w: v.w })
    }

    pub fn to_quaternion(self) -> Quaternion {
        Quaternion::from_complex_pair(ComplexPair::new(self.z, self.w))
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }

    pub fn w(&self) -> Complex64 {
        self.w
    }

    /// Row-major entries `[[z, w], [−w̄, z̄]]`.
    pub fn entries(&self) -> [[Complex64; 2]; 2] {
        [[self.z, self.w], [-self.w.conj(), self.z.conj()]]
    }

    pub fn multiply(self, other: Su2Matrix) -> Su2Matrix {
        let (a, b) = (self, other);
        // First row of the 2×2 product; the second row follows from the form.
        Su2Matrix { z: a.z * b.z - a.w * b.w.conj(), w: a.z * b.w + a.w * b.z.conj() }
    }

    /// Matrix-vector product `g ⊙ v`.
    pub fn act_on_vector(&self, v: ComplexPair) -> ComplexPair {
        ComplexPair::new(self.z * v.z + self.w * v.w, -self.w.conj() * v.z + self.z.conj() * v.w)
    }

    /// `g(1, 0) = (z, −w̄)`, the identification of `SU(2)` with `S³` by
    /// acting on the basepoint.
    pub fn act_on_sphere_point(&self) -> ComplexPair {
        self.act_on_vector(ComplexPair::from_parts(1.0, 0.0, 0.0, 0.0))
    }

    pub fn act_on_proj(&self, p: &ProjectivePoint) -> Result<ProjectivePoint> {
        project(self.act_on_vector(p.rep()))
    }

    /// Entrywise distance to `other` as a vector of `ℂ²`.
    pub fn distance(&self, other: &Su2Matrix) -> f64 {
        ComplexPair::new(self.z, self.w).distance(ComplexPair::new(other.z, other.w))
    }
}
