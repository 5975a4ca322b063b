//! Hopf fibrations and unitary-matrix rotation conventions.
//!
//! The crate realizes three versions of the Hopf map `S³ → S²`
//! ([`hopf::hopf_classic`], [`hopf::quat_hopf`], [`hopf::bloch`]) on top of
//! quaternion arithmetic, the complex projective line and stereographic
//! projection, and uses them to reconcile the two common ways of writing a
//! rotation of 3-space as a 2×2 unitary matrix:
//!
//! * the quaternion convention `g_Q(θ, n̂)`, acting by `p ↦ g_Q p g_Q*`;
//! * the Bloch-sphere convention `g_B(θ, n̂)`, acting by matrix-vector
//!   multiplication on a lift of `p`.
//!
//! [`harness`] runs seeded, randomized checks of every identity relating
//! these maps, and [`cli`] exposes everything as the `hopfrot` tool.

pub mod cli;
pub mod error;
pub mod harness;
pub mod hopf;
pub mod io;
pub mod point;
pub mod quat;
pub mod riemann;
pub mod rotation;
pub mod su2;

pub use num_complex::Complex64;

pub use error::{Error, Result};
pub use harness::{CheckName, CheckReport, DiagramCheck};
pub use hopf::HopfVariant;
pub use point::Point3;
pub use quat::{ComplexPair, Quaternion};
pub use riemann::{ExtendedComplex, ProjectivePoint};
pub use rotation::{AxisAngle, UnitVector3};
pub use su2::Su2Matrix;

/// Tolerance for the unit-norm and pure-quaternion refinements.
pub const EPS_NORM: f64 = 1e-9;

/// Relative tolerance for equality of points of the projective line.
pub const EPS_PROJ: f64 = 1e-9;
