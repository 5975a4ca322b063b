//! Python bindings for `hopfrot`.
//!
//! Points of S² are 3-sequences of floats, vectors of ℂ² are `(z, w)` pairs
//! of Python complex numbers, and the point at infinity of the extended
//! plane is `None`.

use hopfrot_core::{harness, hopf, riemann, rotation};
use hopfrot_core::{Complex64, ComplexPair, ExtendedComplex, HopfVariant, Point3};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

type Pair = (Complex64, Complex64);
type Triple = (f64, f64, f64);

fn err(e: hopfrot_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn point(p: [f64; 3]) -> Point3 {
    Point3::from(p)
}

fn triple(p: Point3) -> Triple {
    (p.x, p.y, p.z)
}

fn pair(v: ComplexPair) -> Pair {
    (v.z, v.w)
}

fn variant(name: &str) -> PyResult<HopfVariant> {
    name.parse().map_err(err)
}

fn extended(u: ExtendedComplex) -> Option<Complex64> {
    match u {
        ExtendedComplex::Finite(c) => Some(c),
        ExtendedComplex::Infinity => None,
    }
}

fn from_extended(u: Option<Complex64>) -> ExtendedComplex {
    u.map_or(ExtendedComplex::Infinity, ExtendedComplex::from_complex)
}

/// A quaternion `x0 + x1 i + x2 j + x3 k`.
#[pyclass(frozen, from_py_object, name = "Quaternion", module = "pyhopfrot")]
#[derive(Clone, Copy)]
struct PyQuaternion(hopfrot_core::Quaternion);

#[pymethods]
impl PyQuaternion {
    #[new]
    fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        Self(hopfrot_core::Quaternion::new(x0, x1, x2, x3))
    }

    /// The quaternion `z + w j` for a vector `(z, w)` of ℂ².
    #[staticmethod]
    fn from_pair(z: Complex64, w: Complex64) -> Self {
        Self(hopfrot_core::Quaternion::from_complex_pair(ComplexPair::new(z, w)))
    }

    #[pyo3(name = "to_pair")]
    fn as_pair(&self) -> Pair {
        pair(self.0.to_complex_pair())
    }

    #[pyo3(name = "to_list")]
    fn components(&self) -> Vec<f64> {
        self.0.to_array().to_vec()
    }

    fn conjugate(&self) -> Self {
        Self(self.0.conjugate())
    }

    fn transpose(&self) -> Self {
        Self(self.0.transpose())
    }

    fn norm(&self) -> f64 {
        self.0.norm()
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self(self.0 * other.0)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        let [a, b, c, d] = self.0.to_array();
        format!("Quaternion({a}, {b}, {c}, {d})")
    }
}

/// Rotation by `theta` radians about a unit `axis`.
#[pyclass(frozen, from_py_object, name = "AxisAngle", module = "pyhopfrot")]
#[derive(Clone, Copy)]
struct PyAxisAngle(rotation::AxisAngle);

#[pymethods]
impl PyAxisAngle {
    #[new]
    fn new(theta: f64, axis: [f64; 3]) -> PyResult<Self> {
        rotation::AxisAngle::new(theta, point(axis)).map(Self).map_err(err)
    }

    #[staticmethod]
    fn from_quaternion(q: PyQuaternion) -> PyResult<Self> {
        rotation::AxisAngle::from_quaternion(q.0).map(Self).map_err(err)
    }

    #[getter]
    fn theta(&self) -> f64 {
        self.0.theta
    }

    #[getter]
    fn axis(&self) -> Triple {
        triple(self.0.axis())
    }

    /// The quaternion-convention matrix as a unit quaternion.
    fn gq(&self) -> PyQuaternion {
        PyQuaternion(rotation::gq(&self.0))
    }

    /// First row `(z, w)` of the Bloch-convention matrix `[[z, w], [−w̄, z̄]]`.
    fn gb(&self) -> Pair {
        let m = rotation::gb(&self.0);
        (m.z(), m.w())
    }

    fn __repr__(&self) -> String {
        let n = self.0.axis();
        format!("AxisAngle({}, ({}, {}, {}))", self.0.theta, n.x, n.y, n.z)
    }
}

#[pyfunction]
fn quat_hopf(q: PyQuaternion) -> PyResult<Triple> {
    hopf::quat_hopf(q.0).map(triple).map_err(err)
}

#[pyfunction]
fn bloch(z: Complex64, w: Complex64) -> PyResult<Triple> {
    hopf::bloch(ComplexPair::new(z, w)).map(triple).map_err(err)
}

#[pyfunction]
fn hopf_classic(z: Complex64, w: Complex64) -> PyResult<Triple> {
    hopf::hopf_classic(ComplexPair::new(z, w)).map(triple).map_err(err)
}

/// Applies the named Hopf map (`"classic"`, `"quat"` or `"bloch"`) to a unit vector of ℂ².
#[pyfunction]
fn hopf_map(name: &str, z: Complex64, w: Complex64) -> PyResult<Triple> {
    variant(name)?.apply(ComplexPair::new(z, w)).map(triple).map_err(err)
}

#[pyfunction]
fn reverse(p: [f64; 3]) -> Triple {
    triple(hopf::reverse(point(p)))
}

#[pyfunction]
fn lift(name: &str, p: [f64; 3]) -> PyResult<Pair> {
    variant(name)?.lift(point(p)).map(pair).map_err(err)
}

#[pyfunction]
fn fiber_sample(name: &str, base: [f64; 3], count: usize) -> PyResult<Vec<Pair>> {
    let lifts = hopf::fiber_sample(variant(name)?, point(base), count).map_err(err)?;
    Ok(lifts.into_iter().map(pair).collect())
}

#[pyfunction]
fn stereo1(p: [f64; 3]) -> Option<Complex64> {
    extended(riemann::stereo1(point(p)))
}

#[pyfunction]
fn stereo3(p: [f64; 3]) -> Option<Complex64> {
    extended(riemann::stereo3(point(p)))
}

#[pyfunction]
fn stereo1_inv(u: Option<Complex64>) -> Triple {
    triple(riemann::stereo1_inv(from_extended(u)))
}

#[pyfunction]
fn stereo3_inv(u: Option<Complex64>) -> Triple {
    triple(riemann::stereo3_inv(from_extended(u)))
}

#[pyfunction]
fn rotate(aa: PyAxisAngle, p: [f64; 3]) -> Triple {
    triple(rotation::rotate(&aa.0, point(p)))
}

/// Rotates through the Bloch map, given any nonzero preimage `(z, w)` of the point.
#[pyfunction]
fn rotate_via_bloch(aa: PyAxisAngle, z: Complex64, w: Complex64) -> PyResult<Triple> {
    rotation::rotate_via_bloch(&aa.0, ComplexPair::new(z, w)).map(triple).map_err(err)
}

#[pyfunction]
fn rotate_via_quat_hopf(aa: PyAxisAngle, h: PyQuaternion) -> PyResult<Triple> {
    rotation::rotate_via_quat_hopf(&aa.0, h.0).map(triple).map_err(err)
}

#[pyfunction]
fn reconcile(aa: PyAxisAngle, p: [f64; 3], fiber_q: f64, fiber_b: Complex64) -> PyResult<(Triple, Triple)> {
    let (q, b) = rotation::reconcile(&aa.0, point(p), fiber_q, fiber_b).map_err(err)?;
    Ok((triple(q), triple(b)))
}

/// Runs the diagram checks and returns their reports as dictionaries.
#[pyfunction]
#[pyo3(signature = (checks=None, samples=10_000, seed=0, tolerance=1e-9))]
fn verify<'py>(
    py: Python<'py>,
    checks: Option<Vec<String>>,
    samples: u64,
    seed: u64,
    tolerance: f64,
) -> PyResult<Bound<'py, PyAny>> {
    let reports = match checks {
        None => harness::run_all(samples, seed, tolerance).map_err(err)?,
        Some(names) => {
            let checks = names
                .iter()
                .map(|n| harness::DiagramCheck::new(n, samples, seed, tolerance))
                .collect::<Result<Vec<_>, _>>()
                .map_err(err)?;
            py.detach(|| checks.iter().map(harness::run_check).collect())
        }
    };
    let text = serde_json::to_string(&reports).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

#[pymodule]
fn pyhopfrot(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyQuaternion>()?;
    m.add_class::<PyAxisAngle>()?;
    m.add_function(wrap_pyfunction!(quat_hopf, m)?)?;
    m.add_function(wrap_pyfunction!(bloch, m)?)?;
    m.add_function(wrap_pyfunction!(hopf_classic, m)?)?;
    m.add_function(wrap_pyfunction!(hopf_map, m)?)?;
    m.add_function(wrap_pyfunction!(reverse, m)?)?;
    m.add_function(wrap_pyfunction!(lift, m)?)?;
    m.add_function(wrap_pyfunction!(fiber_sample, m)?)?;
    m.add_function(wrap_pyfunction!(stereo1, m)?)?;
    m.add_function(wrap_pyfunction!(stereo3, m)?)?;
    m.add_function(wrap_pyfunction!(stereo1_inv, m)?)?;
    m.add_function(wrap_pyfunction!(stereo3_inv, m)?)?;
    m.add_function(wrap_pyfunction!(rotate, m)?)?;
    m.add_function(wrap_pyfunction!(rotate_via_bloch, m)?)?;
    m.add_function(wrap_pyfunction!(rotate_via_quat_hopf, m)?)?;
    m.add_function(wrap_pyfunction!(reconcile, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
