//! Seeded randomized checks of the commutative diagrams relating the Hopf
//! maps and the two rotation conventions.
//!
//! Every check draws its inputs from a [`Sampler`], evaluates both paths of
//! its diagram and records the Euclidean distance between the results (on
//! `S²`, or in `ℂ²` for purely algebraic identities).
//!
//! # Reproducibility
//!
//! Sample `k` of a check is drawn from ChaCha8 seeded with
//! `seed + fnv1a64(name)` (wrapping) on stream `k`. Reports therefore do not
//! depend on thread scheduling, and [`run_check`] on one name reproduces the
//! corresponding entry of [`run_all`].
//!
//! A sample whose Hopf image lands within [`POLE_MARGIN`] of the pole of a
//! stereographic projection it passes through is redrawn from the same
//! stream; the number of redraws is reported.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hopf::{bloch, hopf_classic, quat_hopf, reverse};
use crate::io;
use crate::point::Point3;
use crate::quat::{ComplexPair, Quaternion};
use crate::riemann::{chart, project, stereo1_inv, stereo3_inv, ProjectivePoint};
use crate::rotation::{gb, gq, lift_bloch, matvec_as_quat, reconcile, rotate, AxisAngle};
use crate::su2::Su2Matrix;

/// Distance on `S²` below which a sample counts as sitting on a pole.
pub const POLE_MARGIN: f64 = 1e-6;

const MAX_DRAWS: usize = 1000;

/// The check catalog, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckName {
    /// `g[1, 0]` versus `π(g(1, 0))`, and `g·π(v)` versus `π(g v)`.
    Rephrase,
    /// `g[1, 0] ↔ g i g*` through `stereo₁⁻¹ ∘ (·i) ∘ chart`, and the torus
    /// of `SU(2)` against `{e^{iθ}}`.
    QuatIdentification,
    TemplateClassic,
    TemplateQuat,
    TemplateBloch,
    /// `Bloch ∘ T = reverse ∘ QuatHopf`.
    CompareBlochQuat,
    /// `g ⊙ h = h̃ gᵀ`.
    OdotLemma,
    Reconcile,
    #[serde(rename = "derivation-16-18")]
    Derivation,
    FinalDiagram,
    IsoSu2Quat,
    FiberInvariance,
}

impl CheckName {
    pub const CATALOG: [CheckName; 12] = [
        CheckName::Rephrase,
        CheckName::QuatIdentification,
        CheckName::TemplateClassic,
        CheckName::TemplateQuat,
        CheckName::TemplateBloch,
        CheckName::CompareBlochQuat,
        CheckName::OdotLemma,
        CheckName::Reconcile,
        CheckName::Derivation,
        CheckName::FinalDiagram,
        CheckName::IsoSu2Quat,
        CheckName::FiberInvariance,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::Rephrase => "rephrase",
            CheckName::QuatIdentification => "quat-identification",
            CheckName::TemplateClassic => "template-classic",
            CheckName::TemplateQuat => "template-quat",
            CheckName::TemplateBloch => "template-bloch",
            CheckName::CompareBlochQuat => "compare-bloch-quat",
            CheckName::OdotLemma => "odot-lemma",
            CheckName::Reconcile => "reconcile",
            CheckName::Derivation => "derivation-16-18",
            CheckName::FinalDiagram => "final-diagram",
            CheckName::IsoSu2Quat => "iso-su2-quat",
            CheckName::FiberInvariance => "fiber-invariance",
        }
    }

    /// The check's base seed: `seed + fnv1a64(name)`.
    pub fn derive_seed(self, seed: u64) -> u64 {
        seed.wrapping_add(fnv1a64(self.as_str().as_bytes()))
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckName::CATALOG.into_iter().find(|c| c.as_str() == s).ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagramCheck {
    pub name: CheckName,
    pub samples: u64,
    pub seed: u64,
    pub tolerance: f64,
}

impl DiagramCheck {
    pub fn new(name: &str, samples: u64, seed: u64, tolerance: f64) -> Result<Self> {
        let name = name.parse()?;
        validate(samples, tolerance)?;
        Ok(Self { name, samples, seed, tolerance })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: CheckName,
    pub samples: u64,
    pub seed: u64,
    pub tolerance: f64,
    pub max_deviation: f64,
    pub failures: u64,
    pub resampled: u64,
    /// The sample attaining `max_deviation` (the first one on ties).
    pub worst_input: Value,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Source of random inputs for the checks.
pub trait Sampler {
    /// Uniform on `S³`.
    fn unit_quaternion(&mut self) -> Quaternion;
    /// Uniform on `S²`.
    fn sphere_point(&mut self) -> Point3;
    /// Uniform on `[0, 2π)`.
    fn angle(&mut self) -> f64;
    /// Nonzero complex scalar with `ln|λ|` uniform on `[−2, 2]` and uniform
    /// phase.
    fn fiber_scalar(&mut self) -> Complex64;
}

/// The documented sampler: normalized standard normal vectors for spheres.
#[derive(Debug, Clone)]
pub struct GaussianSampler<R> {
    rng: R,
}

impl<R: Rng> GaussianSampler<R> {
    pub fn new(rng: R) -> Self {
        Self { rng }
    }

    fn normals<const N: usize>(&mut self) -> [f64; N] {
        loop {
            let v: [f64; N] = std::array::from_fn(|_| self.rng.sample(StandardNormal));
            let sq: f64 = v.iter().map(|x| x * x).sum();
            if sq > 1e-24 {
                let n = sq.sqrt();
                return v.map(|x| x / n);
            }
        }
    }
}

impl<R: Rng> Sampler for GaussianSampler<R> {
    fn unit_quaternion(&mut self) -> Quaternion {
        let [a, b, c, d] = self.normals::<4>();
        Quaternion::new(a, b, c, d)
    }

    fn sphere_point(&mut self) -> Point3 {
        Point3::from(self.normals::<3>())
    }

    fn angle(&mut self) -> f64 {
        self.rng.random_range(0.0..std::f64::consts::TAU)
    }

    fn fiber_scalar(&mut self) -> Complex64 {
        let log_r: f64 = self.rng.random_range(-2.0..=2.0);
        Complex64::from_polar(log_r.exp(), self.angle())
    }
}

/// The sampler for sample `index` of a check seeded with `check_seed`.
pub fn sample_sampler(check_seed: u64, index: u64) -> GaussianSampler<ChaCha8Rng> {
    let mut rng = ChaCha8Rng::seed_from_u64(check_seed);
    rng.set_stream(index);
    GaussianSampler::new(rng)
}

pub fn run_check(check: &DiagramCheck) -> CheckReport {
    let base = check.name.derive_seed(check.seed);
    run_check_with(check, |k| sample_sampler(base, k))
}

/// Runs `check` drawing sample `k` from `sampler_for(k)`.
pub fn run_check_with<S, F>(check: &DiagramCheck, sampler_for: F) -> CheckReport
where
    S: Sampler,
    F: Fn(u64) -> S + Sync,
{
    let outcomes: Vec<Outcome> = (0..check.samples)
        .into_par_iter()
        .map(|k| {
            let mut sampler = sampler_for(k);
            evaluate(check.name, &mut sampler)
        })
        .collect();

    let mut max_deviation = f64::NEG_INFINITY;
    let mut failures = 0;
    let mut resampled = 0;
    let mut worst_input = Value::Null;
    for outcome in outcomes {
        resampled += outcome.redraws;
        if outcome.deviation.is_nan() || outcome.deviation > check.tolerance {
            failures += 1;
        }
        if outcome.deviation > max_deviation {
            max_deviation = outcome.deviation;
            worst_input = outcome.input;
        }
    }
    CheckReport {
        name: check.name,
        samples: check.samples,
        seed: check.seed,
        tolerance: check.tolerance,
        max_deviation,
        failures,
        resampled,
        worst_input,
    }
}

/// Runs the whole catalog in catalog order.
pub fn run_all(samples: u64, seed: u64, tolerance: f64) -> Result<Vec<CheckReport>> {
    validate(samples, tolerance)?;
    Ok(CheckName::CATALOG.par_iter().map(|&name| run_check(&DiagramCheck { name, samples, seed, tolerance })).collect())
}

fn validate(samples: u64, tolerance: f64) -> Result<()> {
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be at least 1".into()));
    }
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    Ok(())
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, &b| (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01b3))
}

struct Outcome {
    deviation: f64,
    redraws: u64,
    input: Value,
}

enum Trial {
    Evaluated { deviation: f64, input: Value },
    NearPole,
}

fn evaluate<S: Sampler>(name: CheckName, sampler: &mut S) -> Outcome {
    for redraws in 0..MAX_DRAWS as u64 {
        match trial(name, sampler) {
            Ok(Trial::Evaluated { deviation, input }) => {
                // NaN never passes a tolerance; report it as an infinite deviation.
                let deviation = if deviation.is_nan() { f64::INFINITY } else { deviation };
                return Outcome { deviation, redraws, input };
            }
            Ok(Trial::NearPole) => continue,
            Err(e) => return Outcome { deviation: f64::INFINITY, redraws, input: json!({ "error": e.to_string() }) },
        }
    }
    Outcome {
        deviation: f64::INFINITY,
        redraws: MAX_DRAWS as u64,
        input: json!({ "error": "no sample away from the poles" }),
    }
}

fn trial<S: Sampler>(name: CheckName, s: &mut S) -> Result<Trial> {
    match name {
        CheckName::Rephrase => rephrase(s),
        CheckName::QuatIdentification => quat_identification(s),
        CheckName::TemplateClassic => template_classic(s),
        CheckName::TemplateQuat => template_quat(s),
        CheckName::TemplateBloch => template_bloch(s),
        CheckName::CompareBlochQuat => compare_bloch_quat(s),
        CheckName::OdotLemma => odot_lemma(s),
        CheckName::Reconcile => reconcile_check(s),
        CheckName::Derivation => derivation(s),
        CheckName::FinalDiagram => final_diagram(s),
        CheckName::IsoSu2Quat => iso_su2_quat(s),
        CheckName::FiberInvariance => fiber_invariance(s),
    }
}

const NORTH: Point3 = Point3::Z;
const EAST: Point3 = Point3::X;

fn near(p: Point3, pole: Point3) -> bool {
    p.distance(pole) < POLE_MARGIN
}

fn evaluated(deviation: f64, input: Value) -> Result<Trial> {
    Ok(Trial::Evaluated { deviation, input })
}

fn max_of(values: &[f64]) -> f64 {
    values.iter().fold(0.0, |m, &v| if v > m || v.is_nan() { v } else { m })
}

fn axis_angle_sample<S: Sampler>(s: &mut S) -> Result<AxisAngle> {
    let theta = s.angle();
    AxisAngle::new(theta, s.sphere_point())
}

fn su2_sample<S: Sampler>(s: &mut S) -> Result<Su2Matrix> {
    Su2Matrix::from_quaternion(s.unit_quaternion())
}

fn nonzero_pair_sample<S: Sampler>(s: &mut S) -> ComplexPair {
    let v = s.unit_quaternion().to_complex_pair();
    v.scale(s.fiber_scalar())
}

fn su2_json(g: &Su2Matrix) -> Value {
    json!(io::quaternion(g.to_quaternion()))
}

/// A point of `ℙ¹` as a point of `S²`, via the closed form of the classic
/// Hopf map on its unit representative.
fn proj_on_sphere(p: &ProjectivePoint) -> Result<Point3> {
    hopf_classic(p.rep())
}

fn rephrase<S: Sampler>(s: &mut S) -> Result<Trial> {
    let g = su2_sample(s)?;
    let v = nonzero_pair_sample(s);
    let e1 = ComplexPair::from_parts(1.0, 0.0, 0.0, 0.0);

    let base_by_action = g.act_on_proj(&ProjectivePoint::basepoint())?;
    let base_by_projection = project(g.act_on_vector(e1))?;
    let v_by_action = g.act_on_proj(&project(v)?)?;
    let v_by_projection = project(g.act_on_vector(v))?;

    let deviation = max_of(&[
        proj_on_sphere(&base_by_action)?.distance(proj_on_sphere(&base_by_projection)?),
        proj_on_sphere(&v_by_action)?.distance(proj_on_sphere(&v_by_projection)?),
    ]);
    evaluated(deviation, json!({ "g": su2_json(&g), "v": io::pair(v) }))
}

fn quat_identification<S: Sampler>(s: &mut S) -> Result<Trial> {
    let q = s.unit_quaternion();
    let theta = s.angle();
    let direct = quat_hopf(q)?;
    if near(direct, EAST) {
        return Ok(Trial::NearPole);
    }
    let g = Su2Matrix::from_quaternion(q)?;
    let orbit_point = g.act_on_proj(&ProjectivePoint::basepoint())?;
    let via_projective_line = stereo1_inv(chart(&orbit_point).mul_i());

    let torus = Su2Matrix::torus(theta);
    let circle = Su2Matrix::from_quaternion(Quaternion::exp_i(theta))?;

    let deviation = max_of(&[via_projective_line.distance(direct), torus.distance(&circle)]);
    evaluated(deviation, json!({ "q": io::quaternion(q), "theta": theta }))
}

fn template_classic<S: Sampler>(s: &mut S) -> Result<Trial> {
    let v = s.unit_quaternion().to_complex_pair();
    let direct = hopf_classic(v)?;
    if near(direct, NORTH) {
        return Ok(Trial::NearPole);
    }
    let template = stereo3_inv(chart(&project(v)?));
    evaluated(template.distance(direct), json!({ "v": io::pair(v) }))
}

fn template_quat<S: Sampler>(s: &mut S) -> Result<Trial> {
    let q = s.unit_quaternion();
    let direct = quat_hopf(q)?;
    if near(direct, EAST) {
        return Ok(Trial::NearPole);
    }
    let transposed = q.to_complex_pair().transpose_map();
    let template = stereo1_inv(chart(&project(transposed)?).mul_i());
    evaluated(template.distance(direct), json!({ "q": io::quaternion(q) }))
}

fn template_bloch<S: Sampler>(s: &mut S) -> Result<Trial> {
    let v = nonzero_pair_sample(s);
    let direct = bloch(v)?;
    if near(direct, NORTH) {
        return Ok(Trial::NearPole);
    }
    let template = stereo3_inv(chart(&project(v)?).conj());
    evaluated(template.distance(direct), json!({ "v": io::pair(v) }))
}

fn compare_bloch_quat<S: Sampler>(s: &mut S) -> Result<Trial> {
    let point = s.unit_quaternion().to_complex_pair();
    let left = bloch(point.transpose_map())?;
    if near(left, NORTH) {
        return Ok(Trial::NearPole);
    }
    let right = reverse(quat_hopf(Quaternion::from_complex_pair(point))?);
    evaluated(left.distance(right), json!({ "s": io::pair(point) }))
}

fn odot_lemma<S: Sampler>(s: &mut S) -> Result<Trial> {
    let g = su2_sample(s)?;
    let h = nonzero_pair_sample(s);
    let deviation = g.act_on_vector(h).distance(matvec_as_quat(&g, h));
    evaluated(deviation, json!({ "g": su2_json(&g), "h": io::pair(h) }))
}

fn axis_angle_json(aa: &AxisAngle) -> Value {
    json!({ "theta": aa.theta, "axis": io::point(aa.axis()) })
}

fn reconcile_check<S: Sampler>(s: &mut S) -> Result<Trial> {
    let aa = axis_angle_sample(s)?;
    let p = s.sphere_point();
    let fiber_q = s.angle();
    let fiber_b = s.fiber_scalar();
    let (quat_side, bloch_side) = reconcile(&aa, p, fiber_q, fiber_b)?;
    if near(bloch_side, NORTH) {
        return Ok(Trial::NearPole);
    }
    let rotated = rotate(&aa, p);
    let deviation =
        max_of(&[quat_side.distance(bloch_side), quat_side.distance(rotated), bloch_side.distance(rotated)]);
    evaluated(
        deviation,
        json!({
            "axis_angle": axis_angle_json(&aa),
            "p": io::point(p),
            "fiber_q": fiber_q,
            "fiber_b": io::complex(fiber_b),
        }),
    )
}

fn derivation<S: Sampler>(s: &mut S) -> Result<Trial> {
    let aa = axis_angle_sample(s)?;
    let p = s.sphere_point();
    let fiber_b = s.fiber_scalar();
    let hb = lift_bloch(p)?.scale(fiber_b);
    let g = gb(&aa);

    let matvec = bloch(g.act_on_vector(hb))?;
    if near(matvec, NORTH) {
        return Ok(Trial::NearPole);
    }
    let quat_product = bloch(matvec_as_quat(&g, hb))?;
    let h_tilde_t = Quaternion::from_complex_pair(hb).transpose() * (1.0 / hb.norm());
    let reversed = reverse(quat_hopf(g.to_quaternion() * h_tilde_t)?);
    let rotated = rotate(&aa, p);

    let deviation =
        max_of(&[matvec.distance(quat_product), quat_product.distance(reversed), reversed.distance(rotated)]);
    evaluated(
        deviation,
        json!({
            "axis_angle": axis_angle_json(&aa),
            "p": io::point(p),
            "fiber_b": io::complex(fiber_b),
        }),
    )
}

fn final_diagram<S: Sampler>(s: &mut S) -> Result<Trial> {
    let g_q = s.unit_quaternion();
    let h_q = s.unit_quaternion();
    let fiber_b = s.fiber_scalar();

    let aa = AxisAngle::from_quaternion(g_q)?;
    let p = quat_hopf(h_q)?;
    let top = quat_hopf(g_q * h_q)?;
    let middle = rotate(&aa, p);
    let h_b = lift_bloch(p)?.scale(fiber_b);
    let bottom = bloch(gb(&aa).act_on_vector(h_b))?;
    if near(bottom, NORTH) {
        return Ok(Trial::NearPole);
    }
    let deviation =
        max_of(&[top.distance(middle), middle.distance(bottom), top.distance(bottom), gq(&aa).distance(g_q)]);
    evaluated(
        deviation,
        json!({
            "g_q": io::quaternion(g_q),
            "h_q": io::quaternion(h_q),
            "fiber_b": io::complex(fiber_b),
        }),
    )
}

fn iso_su2_quat<S: Sampler>(s: &mut S) -> Result<Trial> {
    let a = s.unit_quaternion();
    let b = s.unit_quaternion();
    let product_then_map = Su2Matrix::from_quaternion(a * b)?;
    let map_then_product = Su2Matrix::from_quaternion(a)?.multiply(Su2Matrix::from_quaternion(b)?);
    let round_trip = Su2Matrix::from_quaternion(a)?.to_quaternion().distance(a);
    let deviation = max_of(&[product_then_map.distance(&map_then_product), round_trip]);
    evaluated(deviation, json!({ "a": io::quaternion(a), "b": io::quaternion(b) }))
}

fn fiber_invariance<S: Sampler>(s: &mut S) -> Result<Trial> {
    let g = s.unit_quaternion();
    let theta = s.angle();
    let lambda = s.fiber_scalar();
    let v = g.to_complex_pair();
    let phase = Complex64::from_polar(1.0, theta);

    let quat = quat_hopf(g * Quaternion::exp_i(theta))?.distance(quat_hopf(g)?);
    let bloch_dev = bloch(v.scale(lambda))?.distance(bloch(v)?);
    let classic = hopf_classic(v.scale(phase))?.distance(hopf_classic(v)?);
    let m = Su2Matrix::from_quaternion(g)?;
    let base = ProjectivePoint::basepoint();
    let isotropy = proj_on_sphere(&m.multiply(Su2Matrix::torus(theta)).act_on_proj(&base)?)?
        .distance(proj_on_sphere(&m.act_on_proj(&base)?)?);

    evaluated(
        max_of(&[quat, bloch_dev, classic, isotropy]),
        json!({
            "g": io::quaternion(g),
            "theta": theta,
            "lambda": io::complex(lambda),
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    struct IdentityGroup<S>(S);

    impl<S: Sampler> Sampler for IdentityGroup<S> {
        fn unit_quaternion(&mut self) -> Quaternion {
            Quaternion::ONE
        }
        fn sphere_point(&mut self) -> Point3 {
            self.0.sphere_point()
        }
        fn angle(&mut self) -> f64 {
            self.0.angle()
        }
        fn fiber_scalar(&mut self) -> Complex64 {
            self.0.fiber_scalar()
        }
    }

    #[test]
    fn catalog_names_round_trip() {
        assert_eq!(CheckName::CATALOG.len(), 12);
        for name in CheckName::CATALOG {
            assert_eq!(name.as_str().parse::<CheckName>().unwrap(), name);
            assert_eq!(serde_json::to_value(name).unwrap(), Value::String(name.as_str().to_string()));
        }
        assert_eq!("unknown-name".parse::<CheckName>(), Err(Error::UnknownCheck("unknown-name".into())));
    }

    #[test]
    fn check_constructor_validates() {
        assert!(matches!(DiagramCheck::new("unknown-name", 10, 0, 1e-9), Err(Error::UnknownCheck(_))));
        assert!(matches!(DiagramCheck::new("reconcile", 0, 0, 1e-9), Err(Error::InvalidArgument(_))));
        assert!(matches!(DiagramCheck::new("reconcile", 1, 0, 0.0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn compare_bloch_quat_passes() {
        let check = DiagramCheck::new("compare-bloch-quat", 1000, 42, 1e-9).unwrap();
        let report = run_check(&check);
        assert_eq!(report.failures, 0, "{report:?}");
        assert!(report.max_deviation <= 1e-9);
    }

    #[test]
    fn odot_lemma_is_exact_for_the_identity() {
        let check = DiagramCheck::new("odot-lemma", 1, 5, 1e-12).unwrap();
        let report = run_check_with(&check, |k| IdentityGroup(sample_sampler(5, k)));
        assert_eq!(report.max_deviation, 0.0);
        assert_eq!(report.failures, 0);
    }

    #[test]
    fn run_all_minimal_sampling() {
        let reports = run_all(1, 0, 1e-9).unwrap();
        assert_eq!(reports.len(), 12);
        let names: Vec<_> = reports.iter().map(|r| r.name).collect();
        assert_eq!(names, CheckName::CATALOG.to_vec());
        assert!(run_all(0, 0, 1e-9).is_err());
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_all(200, 7, 1e-9).unwrap();
        let b = run_all(200, 7, 1e-9).unwrap();
        assert_eq!(a, b);
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        let single = run_check(&DiagramCheck::new("reconcile", 200, 7, 1e-9).unwrap());
        assert_eq!(single, a[7]);
    }

    #[test]
    fn failures_count_samples_over_tolerance() {
        let report = run_check(&DiagramCheck::new("reconcile", 50, 3, 1e-300).unwrap());
        assert!(report.failures > 0);
        assert!(report.max_deviation > report.tolerance);
    }

    #[test]
    fn sampler_ranges() {
        let mut s = sample_sampler(11, 0);
        for _ in 0..1000 {
            assert!((s.unit_quaternion().norm() - 1.0).abs() < 1e-15);
            assert!((s.sphere_point().norm() - 1.0).abs() < 1e-15);
            let a = s.angle();
            assert!((0.0..std::f64::consts::TAU).contains(&a));
            let r = s.fiber_scalar().norm().ln();
            assert!((-2.0 - 1e-12..=2.0 + 1e-12).contains(&r));
        }
    }

    #[test]
    fn streams_differ_per_sample() {
        let a = sample_sampler(1, 0).unit_quaternion();
        let b = sample_sampler(1, 1).unit_quaternion();
        assert_ne!(a, b);
        assert_eq!(a, sample_sampler(1, 0).unit_quaternion());
    }
}
