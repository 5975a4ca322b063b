use std::io::Write;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::{CliError, Convention, Output, EXIT_OK, EXIT_VERIFY_FAILED, RENORMALIZE_BAND};
use crate::harness::{run_check, CheckName, DiagramCheck};
use crate::hopf::{bloch, fiber_sample, hopf_classic, quat_hopf, HopfVariant};
use crate::io::{self, AxisAngleJson, MatrixJson, PairJson, PointJson, QuaternionJson};
use crate::point::Point3;
use crate::quat::{ComplexPair, Quaternion};
use crate::rotation::{self, gb, gq, lift_bloch, rotate_via_bloch, AxisAngle};
use crate::su2::Su2Matrix;
use crate::EPS_NORM;

pub(super) struct Context<'a> {
    pub degrees: bool,
    pub stderr: &'a mut dyn Write,
}

impl Context<'_> {
    fn warn(&mut self, message: &str) {
        let _ = writeln!(self.stderr, "warning: {message}");
    }

    fn angle_in(&self, theta: f64) -> f64 {
        if self.degrees {
            theta.to_radians()
        } else {
            theta
        }
    }

    fn angle_out(&self, theta: f64) -> f64 {
        if self.degrees {
            theta.to_degrees()
        } else {
            theta
        }
    }

    /// Accepts `norm` within `EPS_NORM` of 1, asks for rescaling inside the
    /// renormalization band, and rejects anything farther.
    fn unit_scale(&mut self, what: &str, norm: f64) -> Result<f64, CliError> {
        let off = (norm - 1.0).abs();
        if off <= EPS_NORM {
            Ok(1.0)
        } else if off <= RENORMALIZE_BAND {
            self.warn(&format!("{what} has norm {norm}; renormalized"));
            Ok(1.0 / norm)
        } else {
            Err(CliError::Domain(format!("{what} has norm {norm}, expected 1")))
        }
    }

    fn unit_point(&mut self, what: &str, p: PointJson) -> Result<Point3, CliError> {
        let p = io::to_point(p);
        Ok(p * self.unit_scale(what, p.norm())?)
    }

    fn unit_quaternion(&mut self, what: &str, q: Quaternion) -> Result<Quaternion, CliError> {
        Ok(q * self.unit_scale(what, q.norm())?)
    }

    fn axis_angle(&mut self, aa: AxisAngleJson) -> Result<AxisAngle, CliError> {
        let axis = self.unit_point("axis", aa.axis)?;
        Ok(AxisAngle::new(self.angle_in(aa.theta), axis)?)
    }

    fn axis_angle_json(&self, aa: &AxisAngle) -> AxisAngleJson {
        AxisAngleJson { theta: self.angle_out(aa.theta), axis: io::point(aa.axis()) }
    }
}

fn parse<T: DeserializeOwned>(text: &str, what: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Usage(format!("invalid {what} input: {e}")))
}

fn done(document: impl Serialize) -> Result<Output, CliError> {
    Ok(Output { document: serde_json::to_value(document).expect("output documents serialize"), code: EXIT_OK })
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConvertDoc {
    axis_angle: AxisAngleJson,
    gq: QuaternionJson,
    gq_matrix: MatrixJson,
    gb_matrix: MatrixJson,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum ConvertInput {
    Previous(ConvertDoc),
    AxisAngle(AxisAngleJson),
    Quaternion(QuaternionJson),
    Su2(PairJson),
}

pub(super) fn convert(ctx: &mut Context<'_>, text: &str, convention: Convention) -> Result<Output, CliError> {
    let aa = match parse::<ConvertInput>(text, "convert")? {
        ConvertInput::Previous(doc) => ctx.axis_angle(doc.axis_angle)?,
        ConvertInput::AxisAngle(aa) => ctx.axis_angle(aa)?,
        ConvertInput::Quaternion(q) => from_matrix(ctx, io::to_quaternion(q), convention)?,
        ConvertInput::Su2(m) => from_matrix(ctx, Quaternion::from_complex_pair(io::to_pair(m)), convention)?,
    };
    let q = gq(&aa);
    done(ConvertDoc {
        axis_angle: ctx.axis_angle_json(&aa),
        gq: io::quaternion(q),
        gq_matrix: io::matrix(&Su2Matrix::from_quaternion(q)?),
        gb_matrix: io::matrix(&gb(&aa)),
    })
}

/// Axis-angle of a rotation given as `g_Q` or as `g_B`. A `g_B` matrix read
/// as a quaternion is `g_Q(−θ, reverse(n̂)) = g_Q(θ, −reverse(n̂))`.
fn from_matrix(ctx: &mut Context<'_>, q: Quaternion, convention: Convention) -> Result<AxisAngle, CliError> {
    let q = ctx.unit_quaternion("matrix", q)?;
    let aa = AxisAngle::from_quaternion(q)?;
    Ok(match convention {
        Convention::Quat => aa,
        Convention::Bloch => {
            let n = aa.axis();
            AxisAngle::new(aa.theta, Point3::new(-n.z, -n.y, -n.x))?
        }
    })
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RotateInput {
    axis_angle: AxisAngleJson,
    points: Vec<PointJson>,
}

pub(super) fn rotate(ctx: &mut Context<'_>, text: &str, convention: Convention) -> Result<Output, CliError> {
    let input: RotateInput = parse(text, "rotate")?;
    let aa = ctx.axis_angle(input.axis_angle)?;
    let points = input
        .points
        .into_iter()
        .map(|p| {
            let p = io::to_point(p);
            let rotated = match convention {
                Convention::Quat => rotation::rotate(&aa, p),
                Convention::Bloch => rotate_by_bloch(&aa, p)?,
            };
            Ok(io::point(rotated))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    done(json!({ "convention": convention.as_str(), "points": points }))
}

/// Rotates the direction of `p` through `Bloch(g_B h_B)` and restores its length.
fn rotate_by_bloch(aa: &AxisAngle, p: Point3) -> Result<Point3, CliError> {
    let r = p.norm();
    if r == 0.0 {
        return Ok(p);
    }
    if !r.is_finite() {
        return Err(CliError::Domain("point is not finite".into()));
    }
    let hb = lift_bloch(p * (1.0 / r))?;
    Ok(rotate_via_bloch(aa, hb)? * r)
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(untagged)]
enum S3Input {
    Quaternion(QuaternionJson),
    Pair(PairJson),
}

impl S3Input {
    fn pair(self) -> ComplexPair {
        match self {
            S3Input::Quaternion(q) => io::to_quaternion(q).to_complex_pair(),
            S3Input::Pair(p) => io::to_pair(p),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum OneOrMany<T> {
    Many(Vec<T>),
    One(T),
}

impl<T> OneOrMany<T> {
    fn into_vec(self) -> Vec<T> {
        match self {
            OneOrMany::Many(v) => v,
            OneOrMany::One(x) => vec![x],
        }
    }
}

pub(super) fn hopf(text: &str, variant: HopfVariant) -> Result<Output, CliError> {
    let inputs = parse::<OneOrMany<S3Input>>(text, "hopf")?.into_vec();
    let points = inputs
        .into_iter()
        .map(|x| {
            let v = x.pair();
            let p = match variant {
                HopfVariant::Classic => hopf_classic(v)?,
                HopfVariant::Quat => quat_hopf(Quaternion::from_complex_pair(v))?,
                HopfVariant::Bloch => bloch(v)?,
            };
            Ok(io::point(p))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    done(json!({ "variant": variant.as_str(), "points": points }))
}

fn lift_json(variant: HopfVariant, v: ComplexPair) -> Value {
    match variant {
        HopfVariant::Quat => json!(io::quaternion(Quaternion::from_complex_pair(v))),
        HopfVariant::Classic | HopfVariant::Bloch => json!(io::pair(v)),
    }
}

pub(super) fn lift(ctx: &mut Context<'_>, text: &str, variant: HopfVariant) -> Result<Output, CliError> {
    let points = parse::<OneOrMany<PointJson>>(text, "lift")?.into_vec();
    let lifts = points
        .into_iter()
        .map(|p| {
            let p = ctx.unit_point("point", p)?;
            Ok(lift_json(variant, variant.lift(p)?))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    done(json!({ "variant": variant.as_str(), "lifts": lifts }))
}

pub(super) fn fiber(ctx: &mut Context<'_>, text: &str, variant: HopfVariant, count: u64) -> Result<Output, CliError> {
    let base = ctx.unit_point("base point", parse(text, "fiber")?)?;
    let count = usize::try_from(count).map_err(|_| CliError::Usage(format!("count {count} is too large")))?;
    let lifts = fiber_sample(variant, base, count)?;
    let mut max_error = 0.0f64;
    for v in &lifts {
        max_error = max_error.max(variant.apply(*v)?.distance(base));
    }
    done(json!({
        "variant": variant.as_str(),
        "base": io::point(base),
        "count": count,
        "lifts": lifts.iter().map(|v| lift_json(variant, *v)).collect::<Vec<_>>(),
        "roundtrip_max_error": max_error,
    }))
}

pub(super) fn verify(names: &[String], samples: u64, seed: u64, tolerance: f64) -> Result<Output, CliError> {
    let names = if names.is_empty() {
        CheckName::CATALOG.to_vec()
    } else {
        names.iter().map(|n| n.parse::<CheckName>()).collect::<Result<Vec<_>, _>>()?
    };
    let checks = names
        .iter()
        .map(|&name| DiagramCheck::new(name.as_str(), samples, seed, tolerance))
        .collect::<Result<Vec<_>, _>>()?;
    let reports: Vec<_> = {
        use rayon::prelude::*;
        checks.par_iter().map(run_check).collect()
    };
    let passed = reports.iter().all(|r| r.passed());
    let document = json!({
        "samples": samples,
        "seed": seed,
        "tolerance": tolerance,
        "passed": passed,
        "reports": reports,
    });
    Ok(Output { document, code: if passed { EXIT_OK } else { EXIT_VERIFY_FAILED } })
}
