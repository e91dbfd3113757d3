//! Zero-temperature atom–wall energy.
//!
//! V₀(z) = (ħc/8π)(k₀α₀/z³) ℋ₀(2k₀z), with
//! ℋ₀(x) = (x² − 2)ℱ(x) + 2x𝒢(x) − x.

use std::f64::consts::PI;

use serde::Serialize;

use crate::specfun::{auxiliary_f, auxiliary_g};
use crate::units::AtomParams;
use crate::{Error, Result};

/// Below this x₀ the image-method form is the declared approximation.
pub const NON_RETARDED_MAX_X0: f64 = 0.1;

/// z > 1.3λ₀, i.e. x₀ > 2.6·2π.
pub const RETARDED_MIN_X0: f64 = 2.6 * 2.0 * PI;

/// ℋ₀ switches to its large-x expansion here; the closed form loses about
/// log10(x²/6) digits to cancellation.
const H0_ASYMPTOTIC_FROM: f64 = 40.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    NonRetarded,
    Crossover,
    Retarded,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::NonRetarded => "non_retarded",
            Regime::Crossover => "crossover",
            Regime::Retarded => "retarded",
        }
    }
}

/// One atom–wall configuration in dimensionless form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GeometryPoint {
    pub x0: f64,
    pub z_over_lambda0: f64,
    pub regime: Regime,
}

impl GeometryPoint {
    pub fn new(atom: &AtomParams, z: f64) -> Result<Self> {
        check_distance("GeometryPoint", z)?;
        let x0 = 2.0 * atom.k0 * z;
        Ok(Self {
            x0,
            z_over_lambda0: z * atom.k0 / (2.0 * PI),
            regime: classify_regime(x0)?,
        })
    }
}

/// Vacuum shift with its reservoir-reaction and field-fluctuation parts.
///
/// Only the total has a closed form; the parts come from quadrature
/// (see [`crate::oracle::vacuum_shift`]).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VacuumShift {
    pub total: f64,
    pub rr_part: f64,
    pub fr_part: f64,
    pub from_quadrature: bool,
}

pub(crate) fn check_distance(what: &'static str, z: f64) -> Result<()> {
    if z > 0.0 && z.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(
            what,
            z,
            "distance must be positive and finite",
        ))
    }
}

/// ℋ₀(x₀), with limit −π at 0⁺ and −6/x + 40/x³ − … at large x.
pub fn h0(x0: f64) -> Result<f64> {
    if !(x0 > 0.0) || x0.is_nan() {
        return Err(Error::domain("h0", x0, "need x0 > 0"));
    }
    if x0.is_infinite() {
        return Ok(0.0);
    }
    if x0 >= H0_ASYMPTOTIC_FROM {
        return Ok(h0_asymptotic(x0));
    }
    Ok((x0 * x0 - 2.0) * auxiliary_f(x0)? + 2.0 * x0 * auxiliary_g(x0)? - x0)
}

// Σ_k (−1)^{k+1} [(2k+2)! + 2(2k+1)! + 2(2k)!] / x^{2k+1}, cut at the smallest term.
fn h0_asymptotic(x: f64) -> f64 {
    let inv2 = 1.0 / (x * x);
    let mut fact = 1.0; // (2k)!
    let mut power = 1.0 / x;
    let mut sum = 0.0f64;
    let mut last = f64::INFINITY;
    for k in 0..60 {
        let n = 2.0 * k as f64;
        let coeff = fact * ((n + 1.0) * (n + 2.0) + 2.0 * (n + 1.0) + 2.0);
        let t = coeff * power;
        if t >= last || t <= f64::EPSILON * 1e-2 * sum.abs() {
            break;
        }
        sum += if k % 2 == 0 { -t } else { t };
        last = t;
        fact *= (n + 1.0) * (n + 2.0);
        power *= inv2;
    }
    sum
}

/// V₀(z) in units of ħc/length.
pub fn vacuum_potential(atom: &AtomParams, z: f64) -> Result<f64> {
    check_distance("vacuum_potential", z)?;
    Ok(atom.alpha0 * atom.k0 / (8.0 * PI * z.powi(3)) * h0(2.0 * atom.k0 * z)?)
}

/// Image-method limit −ħω₀α₀/(8z³).
pub fn nonretarded_asymptote(atom: &AtomParams, z: f64) -> Result<f64> {
    check_distance("nonretarded_asymptote", z)?;
    Ok(-atom.k0 * atom.alpha0 / (8.0 * z.powi(3)))
}

/// Casimir-Polder limit −(3/8π)ħcα₀/z⁴.
pub fn retarded_asymptote(atom: &AtomParams, z: f64) -> Result<f64> {
    check_distance("retarded_asymptote", z)?;
    Ok(-3.0 * atom.alpha0 / (8.0 * PI * z.powi(4)))
}

pub fn classify_regime(x0: f64) -> Result<Regime> {
    if !(x0 > 0.0) || x0.is_nan() {
        return Err(Error::domain("classify_regime", x0, "need x0 > 0"));
    }
    Ok(if x0 < NON_RETARDED_MAX_X0 {
        Regime::NonRetarded
    } else if x0 > RETARDED_MIN_X0 {
        Regime::Retarded
    } else {
        Regime::Crossover
    })
}
