//! Brute-force quadrature reconstructions of the closed forms.
//!
//! Nothing here calls the special functions of [`crate::specfun`]; the
//! integrands use elementary functions only, so agreement with the closed
//! forms is an independent check.

mod quadrature;

use std::f64::consts::PI;

use serde::Serialize;

pub use quadrature::{extrapolate_to_zero, integrate, panels, Integral};

use crate::units::{AtomParams, ThermalEnvironment};
use crate::vacuum::{check_distance, VacuumShift};
use crate::{Error, Result};

const MAX_SEGMENTS: usize = 200_000;
const QUAD_REL_TOL: f64 = 1e-13;
// The regulated vacuum integrals carry a mass of order 1/ε² but values of
// order one, so their tolerance is absolute.
const VACUUM_ABS_TOL: f64 = 1e-14;

/// First Abel regulator; later ones halve it.
pub const FIRST_EPSILON: f64 = 0.1;
const MAX_EXTRAPOLATION_LEVELS: usize = 9;
const MIN_EXTRAPOLATION_LEVELS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureReport {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub subdivisions: usize,
    /// Smallest regulator used, 0 when the integral needed none.
    pub regulator_epsilon: f64,
    pub extrapolation_steps: usize,
}

impl QuadratureReport {
    fn scaled(self, factor: f64) -> Self {
        Self {
            value: self.value * factor,
            abs_error_estimate: self.abs_error_estimate * factor.abs(),
            ..self
        }
    }

    fn from_integral(i: Integral) -> Self {
        Self {
            value: i.value,
            abs_error_estimate: honest_error(i.error, i.mass),
            subdivisions: i.subdivisions,
            regulator_epsilon: 0.0,
            extrapolation_steps: 0,
        }
    }
}

// Never report less than the roundoff carried by the integrand's mass.
fn honest_error(estimate: f64, mass: f64) -> f64 {
    estimate
        .max(16.0 * f64::EPSILON * mass)
        .max(f64::MIN_POSITIVE)
}

/// Coefficient of u^{2m} in the Taylor series of the wall kernel G(u),
/// collected from the series of sin u/u, 2cos u/u² and −2sin u/u³.
pub fn kernel_taylor_coefficient(m: u32) -> f64 {
    let n = (2 * m + 1) as f64;
    let mut inv_fact = 1.0; // 1/(2m+1)!
    for k in 2..=(2 * m + 1) {
        inv_fact /= k as f64;
    }
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * inv_fact * (1.0 - 2.0 / (n + 1.0) + 2.0 / ((n + 1.0) * (n + 2.0)))
}

/// Wall kernel G(u), written out here to keep the oracle self-contained.
fn wall_kernel(u: f64) -> f64 {
    if u < 0.5 {
        let u2 = u * u;
        (0..12)
            .rev()
            .fold(0.0, |acc, m| acc * u2 + kernel_taylor_coefficient(m))
    } else {
        let (s, c) = u.sin_cos();
        s / u + 2.0 * c / (u * u) - 2.0 * s / (u * u * u)
    }
}

/// ℱ(x) = ∫₀^∞ e^{−xt}/(1+t²) dt, split at t = 1. Beyond t = 1 + 50/x the
/// integrand is below e^{−50} of its value at 1 and is dropped.
pub fn f_integral_oracle(x: f64) -> Result<QuadratureReport> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::domain("f_integral_oracle", x, "need x > 0"));
    }
    let f = |t: f64| (-x * t).exp() / (1.0 + t * t);
    let mut breaks = vec![0.0];
    breaks.extend(panels(1.0, 1.0 + 50.0 / x, 1.0 + 5.0 / x));
    let r = integrate(f, &breaks, 0.0, QUAD_REL_TOL, MAX_SEGMENTS)?;
    Ok(QuadratureReport::from_integral(r))
}

/// Which part of the vacuum shift to reconstruct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VacuumPart {
    /// Reservoir reaction, weighted by α₋(k).
    Rr,
    /// Field fluctuations, weighted by α₊(k).
    Fr,
    /// Both, weighted by α₊ + α₋ = α₀k₀/(k + k₀).
    Total,
}

/// Tuning of the principal-value subtraction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleOptions {
    /// Half-width of the symmetric subtraction interval around the pole, as a
    /// fraction of the pole position.
    pub halfwidth_fraction: f64,
}

impl Default for PoleOptions {
    fn default() -> Self {
        Self {
            halfwidth_fraction: 0.5,
        }
    }
}

/// PV ∫ from `lo` to `hi` of g(u)/(u − pole), with the singular part over
/// [pole − δ, pole + δ] folded into ∫₀^δ [g(pole+t) − g(pole−t)]/t dt.
fn principal_value<G: Fn(f64) -> f64>(
    g: G,
    pole: f64,
    delta: f64,
    hi: f64,
    step: f64,
    abs_tol: f64,
) -> Result<Integral> {
    let lo_part = panels(0.0, pole - delta, step);
    let rel_tol = if abs_tol > 0.0 { 0.0 } else { QUAD_REL_TOL };
    let below = integrate(
        |u| g(u) / (u - pole),
        &lo_part,
        abs_tol,
        rel_tol,
        MAX_SEGMENTS,
    )?;
    let sym = integrate(
        |t| (g(pole + t) - g(pole - t)) / t,
        &panels(0.0, delta, step),
        abs_tol,
        rel_tol,
        MAX_SEGMENTS,
    )?;
    let above = integrate(
        |u| g(u) / (u - pole),
        &panels(pole + delta, hi, step),
        abs_tol,
        rel_tol,
        MAX_SEGMENTS,
    )?;
    Ok(Integral {
        value: below.value + sym.value + above.value,
        error: below.error + sym.error + above.error,
        mass: below.mass + sym.mass + above.mass,
        subdivisions: below.subdivisions + sym.subdivisions + above.subdivisions,
    })
}

// Abel-regulated ∫₀^∞ u³G(u)e^{−εu}/(u + σx₀) du, σ = ±1, in u = 2kz.
//
// Long division splits the integrand into (u − σx₀) sin u + 2 cos u, whose
// regulated integral is elementary, and the remainder
// [(x₀² − 2) sin u − 2σx₀ cos u]/(u + σx₀), which decays like 1/u and is
// integrated numerically. Without the split the integrand grows like u and
// its roundoff swamps the small-ε samples.
fn regulated_vacuum(x0: f64, eps: f64, sigma: f64, opts: PoleOptions) -> Result<Integral> {
    let q = 1.0 + eps * eps;
    let elementary = 2.0 * eps / (q * q) - sigma * x0 / q + 2.0 * eps / q;

    // e^{−εu} x₀²/u drops below 1e-17 of its peak well before this
    let cutoff = (45.0 + (1.0 / eps).ln()) / eps;
    let step = PI / 2.0;
    let a = x0 * x0 - 2.0;
    let b = -2.0 * sigma * x0;
    let numerator = move |u: f64| {
        let (s, c) = u.sin_cos();
        (a * s + b * c) * (-eps * u).exp()
    };
    let mut r = if sigma > 0.0 {
        integrate(
            |u| numerator(u) / (u + x0),
            &panels(0.0, cutoff, step),
            VACUUM_ABS_TOL,
            0.0,
            MAX_SEGMENTS,
        )?
    } else {
        let delta = opts.halfwidth_fraction * x0;
        principal_value(numerator, x0, delta, cutoff, step, VACUUM_ABS_TOL)?
    };
    r.value += elementary;
    Ok(r)
}

// H(x0) = lim_{ε→0} ∫ u³G(u)e^{−εu}/(u ± x0) du by Neville extrapolation in ε.
//
// I(ε) is analytic with its nearest singularities at ε = ±i, so the table
// converges geometrically until the roundoff of the samples, which grows like
// 1/ε², takes over. The diagonal with the smallest step is kept.
fn extrapolated_vacuum(x0: f64, pole_sign: f64, opts: PoleOptions) -> Result<QuadratureReport> {
    let mut samples = Vec::new();
    let mut quad_error: f64 = 0.0;
    let mut mass: f64 = 0.0;
    let mut subdivisions = 0;
    let mut best: Option<(f64, f64, usize)> = None;
    let mut worse = 0;
    for level in 0..MAX_EXTRAPOLATION_LEVELS {
        let eps = FIRST_EPSILON / 2f64.powi(level as i32);
        let r = regulated_vacuum(x0, eps, pole_sign, opts)?;
        samples.push((eps, r.value));
        quad_error = quad_error.max(r.error);
        mass = mass.max(r.mass);
        subdivisions += r.subdivisions;
        if samples.len() < MIN_EXTRAPOLATION_LEVELS - 1 {
            continue;
        }
        let (value, step) = extrapolate_to_zero(&samples);
        match best {
            Some((_, best_step, _)) if step >= best_step => worse += 1,
            _ => {
                best = Some((value, step, samples.len()));
                worse = 0;
            }
        }
        let (best_value, best_step, _) = best.expect("set above");
        if best_step <= 1e-13 * best_value.abs() || worse >= 2 {
            break;
        }
    }
    let (value, step, used) = best.expect("at least one extrapolation");
    if step > 1e-6 * value.abs() {
        return Err(Error::Convergence {
            what: "Abel extrapolation",
            steps: samples.len(),
            estimate: step,
        });
    }
    Ok(QuadratureReport {
        value,
        abs_error_estimate: honest_error(step + quad_error, 0.0),
        subdivisions,
        regulator_epsilon: samples[used - 1].0,
        extrapolation_steps: used,
    })
}

/// Quadrature reconstruction of the vacuum shift or one of its parts,
/// (ħc/π)∫₀^∞ k³α(k)G(2kz) dk.
pub fn vacuum_split_quadrature(
    atom: &AtomParams,
    z: f64,
    part: VacuumPart,
) -> Result<QuadratureReport> {
    vacuum_split_quadrature_with(atom, z, part, PoleOptions::default())
}

pub fn vacuum_split_quadrature_with(
    atom: &AtomParams,
    z: f64,
    part: VacuumPart,
    opts: PoleOptions,
) -> Result<QuadratureReport> {
    check_distance("vacuum_split_quadrature", z)?;
    let x0 = 2.0 * atom.k0 * z;
    // k³ dk = u³ du/(16 z⁴) and α₀k₀/2 · 1/(k ± k₀) = α₀k₀ z/(u ± x₀)
    let prefactor = atom.alpha0 * atom.k0 / (8.0 * PI * z.powi(3));
    let plus = extrapolated_vacuum(x0, 1.0, opts)?;
    if part == VacuumPart::Total {
        return Ok(plus.scaled(prefactor));
    }
    let minus = extrapolated_vacuum(x0, -1.0, opts)?;
    let sign = if part == VacuumPart::Rr { 1.0 } else { -1.0 };
    let combined = QuadratureReport {
        value: 0.5 * (plus.value + sign * minus.value),
        abs_error_estimate: 0.5 * (plus.abs_error_estimate + minus.abs_error_estimate),
        subdivisions: plus.subdivisions + minus.subdivisions,
        regulator_epsilon: plus.regulator_epsilon.min(minus.regulator_epsilon),
        extrapolation_steps: plus.extrapolation_steps.max(minus.extrapolation_steps),
    };
    Ok(combined.scaled(prefactor))
}

/// Vacuum shift with rr and fr parts from quadrature.
pub fn vacuum_shift(atom: &AtomParams, z: f64) -> Result<VacuumShift> {
    let rr = vacuum_split_quadrature(atom, z, VacuumPart::Rr)?;
    let fr = vacuum_split_quadrature(atom, z, VacuumPart::Fr)?;
    Ok(VacuumShift {
        total: rr.value + fr.value,
        rr_part: rr.value,
        fr_part: fr.value,
        from_quadrature: true,
    })
}

fn thermal_setup(env: &ThermalEnvironment, z: f64) -> Result<f64> {
    check_distance("thermal_quadrature", z)?;
    if env.is_vacuum() {
        return Err(Error::Validity {
            what: "thermal_quadrature",
            detail: "needs a finite temperature".into(),
        });
    }
    Ok(z / env.lambda_t)
}

// Panel width: a quarter oscillation of G(2sζ), and never wider than 2.
fn thermal_step(zeta: f64) -> f64 {
    (PI / (4.0 * zeta)).min(2.0)
}

/// V_T(z) = (2ħc/π) PV∫₀^∞ k³α₊(k)G(2kz)/(e^{kλ_T} − 1) dk.
///
/// In s = kλ_T the pole of α₊ sits at s = θ and is removed by symmetric
/// subtraction over [θ/2, 3θ/2]. The Bose weight makes the tail beyond
/// 3θ/2 + 100 negligible.
pub fn thermal_quadrature(
    atom: &AtomParams,
    env: &ThermalEnvironment,
    z: f64,
) -> Result<QuadratureReport> {
    thermal_quadrature_with(atom, env, z, PoleOptions::default())
}

pub fn thermal_quadrature_with(
    atom: &AtomParams,
    env: &ThermalEnvironment,
    z: f64,
    opts: PoleOptions,
) -> Result<QuadratureReport> {
    let zeta = thermal_setup(env, z)?;
    let theta = env.theta;
    // θ²/(θ² − s²) = −θ²/((θ + s)(s − θ))
    let g = move |s: f64| -> f64 {
        if s <= 0.0 {
            return 0.0;
        }
        -s * s * s * theta * theta * wall_kernel(2.0 * s * zeta) / ((theta + s) * s.exp_m1())
    };
    let delta = opts.halfwidth_fraction * theta;
    let hi = theta + delta + 100.0;
    let r = principal_value(g, theta, delta, hi, thermal_step(zeta), 0.0)?;
    let prefactor = 2.0 * atom.alpha0 / (PI * env.lambda_t.powi(4));
    Ok(QuadratureReport::from_integral(r).scaled(prefactor))
}

/// The same integral with α₊(k) replaced by the static α₀ (no dispersion).
pub fn thermal_quadrature_nondispersive(
    atom: &AtomParams,
    env: &ThermalEnvironment,
    z: f64,
) -> Result<QuadratureReport> {
    let zeta = thermal_setup(env, z)?;
    let f = move |s: f64| -> f64 {
        if s <= 0.0 {
            return 0.0;
        }
        s * s * s * wall_kernel(2.0 * s * zeta) / s.exp_m1()
    };
    let r = integrate(
        f,
        &panels(0.0, 120.0, thermal_step(zeta)),
        0.0,
        QUAD_REL_TOL,
        MAX_SEGMENTS,
    )?;
    let prefactor = 2.0 * atom.alpha0 / (PI * env.lambda_t.powi(4));
    Ok(QuadratureReport::from_integral(r).scaled(prefactor))
}

// ζ(s) for integer s >= 2: direct sum plus an Euler–Maclaurin remainder.
fn riemann_zeta(s: u32) -> f64 {
    let n = 40.0f64;
    let sf = s as f64;
    let si = s as i32;
    let head: f64 = (1..40).rev().map(|k| (k as f64).powi(-si)).sum();
    let ns = n.powi(-si);
    head + ns
        * (n / (sf - 1.0) + 0.5 + sf / (12.0 * n)
            - sf * (sf + 1.0) * (sf + 2.0) / (720.0 * n.powi(3))
            + sf * (sf + 1.0) * (sf + 2.0) * (sf + 3.0) * (sf + 4.0) / (30240.0 * n.powi(5)))
}

/// ∫₀^∞ xⁿ/(eˣ − 1) dx = n! ζ(n + 1).
pub fn bose_integral(n: u32) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("bose_integral", 0.0, "need n >= 1"));
    }
    let factorial: f64 = (1..=n).map(|k| k as f64).product();
    Ok(factorial * riemann_zeta(n + 1))
}

/// Direct quadrature of the Bose integrand, for checking [`bose_integral`].
pub fn bose_integral_quadrature(n: u32) -> Result<QuadratureReport> {
    if n == 0 {
        return Err(Error::domain(
            "bose_integral_quadrature",
            0.0,
            "need n >= 1",
        ));
    }
    let ni = n as i32;
    let f = move |x: f64| {
        if x <= 0.0 {
            0.0
        } else {
            x.powi(ni) / x.exp_m1()
        }
    };
    let hi = n as f64 + 80.0 + 10.0 * (n as f64).sqrt();
    let r = integrate(f, &panels(0.0, hi, 4.0), 0.0, QUAD_REL_TOL, MAX_SEGMENTS)?;
    Ok(QuadratureReport::from_integral(r))
}
