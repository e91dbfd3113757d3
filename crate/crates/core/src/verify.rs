//! Acceptance checks: closed forms against the quadrature oracle, the limiting
//! laws against the exact curves, and the derived physics features.
//!
//! Each check returns a [`CriterionOutcome`] carrying the measured figure and
//! the tolerance it was held to. Failures are reported, never retried with a
//! looser bound.

use std::f64::consts::PI;
use std::time::Instant;

use serde::Serialize;

use crate::analysis::{
    derivative, find_thermal_equilibrium, short_leading_coefficient_from, DERIVATIVE_STEP,
};
use crate::grid::{linspace, logspace, map_grid, try_map_grid};
use crate::oracle::{
    bose_integral, bose_integral_quadrature, f_integral_oracle, kernel_taylor_coefficient,
    thermal_quadrature, thermal_quadrature_nondispersive, vacuum_split_quadrature, VacuumPart,
};
use crate::specfun::{auxiliary_f, auxiliary_g, bose_sum_p, zeta_even};
use crate::thermal::{
    lifshitz_asymptote, thermal_long_expansion, thermal_potential_exact, thermal_short_expansion,
    thermal_zero_distance_limit, PolygammaConvention, NONDISPERSIVE_CONSTANT,
    SHORT_LEADING_COEFFICIENT,
};
use crate::units::PhysicalConstants;
use crate::vacuum::{nonretarded_asymptote, retarded_asymptote, vacuum_potential};
use crate::{AtomParams, Result, ThermalEnvironment};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Full,
    /// Reduced oracle grids.
    Quick,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub measured: f64,
    pub tolerance: f64,
    pub detail: String,
    /// Set when the criterion documents an unresolved question rather than
    /// a pass/fail agreement.
    pub flag: Option<&'static str>,
    pub seconds: f64,
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let flag = self.flag.map(|f| format!(" [{f}]")).unwrap_or_default();
        format!(
            "criterion {:>2} {verdict}{flag}: {} | measured {:.4e} vs tolerance {:.4e} | {}",
            self.id, self.title, self.measured, self.tolerance, self.detail
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub mode: Mode,
    pub passed: bool,
    pub criteria: Vec<CriterionOutcome>,
}

struct Check {
    id: u8,
    title: &'static str,
    started: Instant,
}

impl Check {
    fn start(id: u8, title: &'static str) -> Self {
        Self {
            id,
            title,
            started: Instant::now(),
        }
    }

    fn finish(
        self,
        passed: bool,
        measured: f64,
        tolerance: f64,
        detail: String,
    ) -> CriterionOutcome {
        CriterionOutcome {
            id: self.id,
            title: self.title,
            passed,
            measured,
            tolerance,
            detail,
            flag: None,
            seconds: self.started.elapsed().as_secs_f64(),
        }
    }
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

// (max, argmax) of f over xs
fn worst(xs: &[f64], errs: &[f64]) -> (f64, f64) {
    xs.iter().zip(errs).fold(
        (0.0, f64::NAN),
        |acc, (&x, &e)| if e > acc.0 { (e, x) } else { acc },
    )
}

fn unit_atom() -> Result<AtomParams> {
    AtomParams::new(1.0, 1.0)
}

fn thermal_setup(theta: f64) -> Result<(AtomParams, ThermalEnvironment)> {
    let atom = AtomParams::new(theta, 1.0)?;
    let env = ThermalEnvironment::from_lambda_t(1.0, &atom)?;
    Ok((atom, env))
}

pub const VACUUM_ORACLE_TOL: f64 = 1e-8;
pub const VACUUM_ORACLE_SECONDS: f64 = 60.0;

pub fn criterion_1(mode: Mode) -> Result<CriterionOutcome> {
    let check = Check::start(1, "vacuum closed form vs oracle");
    let n = if mode == Mode::Full { 50 } else { 12 };
    let atom = unit_atom()?;
    let xs = logspace(0.05, 100.0, n);
    let errs = try_map_grid(&xs, |x0| {
        let z = x0 / 2.0;
        let q = vacuum_split_quadrature(&atom, z, VacuumPart::Total)?;
        Ok::<_, crate::Error>(rel(vacuum_potential(&atom, z)?, q.value))
    })?;
    let (max, at) = worst(&xs, &errs);
    let secs = check.started.elapsed().as_secs_f64();
    let ok = max < VACUUM_ORACLE_TOL && secs < VACUUM_ORACLE_SECONDS;
    Ok(check.finish(
        ok,
        max,
        VACUUM_ORACLE_TOL,
        format!("{n} points x0 in [0.05, 100]; worst at x0 = {at:.4}; {secs:.1} s of {VACUUM_ORACLE_SECONDS} s"),
    ))
}

pub const THERMAL_ORACLE_TOL: f64 = 1e-6;
pub const THERMAL_ORACLE_SECONDS: f64 = 120.0;

pub fn criterion_2(mode: Mode) -> Result<CriterionOutcome> {
    let check = Check::start(2, "thermal closed form vs oracle");
    let n = if mode == Mode::Full { 40 } else { 10 };
    let us = logspace(0.01, 2.0, n);
    let mut max: f64 = 0.0;
    let mut where_ = String::new();
    for theta in [30.0, 100.0, 300.0] {
        let (atom, env) = thermal_setup(theta)?;
        let errs = try_map_grid(&us, |u| {
            let q = thermal_quadrature(&atom, &env, u)?;
            Ok::<_, crate::Error>(rel(thermal_potential_exact(&atom, &env, u)?, q.value))
        })?;
        let (m, at) = worst(&us, &errs);
        if m >= max {
            max = m;
            where_ = format!("theta = {theta}, z/lambda_T = {at:.4}");
        }
    }
    let secs = check.started.elapsed().as_secs_f64();
    let ok = max < THERMAL_ORACLE_TOL && secs < THERMAL_ORACLE_SECONDS;
    Ok(check.finish(
        ok,
        max,
        THERMAL_ORACLE_TOL,
        format!("{n} points z/lambda_T in [0.01, 2] at theta 30, 100, 300; worst at {where_}; {secs:.1} s of {THERMAL_ORACLE_SECONDS} s"),
    ))
}

// Largest grid point at which `errs` stays below `tol` from the start.
fn last_below(xs: &[f64], errs: &[f64], tol: f64) -> Option<f64> {
    xs.iter()
        .zip(errs)
        .take_while(|(_, &e)| e < tol)
        .map(|(&x, _)| x)
        .last()
}

pub const NONRETARDED_TOL: f64 = 0.02;

pub fn criterion_3(_mode: Mode) -> Result<CriterionOutcome> {
    let check = Check::start(3, "non-retarded limit below x0 = 0.1");
    let atom = unit_atom()?;
    // x0 < 0.1, approached from below
    let xs: Vec<f64> = logspace(1e-4, 0.1, 61).into_iter().take(60).collect();
    let errs = try_map_grid(&xs, |x0| {
        let z = x0 / 2.0;
        Ok::<_, crate::Error>(rel(
            nonretarded_asymptote(&atom, z)?,
            vacuum_potential(&atom, z)?,
        ))
    })?;
    let (max, at) = worst(&xs, &errs);
    let fine = logspace(1e-4, 0.1, 400);
    let fine_errs = try_map_grid(&fine, |x0| {
        let z = x0 / 2.0;
        Ok::<_, crate::Error>(rel(
            nonretarded_asymptote(&atom, z)?,
            vacuum_potential(&atom, z)?,
        ))
    })?;
    let edge = last_below(&fine, &fine_errs, NONRETARDED_TOL).unwrap_or(f64::NAN);
    Ok(check.finish(
        max < NONRETARDED_TOL,
        max,
        NONRETARDED_TOL,
        format!("worst at x0 = {at:.4}; error stays below 2% only up to x0 = {edge:.4}"),
    ))
}

pub const RETARDED_TOL: f64 = 0.01;
pub const RETARDED_MIN_Z_OVER_LAMBDA0: f64 = 1.3;

pub fn criterion_4(_mode: Mode) -> Result<CriterionOutcome> {
    let check = Check::start(4, "retarded limit beyond z = 1.3 lambda0");
    let atom = unit_atom()?;
    let lambda0 = atom.lambda0();
    let zs = logspace(RETARDED_MIN_Z_OVER_LAMBDA0 * lambda0, 1000.0 * lambda0, 80);
    let errs = try_map_grid(&zs, |z| {
        Ok::<_, crate::Error>(rel(
            retarded_asymptote(&atom, z)?,
            vacuum_potential(&atom, z)?,
        ))
    })?;
    let (max, at) = worst(&zs, &errs);
    // first z/λ₀ beyond which the error is below 1%
    let onset = zs
        .iter()
        .zip(&errs)
        .rev()
        .take_while(|(_, &e)| e <= RETARDED_TOL)
        .map(|(&z, _)| z / lambda0)
        .last()
        .unwrap_or(f64::NAN);
    Ok(check.finish(
        max <= RETARDED_TOL,
        max,
        RETARDED_TOL,
        format!(
            "worst at z/lambda0 = {:.4}; error is within 1% from z/lambda0 = {onset:.3} on",
            at / lambda0
        ),
    ))
}

pub const LIFSHITZ_TOL: f64 = 0.01;

pub fn criterion_5(_mode: Mode) -> Result<CriterionOutcome> {
    let check = Check::start(5, "Lifshitz limit beyond lambda_T");
    let (atom, env) = thermal_setup(100.0)?;
    let us = logspace(1.0, 20.0, 60);
    let errs = try_map_grid(&us, |u| {
        let total = vacuum_potential(&atom, u)? + thermal_potential_exact(&atom, &env, u)?;
        Ok::<_, crate::Error>(rel(lifshitz_asymptote(&atom, &env, u)?, total))
    })?;
    let (max, at) = worst(&us, &errs);
    Ok(check.finish(
        max < LIFSHITZ_TOL,
        max,
        LIFSHITZ_TOL,
        format!("theta = 100, z/lambda_T in [1, 20]; worst at z/lambda_T = {at:.3}"),
    ))
}

pub const THERMAL_CONSTANT_AGREEMENT: f64 = 1e-3;
pub const THERMAL_CONSTANT_PRINTED: f64 = 1.38;

// the printed value 1.38 carries two decimals
fn printed_precision(v: f64) -> f64 {
    (v * 100.0).round() / 100.0
}

pub fn criterion_6(_mode: Mode) -> Result<CriterionOutcome> {
    let check = Check::start(6, "thermal constant C(T)");
    let (atom, env) = thermal_setup(100.0)?;
    let z = 1e-3;
    let series = thermal_potential_exact(&atom, &env, z)?;
    let quad = thermal_quadrature(&atom, &env, z)?.value;
    let mutual = rel(series, quad);
    let figures_ok = printed_precision(series) == THERMAL_CONSTANT_PRINTED
        && printed_precision(quad) == THERMAL_CONSTANT_PRINTED
        && printed_precision(NONDISPERSIVE_CONSTANT) == THERMAL_CONSTANT_PRINTED;
    Ok(check.finish(
        figures_ok && mutual < THERMAL_CONSTANT_AGREEMENT,
        mutual,
        THERMAL_CONSTANT_AGREEMENT,
        format!(
            "series {series:.7}, quadrature {quad:.7}, 2pi^3/45 = {NONDISPERSIVE_CONSTANT:.7} (hbar c alpha0 / lambda_T^4) at z = 1e-3 lambda_T, theta = 100"
        ),
    ))
}

pub const SHORT_LAW_TOL: f64 = 0.05;
pub const SHORT_LAW_MAX: f64 = 0.05;

pub fn criterion_7(_mode: Mode) -> Result<CriterionOutcome> {
    let check = Check::start(7, "short-distance z^2 law");
    let (atom, env) = thermal_setup(100.0)?;
    let c = thermal_zero_distance_limit(&atom, &env)?;
    let us = linspace(2e-3, SHORT_LAW_MAX, 50);
    let errs = try_map_grid(&us, |u| {
        let law = -SHORT_LEADING_COEFFICIENT * u * u;
        Ok::<_, crate::Error>(rel(law, thermal_potential_exact(&atom, &env, u)? - c))
    })?;
    let (max, at) = worst(&us, &errs);
    let rebuilt = short_leading_coefficient_from(bose_integral(5)?, kernel_taylor_coefficient(1));
    let coeff_err = rel(rebuilt, SHORT_LEADING_COEFFICIENT);
    let coeff_ok = coeff_err <= 4.0 * f64::EPSILON;
    Ok(check.finish(
        max < SHORT_LAW_TOL && coeff_ok,
        max,
        SHORT_LAW_TOL,
        format!(
            "C = V_T(0+) = {c:.7}; worst at z/lambda_T = {at:.4}; 32pi^5/315 rebuilt from kernel Taylor and Bose integral to {coeff_err:.1e}"
        ),
    ))
}

pub const EQUILIBRIUM_PRINTED: f64 = 0.52;
pub const EQUILIBRIUM_TOL: f64 = 0.02;

pub fn criterion_8(_mode: Mode) -> Result<CriterionOutcome> {
    let check = Check::start(8, "thermal equilibrium point");
    let (atom, env) = thermal_setup(100.0)?;
    let eq = find_thermal_equilibrium(&atom, &env)?;
    let off = (eq.z_star_over_lambda_t - EQUILIBRIUM_PRINTED).abs();
    Ok(check.finish(
        off <= EQUILIBRIUM_TOL && eq.is_stable(),
        off,
        EQUILIBRIUM_TOL,
        format!(
            "z*/lambda_T = {:.5}, curvature {:.4} hbar c alpha0 / lambda_T^6",
            eq.z_star_over_lambda_t, eq.second_derivative
        ),
    ))
}

pub fn criterion_9(_mode: Mode) -> Result<CriterionOutcome> {
    let check = Check::start(9, "total force attractive");
    let (atom, env) = thermal_setup(100.0)?;
    let us = logspace(1e-3, 10.0, 200);
    let total = |z: f64| Ok(vacuum_potential(&atom, z)? + thermal_potential_exact(&atom, &env, z)?);
    let slopes = try_map_grid(&us, |u| derivative(&total, u, DERIVATIVE_STEP.min(0.1 * u)))?;
    let bad = slopes.iter().filter(|s| !(**s > 0.0)).count();
    let min_ratio = us
        .iter()
        .zip(&slopes)
        .map(|(u, s)| s * u.powi(4))
        .fold(f64::INFINITY, f64::min);
    Ok(check.finish(
        bad == 0,
        bad as f64,
        0.0,
        format!("200 points z/lambda_T in [1e-3, 10] at theta = 100; smallest slope * (z/lambda_T)^4 = {min_ratio:.3e}"),
    ))
}

pub const SMALLNESS_TOL: f64 = 1e-4;

pub fn criterion_10(_mode: Mode) -> Result<CriterionOutcome> {
    let check = Check::start(10, "thermal part small at 0.1 lambda_T");
    let (atom, env) = thermal_setup(100.0)?;
    let z = 0.1;
    let ratio = (thermal_potential_exact(&atom, &env, z)? / vacuum_potential(&atom, z)?).abs();
    Ok(check.finish(
        ratio < SMALLNESS_TOL,
        ratio,
        SMALLNESS_TOL,
        "|V_T|/|V_0| at z = 0.1 lambda_T, theta = 100; (z/lambda_T)^6 = 1e-6".to_string(),
    ))
}

pub const ROOM_LAMBDA_T_UM: (f64, f64) = (7.55, 7.70);

pub fn criterion_11(_mode: Mode) -> Result<CriterionOutcome> {
    let check = Check::start(11, "thermal length at 300 K");
    let um = PhysicalConstants::default().thermal_length_nm(300.0) / 1000.0;
    let (lo, hi) = ROOM_LAMBDA_T_UM;
    Ok(check.finish(
        (lo..=hi).contains(&um),
        um,
        hi,
        format!("lambda_T(300 K) = {um:.4} um, accepted range [{lo}, {hi}] um"),
    ))
}

pub fn criterion_12(_mode: Mode) -> Result<CriterionOutcome> {
    let check = Check::start(12, "special-function identities");
    let mut fails = Vec::new();

    // P(η) against the direct sum, with a midpoint-rule tail
    let mut p_err: f64 = 0.0;
    for eta in [0.3, 1.0, 2.0, 4.0, 4.5, 10.0] {
        let m = 200_000usize;
        let direct: f64 = (1..=m)
            .rev()
            .map(|k| 1.0 / (1.0 + (k as f64 * eta).powi(2)))
            .sum();
        let tail = (PI / 2.0 - ((m as f64 + 0.5) * eta).atan()) / eta;
        p_err = p_err.max(rel(bose_sum_p(eta)?, direct + tail));
    }
    if p_err >= 1e-10 {
        fails.push("P");
    }

    // 𝒢 = dℱ/dx
    let mut g_err: f64 = 0.0;
    for x in [0.05, 0.5, 1.0, 3.0, 10.0, 30.0] {
        let h = 1e-4 * x;
        let fd = (auxiliary_f(x - 2.0 * h)? - 8.0 * auxiliary_f(x - h)?
            + 8.0 * auxiliary_f(x + h)?
            - auxiliary_f(x + 2.0 * h)?)
            / (12.0 * h);
        g_err = g_err.max(rel(fd, auxiliary_g(x)?));
    }
    if g_err >= 1e-7 {
        fails.push("G");
    }

    // ℱ against its Laplace-integral representation
    let mut f_err: f64 = 0.0;
    for x in [0.1, 0.5, 1.0, 5.0, 20.0, 100.0] {
        f_err = f_err.max(rel(auxiliary_f(x)?, f_integral_oracle(x)?.value));
    }
    if f_err >= 1e-10 {
        fails.push("F");
    }

    let z2 = (zeta_even(1)? - PI * PI / 6.0).abs() / (PI * PI / 6.0);
    let z4 = (zeta_even(2)? - PI.powi(4) / 90.0).abs() / (PI.powi(4) / 90.0);
    if z2 > f64::EPSILON || z4 > f64::EPSILON {
        fails.push("zeta");
    }

    let stefan = PI.powi(4) / 15.0;
    let b3 = rel(bose_integral(3)?, stefan).max(rel(bose_integral_quadrature(3)?.value, stefan));
    if b3 >= 1e-10 {
        fails.push("Bose");
    }

    let measured = p_err.max(f_err).max(b3);
    Ok(check.finish(
        fails.is_empty(),
        measured,
        1e-10,
        format!(
            "P {p_err:.1e}, G vs dF/dx {g_err:.1e}, F vs integral {f_err:.1e}, zeta(2) {z2:.1e}, zeta(4) {z4:.1e}, Bose n=3 {b3:.1e}{}",
            if fails.is_empty() { String::new() } else { format!("; failing: {}", fails.join(", ")) }
        ),
    ))
}

pub const DISPERSION_TOL: f64 = 0.01;

pub fn criterion_13(mode: Mode) -> Result<CriterionOutcome> {
    let check = Check::start(13, "dispersion insensitivity");
    let (atom, env) = thermal_setup(100.0)?;
    let n = if mode == Mode::Full { 40 } else { 12 };
    let us = linspace(0.05, 2.0, n);
    let pairs = try_map_grid(&us, |u| {
        let full = thermal_quadrature(&atom, &env, u)?.value;
        let flat = thermal_quadrature_nondispersive(&atom, &env, u)?.value;
        Ok::<_, crate::Error>((full, flat))
    })?;
    let scale = pairs.iter().map(|p| p.0.abs()).fold(0.0, f64::max);
    let curve_errs: Vec<f64> = pairs.iter().map(|(a, b)| (a - b).abs() / scale).collect();
    let point_errs: Vec<f64> = pairs.iter().map(|(a, b)| rel(*b, *a)).collect();
    let (max, at) = worst(&us, &curve_errs);
    let (pmax, pat) = worst(&us, &point_errs);
    Ok(check.finish(
        max < DISPERSION_TOL,
        max,
        DISPERSION_TOL,
        format!(
            "difference over max|V_T| on z/lambda_T in [0.05, 2], worst at {at:.3}; pointwise worst {pmax:.2e} at {pat:.3}, next to the sign change of V_T"
        ),
    ))
}

pub fn criterion_14(_mode: Mode) -> Result<CriterionOutcome> {
    let check = Check::start(14, "short-distance expansion as printed");
    let (atom, env) = thermal_setup(100.0)?;
    let us = linspace(0.005, 0.049, 12);
    let errs = map_grid(&us, |u| {
        let exact = thermal_potential_exact(&atom, &env, u)?;
        let printed = thermal_short_expansion(&atom, &env, u)?;
        Ok::<_, crate::Error>(rel(printed, exact))
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let (max, at) = worst(&us, &errs);
    let min = errs.iter().cloned().fold(f64::INFINITY, f64::min);

    let u = 1.0;
    let exact = thermal_potential_exact(&atom, &env, u)?;
    let gauss = rel(
        thermal_long_expansion(&atom, &env, u, PolygammaConvention::Gauss)?,
        exact,
    );
    let modern = rel(
        thermal_long_expansion(&atom, &env, u, PolygammaConvention::Modern)?,
        exact,
    );

    let mut outcome = check.finish(
        true,
        max,
        f64::NAN,
        format!(
            "printed short expansion vs exact on z/lambda_T in [0.005, 0.049]: relative discrepancy {min:.3e} to {max:.3e} (worst at {at:.4}); long expansion at lambda_T: Gauss polygamma {gauss:.2e}, modern polygamma {modern:.2e}"
        ),
    );
    outcome.flag = Some("open question");
    Ok(outcome)
}

pub type CriterionFn = fn(Mode) -> Result<CriterionOutcome>;

pub const CRITERIA: [CriterionFn; 14] = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
    criterion_11,
    criterion_12,
    criterion_13,
    criterion_14,
];

/// Runs every criterion. A criterion that errors is reported as failed.
pub fn run(mode: Mode) -> VerificationReport {
    let criteria: Vec<CriterionOutcome> = CRITERIA
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let started = Instant::now();
            f(mode).unwrap_or_else(|e| CriterionOutcome {
                id: i as u8 + 1,
                title: "evaluation error",
                passed: false,
                measured: f64::NAN,
                tolerance: f64::NAN,
                detail: e.to_string(),
                flag: None,
                seconds: started.elapsed().as_secs_f64(),
            })
        })
        .collect();
    VerificationReport {
        mode,
        passed: criteria.iter().all(|c| c.passed),
        criteria,
    }
}
