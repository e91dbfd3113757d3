//! Features of the potential curves: the thermal equilibrium point, the
//! vacuum/thermal dominance crossover, harmonic fits and approximation errors.
//!
//! Derivatives are 5-point central differences with step
//! [`DERIVATIVE_STEP`]·λ_T.

use std::f64::consts::PI;

use serde::Serialize;

use crate::grid::{linspace, try_map_grid};
use crate::thermal::{
    lifshitz_asymptote, thermal_long_expansion, thermal_potential_exact,
    thermal_zero_distance_limit, PolygammaConvention, LONG_EXPANSION_MIN,
    SHORT_LEADING_COEFFICIENT,
};
use crate::vacuum::{nonretarded_asymptote, retarded_asymptote, vacuum_potential};
use crate::{AtomParams, Error, Result, ThermalEnvironment};

/// Finite-difference step in units of λ_T.
pub const DERIVATIVE_STEP: f64 = 1e-4;

/// Search interval for the equilibrium, in units of λ_T.
pub const EQUILIBRIUM_BRACKET: (f64, f64) = (0.3, 0.7);

/// Search interval for the dominance crossover, in units of λ_T.
pub const CROSSOVER_BRACKET: (f64, f64) = (0.5, 3.0);

/// The two windows, in units of λ_T, where V_T looks like a parabola.
pub const HARMONIC_WINDOWS: [(f64, f64); 2] = [(0.2, 0.45), (0.5, 0.75)];

pub const MIN_FIT_POINTS: usize = 20;
pub const DEFAULT_FIT_POINTS: usize = 41;

/// Absolute tolerance of root searches, in units of λ_T.
pub const ROOT_TOLERANCE: f64 = 1e-8;

const MAX_ROOT_ITERATIONS: usize = 200;

/// Brent's method on a bracket where `f` changes sign.
///
/// Returns the root and the number of function evaluations.
pub fn brent<F>(what: &'static str, mut f: F, lo: f64, hi: f64, tol: f64) -> Result<(f64, usize)>
where
    F: FnMut(f64) -> Result<f64>,
{
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a)?, f(b)?);
    if fa == 0.0 {
        return Ok((a, 2));
    }
    if fb == 0.0 {
        return Ok((b, 2));
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoSignChange { what, lo, hi });
    }
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;
    for evals in (3..).take(MAX_ROOT_ITERATIONS) {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * tol;
        let m = 0.5 * (c - b);
        if m.abs() <= tol1 || fb == 0.0 {
            return Ok((b, evals - 1));
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                (2.0 * m * s, 1.0 - s)
            } else {
                let q = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0)),
                    (q - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            if 2.0 * p < (3.0 * m * q - (tol1 * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = d;
            }
        } else {
            d = m;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(m) };
        fb = f(b)?;
    }
    Err(Error::Convergence {
        what,
        steps: MAX_ROOT_ITERATIONS,
        estimate: (c - b).abs(),
    })
}

/// 5-point central first derivative.
pub fn derivative<F>(f: &F, x: f64, h: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let (m2, m1, p1, p2) = (f(x - 2.0 * h)?, f(x - h)?, f(x + h)?, f(x + 2.0 * h)?);
    Ok((m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h))
}

/// 5-point central second derivative.
pub fn second_derivative<F>(f: &F, x: f64, h: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let (m2, m1, c, p1, p2) = (
        f(x - 2.0 * h)?,
        f(x - h)?,
        f(x)?,
        f(x + h)?,
        f(x + 2.0 * h)?,
    );
    Ok((-m2 + 16.0 * m1 - 30.0 * c + 16.0 * p1 - p2) / (12.0 * h * h))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CurvatureSign {
    Positive,
    Negative,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquilibriumResult {
    pub z_star_over_lambda_t: f64,
    /// d²V/du² at u*.
    pub second_derivative: f64,
    pub second_derivative_sign: CurvatureSign,
    /// Search interval in units of λ_T.
    pub bracket: (f64, f64),
    pub iterations: usize,
}

impl EquilibriumResult {
    pub fn is_stable(&self) -> bool {
        self.second_derivative_sign == CurvatureSign::Positive
    }
}

fn require_finite_temperature(what: &'static str, env: &ThermalEnvironment) -> Result<()> {
    if env.is_vacuum() {
        return Err(Error::Validity {
            what,
            detail: "needs a finite temperature".into(),
        });
    }
    Ok(())
}

/// Stationary point of V_T in [0.3, 0.7]λ_T, from the exact series.
/// Curvature is in ħcα₀/λ_T⁶.
pub fn find_thermal_equilibrium(
    atom: &AtomParams,
    env: &ThermalEnvironment,
) -> Result<EquilibriumResult> {
    require_finite_temperature("find_thermal_equilibrium", env)?;
    let scale = env.lambda_t.powi(4) / atom.alpha0;
    find_equilibrium_with(
        |u| thermal_potential_exact(atom, env, u * env.lambda_t).map(|v| v * scale),
        EQUILIBRIUM_BRACKET,
    )
}

/// Stationary point of a potential `v(u)` given as a function of u = z/λ_T,
/// searched inside `bracket`. Curvature is reported in the units of `v` per λ_T².
pub fn find_equilibrium_with<F>(v: F, bracket: (f64, f64)) -> Result<EquilibriumResult>
where
    F: Fn(f64) -> Result<f64>,
{
    let (lo, hi) = bracket;
    if !(lo > 2.0 * DERIVATIVE_STEP && hi > lo) {
        return Err(Error::domain(
            "find_equilibrium_with",
            lo,
            "need 0 < lo < hi",
        ));
    }
    let slope = |u: f64| derivative(&v, u, DERIVATIVE_STEP);
    let (u, evals) = brent("thermal equilibrium", slope, lo, hi, ROOT_TOLERANCE)?;
    let curvature = second_derivative(&v, u, DERIVATIVE_STEP)?;
    Ok(EquilibriumResult {
        z_star_over_lambda_t: u,
        second_derivative: curvature,
        second_derivative_sign: if curvature > 0.0 {
            CurvatureSign::Positive
        } else {
            CurvatureSign::Negative
        },
        bracket,
        iterations: evals,
    })
}

/// Distance where |V_T| = |V₀|, by root search on ln|V_T| − ln|V₀| over
/// [0.5, 3]λ_T. Returned in the atom's length unit.
pub fn dominance_crossover(atom: &AtomParams, env: &ThermalEnvironment) -> Result<f64> {
    require_finite_temperature("dominance_crossover", env)?;
    let log_ratio = |u: f64| -> Result<f64> {
        let z = u * env.lambda_t;
        let vt = thermal_potential_exact(atom, env, z)?;
        let v0 = vacuum_potential(atom, z)?;
        Ok(vt.abs().ln() - v0.abs().ln())
    };
    let (lo, hi) = CROSSOVER_BRACKET;
    let (u, _) = brent("dominance crossover", log_ratio, lo, hi, ROOT_TOLERANCE)?;
    Ok(u * env.lambda_t)
}

/// Least-squares parabola a + b·u + c·u² through V_T samples, u = z/λ_T and
/// V_T in ħcα₀/λ_T⁴.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadraticFit {
    pub window: (f64, f64),
    pub coefficients: (f64, f64, f64),
    /// RMS residual over the spread of the sampled values.
    pub rms_residual_relative: f64,
    pub points: usize,
}

impl QuadraticFit {
    /// Abscissa of the parabola's extremum.
    pub fn vertex(&self) -> f64 {
        let (_, b, c) = self.coefficients;
        -b / (2.0 * c)
    }

    pub fn eval(&self, u: f64) -> f64 {
        let (a, b, c) = self.coefficients;
        a + u * (b + u * c)
    }
}

/// Unweighted least-squares quadratic through `(us[i], vs[i])`.
///
/// The abscissae are mapped onto [−1, 1] before the normal equations are
/// formed, and the result is mapped back.
pub fn fit_quadratic(us: &[f64], vs: &[f64]) -> Result<QuadraticFit> {
    let n = us.len();
    if n != vs.len() || n < 3 {
        return Err(Error::IllConditioned {
            what: "fit_quadratic",
            detail: format!("{n} abscissae for {} values", vs.len()),
        });
    }
    let lo = us.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = us.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mid = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    if !(half > 1e-12 * mid.abs().max(1.0)) {
        return Err(Error::IllConditioned {
            what: "fit_quadratic",
            detail: format!("window [{lo}, {hi}] has no width"),
        });
    }

    // normal equations in t = (u − mid)/half
    let mut m = [[0.0f64; 3]; 3];
    let mut r = [0.0f64; 3];
    for (&u, &v) in us.iter().zip(vs) {
        let t = (u - mid) / half;
        let basis = [1.0, t, t * t];
        for i in 0..3 {
            r[i] += basis[i] * v;
            for j in 0..3 {
                m[i][j] += basis[i] * basis[j];
            }
        }
    }
    let [p, q, s] = solve3(m, r)?;

    // p + q t + s t² with t = (u − mid)/half
    let c = s / (half * half);
    let b = q / half - 2.0 * mid * c;
    let a = p - q * mid / half + s * mid * mid / (half * half);

    let fit = |u: f64| {
        let t = (u - mid) / half;
        p + t * (q + t * s)
    };
    let sq: f64 = us.iter().zip(vs).map(|(&u, &v)| (v - fit(u)).powi(2)).sum();
    let vmin = vs.iter().cloned().fold(f64::INFINITY, f64::min);
    let vmax = vs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let spread = vmax - vmin;
    let rms = (sq / n as f64).sqrt();
    Ok(QuadraticFit {
        window: (lo, hi),
        coefficients: (a, b, c),
        rms_residual_relative: if spread > 0.0 { rms / spread } else { rms },
        points: n,
    })
}

// Gaussian elimination with partial pivoting.
fn solve3(mut m: [[f64; 3]; 3], mut r: [f64; 3]) -> Result<[f64; 3]> {
    let scale = m.iter().flatten().fold(0.0f64, |acc, v| acc.max(v.abs()));
    for col in 0..3 {
        let pivot = (col..3)
            .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
            .unwrap_or(col);
        if m[pivot][col].abs() <= 1e-12 * scale {
            return Err(Error::IllConditioned {
                what: "fit_quadratic",
                detail: "normal equations are singular".into(),
            });
        }
        m.swap(col, pivot);
        r.swap(col, pivot);
        let (top, rest) = m.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for (i, row) in rest.iter_mut().enumerate() {
            let f = row[col] / pivot_row[col];
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= f * p;
            }
            r[col + 1 + i] -= f * r[col];
        }
    }
    let mut x = [0.0; 3];
    for row in (0..3).rev() {
        let tail: f64 = (row + 1..3).map(|k| m[row][k] * x[k]).sum();
        x[row] = (r[row] - tail) / m[row][row];
    }
    Ok(x)
}

/// Harmonic fit of V_T on `window` (units of λ_T) with `points` samples.
pub fn quadratic_fit(
    atom: &AtomParams,
    env: &ThermalEnvironment,
    window: (f64, f64),
    points: usize,
) -> Result<QuadraticFit> {
    require_finite_temperature("quadratic_fit", env)?;
    let (lo, hi) = window;
    if !(lo > 0.0 && hi <= 1.5 && lo < hi) {
        return Err(Error::Validity {
            what: "quadratic_fit",
            detail: format!("window ({lo}, {hi}) must lie inside (0, 1.5) lambda_T"),
        });
    }
    if points < MIN_FIT_POINTS {
        return Err(Error::Validity {
            what: "quadratic_fit",
            detail: format!("{points} samples, need at least {MIN_FIT_POINTS}"),
        });
    }
    let us = linspace(lo, hi, points);
    let scale = env.lambda_t.powi(4) / atom.alpha0;
    let vs = try_map_grid(&us, |u| {
        thermal_potential_exact(atom, env, u * env.lambda_t).map(|v| v * scale)
    })?;
    fit_quadratic(&us, &vs)
}

/// Relative errors of the approximations at one distance. `None` where an
/// approximation does not apply.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegimeErrorRow {
    pub z: f64,
    pub x0: f64,
    pub z_over_lambda_t: Option<f64>,
    pub nonretarded: f64,
    pub retarded: f64,
    /// Error of the z² law on V_T − V_T(0⁺).
    pub short_leading: Option<f64>,
    pub long_expansion: Option<f64>,
    /// Lifshitz asymptote against the total potential.
    pub lifshitz: Option<f64>,
}

fn rel_err(approx: f64, exact: f64) -> f64 {
    ((approx - exact) / exact).abs()
}

/// Approximation errors on an ascending grid of distances.
pub fn regime_error_table(
    atom: &AtomParams,
    env: &ThermalEnvironment,
    grid: &[f64],
) -> Result<Vec<RegimeErrorRow>> {
    if grid.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::domain(
            "regime_error_table",
            f64::NAN,
            "grid must be strictly ascending",
        ));
    }
    let limit = thermal_zero_distance_limit(atom, env)?;
    try_map_grid(grid, |z| {
        let v0 = vacuum_potential(atom, z)?;
        let mut row = RegimeErrorRow {
            z,
            x0: 2.0 * atom.k0 * z,
            z_over_lambda_t: None,
            nonretarded: rel_err(nonretarded_asymptote(atom, z)?, v0),
            retarded: rel_err(retarded_asymptote(atom, z)?, v0),
            short_leading: None,
            long_expansion: None,
            lifshitz: None,
        };
        if env.is_vacuum() {
            return Ok(row);
        }
        let u = z / env.lambda_t;
        let vt = thermal_potential_exact(atom, env, z)?;
        let law = -SHORT_LEADING_COEFFICIENT * u * u * atom.alpha0 / env.lambda_t.powi(4);
        row.z_over_lambda_t = Some(u);
        row.short_leading = Some(rel_err(law, vt - limit));
        if u >= LONG_EXPANSION_MIN {
            let long = thermal_long_expansion(atom, env, z, PolygammaConvention::Gauss)?;
            row.long_expansion = Some(rel_err(long, vt));
        }
        row.lifshitz = Some(rel_err(lifshitz_asymptote(atom, env, z)?, v0 + vt));
        Ok(row)
    })
}

/// Short-distance curvature coefficient 32π⁵/315 in ħcα₀/λ_T⁶, rebuilt from
/// the kernel's Taylor coefficient −1/10 and the Bose integral Γ(6)ζ(6).
///
/// V_T ≈ (2/π)∫k³α₀ n(k)[G(0) + G₂(2kz)²]dk gives the z² term
/// (2/π)·G₂·4·Γ(6)ζ(6) in units of α₀z²/λ_T⁶.
pub fn short_leading_coefficient_from(bose5: f64, kernel_x2: f64) -> f64 {
    -(2.0 / PI) * kernel_x2 * 4.0 * bose5
}
