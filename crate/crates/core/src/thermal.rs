//! Finite-temperature correction V_T(z) and its approximations.
//!
//! In terms of η = λ_T/2z and x₀ = 2k₀z (so ηx₀ = θ = k₀λ_T),
//!
//! V_T = (ħc/8π)(α₀k₀/z³) [(x₀² − 2)𝒦₀ + 2𝒦₁ − 2x₀P(η)],
//!
//! where 𝒦₀ and 𝒦₁ are built from the E1 sums 𝒥₀^(±). The exact series is the
//! reference for every approximation in this module.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::specfun::{
    bose_sum_p, hurwitz_zeta_scaled, ln_factorial, polygamma_scaled, q_series, scaled_e1_pair,
    zeta_even, ComplexValue, ZETA_EVEN_MAX,
};
use crate::units::{AtomParams, ThermalEnvironment, MIN_THETA};
use crate::vacuum::{check_distance, classify_regime, vacuum_potential, Regime};
use crate::{Error, Result};

/// 2π³/45: V_T(0⁺) λ_T⁴/ħcα₀ without dispersion.
pub const NONDISPERSIVE_CONSTANT: f64 = 2.0 * PI * PI * PI / 45.0;

/// (2π)⁵/315, the z² coefficient of the short-distance law.
pub const SHORT_LEADING_COEFFICIENT: f64 = 32.0 * PI * PI * PI * PI * PI / 315.0;

/// z/λ_T at or below which [`thermal_short_leading`] is the auto choice.
pub const SHORT_LEADING_MAX: f64 = 0.05;
/// z/λ_T below which [`thermal_short_expansion`] is accepted.
pub const SHORT_EXPANSION_MAX: f64 = 0.2;
/// z/λ_T from which [`thermal_long_expansion`] is accepted.
pub const LONG_EXPANSION_MIN: f64 = 0.5;
/// z/λ_T from which the auto mode uses the long-distance expansion.
pub const LONG_AUTO_MIN: f64 = 1.0;

const TAIL_ORDER_CAP: u32 = 400;

/// The pieces of the exact series at one (η, x₀).
///
/// Re 𝒥₀^(±) diverge logarithmically term by term, so the two sums are
/// reported with the real parts of their 1/w_m leading terms removed. The
/// removed pieces cancel in 𝒦₀ and 𝒦₁, which are therefore exact.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThermalSeriesTerms {
    #[serde(skip)]
    pub j0_plus: ComplexValue,
    #[serde(skip)]
    pub j0_minus: ComplexValue,
    pub k0_val: f64,
    pub k1_val: f64,
    pub p_val: f64,
    /// (x₀² − 2)𝒦₀ + 2𝒦₁ − 2x₀P, assembled without the large cancelling pieces.
    pub bracket: f64,
    /// Direct m-terms plus asymptotic tail orders used.
    pub terms_used: usize,
    /// Size of the first omitted tail term, in bracket units.
    pub tail_bound: f64,
}

/// Sums 𝒥₀^(+) and 𝒥₀^(−) for ηx₀ ≥ 10.
///
/// m ≤ M = max(2, ⌈60/θ⌉) are summed directly with w_m = (mη − i)x₀ and the
/// paired combinations Ẽ1(w) ± Ẽ1(−w). For m > M every term is expanded in
/// 1/w_m and the m-sums become Hurwitz zeta values at M + 1 − i/η.
pub fn j0_series(eta: f64, x0: f64) -> Result<ThermalSeriesTerms> {
    if !(eta > 0.0 && eta.is_finite()) {
        return Err(Error::domain("j0_series", eta, "need 0 < eta < inf"));
    }
    if !(x0 > 0.0 && x0.is_finite()) {
        return Err(Error::domain("j0_series", x0, "need 0 < x0 < inf"));
    }
    let theta = eta * x0;
    if theta < MIN_THETA * (1.0 - 1e-12) {
        return Err(Error::domain("j0_series", theta, "need eta * x0 >= 10"));
    }

    let direct = ((60.0 / theta).ceil() as usize).max(2);
    let mut s_sum = Complex64::new(0.0, 0.0);
    let mut r_sum = Complex64::new(0.0, 0.0);
    for m in 1..=direct {
        let (s, r) = scaled_e1_pair(Complex64::new(m as f64 * theta, -x0))?;
        s_sum += s;
        r_sum += r;
    }

    // Σ_{m>M} w_m^{-(k+1)} = θ^{-(k+1)} ζ(k+1, M+1 − i/η)
    let a = Complex64::new(direct as f64 + 1.0, -1.0 / eta);
    let ln_theta = theta.ln();
    let mut last = f64::INFINITY;
    let mut tail_bound = 0.0;
    let mut orders = 0usize;
    for k in 1..=TAIL_ORDER_CAP {
        let t = hurwitz_zeta_scaled(k + 1, a, (k + 1) as f64 * ln_theta - ln_factorial(k))?;
        let mag = t.norm();
        if mag > last {
            tail_bound = mag;
            break;
        }
        if k % 2 == 1 {
            s_sum -= 2.0 * t;
        } else {
            r_sum += 2.0 * t;
        }
        orders += 1;
        last = mag;
        let scale = s_sum.norm().max(r_sum.norm());
        if k >= 2 && mag <= f64::EPSILON * 1e-2 * scale {
            tail_bound = mag;
            break;
        }
        if k == TAIL_ORDER_CAP {
            return Err(Error::Convergence {
                what: "j0_series tail",
                steps: TAIL_ORDER_CAP as usize,
                estimate: mag,
            });
        }
    }

    let p = bose_sum_p(eta)?;
    let bose = 1.0 / theta.exp_m1();
    let pole = Complex64::new(0.0, PI) * Complex64::from_polar(1.0, x0) * bose;

    let k0_reduced = r_sum.im - pole.im;
    let k1 = -x0 * (s_sum + pole).re;
    let bracket = (x0 * x0 - 2.0) * k0_reduced + 2.0 * k1 - 4.0 * p / x0;

    let half = 0.5;
    let i_p = Complex64::new(0.0, p / x0);
    Ok(ThermalSeriesTerms {
        j0_plus: half * (s_sum + r_sum) + i_p,
        j0_minus: pole + half * (s_sum - r_sum) - i_p,
        k0_val: k0_reduced + 2.0 * p / x0,
        k1_val: k1,
        p_val: p,
        bracket,
        terms_used: direct + orders,
        tail_bound: tail_bound * (x0 * x0 - 2.0).abs().max(2.0 * x0),
    })
}

fn thermal_args(atom: &AtomParams, env: &ThermalEnvironment, z: f64) -> (f64, f64) {
    let x0 = 2.0 * atom.k0 * z;
    (env.lambda_t / (2.0 * z), x0)
}

/// Exact thermal correction V_T(z), in ħc/length. Zero in the vacuum.
pub fn thermal_potential_exact(atom: &AtomParams, env: &ThermalEnvironment, z: f64) -> Result<f64> {
    check_distance("thermal_potential_exact", z)?;
    if env.is_vacuum() {
        return Ok(0.0);
    }
    let (eta, x0) = thermal_args(atom, env, z);
    let terms = j0_series(eta, x0)?;
    Ok(atom.alpha0 * atom.k0 / (8.0 * PI * z.powi(3)) * terms.bracket)
}

// ln[(2j−1)! ζ(2j) / θ^{2j}]
fn ln_bose_moment(j: u32, ln_theta: f64) -> Result<f64> {
    let zeta = if j <= ZETA_EVEN_MAX {
        zeta_even(j)?
    } else {
        1.0
    };
    Ok(ln_factorial(2 * j - 1) + zeta.ln() - 2.0 * j as f64 * ln_theta)
}

// Index of the smallest Bose moment for j in 2..=cap; they fall until 2j ≈ θ.
fn smallest_moment_index(cap: u32, ln_theta: f64) -> Result<u32> {
    let mut best = 2;
    let mut prev = ln_bose_moment(2, ln_theta)?;
    for j in 3..=cap {
        let v = ln_bose_moment(j, ln_theta)?;
        if v >= prev {
            break;
        }
        best = j;
        prev = v;
    }
    Ok(best)
}

/// lim_{z→0⁺} V_T(z), in ħc/length:
/// (2θ⁴/3π) Σ_{j≥2} (2j−1)! ζ(2j)/θ^{2j} · α₀/λ_T⁴, cut at its smallest term.
///
/// The omitted remainder is of order e^{−θ}.
pub fn thermal_zero_distance_limit(atom: &AtomParams, env: &ThermalEnvironment) -> Result<f64> {
    if env.is_vacuum() {
        return Ok(0.0);
    }
    let theta = env.theta;
    let ln_theta = theta.ln();
    let last = smallest_moment_index(theta.ceil() as u32, ln_theta)?;
    let mut sum = 0.0;
    for j in (2..=last).rev() {
        sum += (ln_bose_moment(j, ln_theta)? + 4.0 * ln_theta).exp();
    }
    Ok(atom.alpha0 / env.lambda_t.powi(4) * 2.0 * sum / (3.0 * PI))
}

/// Leading short-distance law C(T) − (2π)⁵/315 · ħcα₀z²/λ_T⁶ with the
/// dispersion-free C(T) = 2π³/45 · ħcα₀/λ_T⁴.
pub fn thermal_short_leading(atom: &AtomParams, env: &ThermalEnvironment, z: f64) -> Result<f64> {
    if !(z >= 0.0 && z.is_finite()) {
        return Err(Error::domain("thermal_short_leading", z, "need z >= 0"));
    }
    if env.is_vacuum() {
        return Ok(0.0);
    }
    let u = z / env.lambda_t;
    Ok(atom.alpha0 / env.lambda_t.powi(4)
        * (NONDISPERSIVE_CONSTANT - SHORT_LEADING_COEFFICIENT * u * u))
}

fn require_thermal(what: &'static str, env: &ThermalEnvironment) -> Result<()> {
    if env.is_vacuum() {
        Err(Error::Validity {
            what,
            detail: "needs a finite temperature".into(),
        })
    } else {
        Ok(())
    }
}

/// Short-distance expansion V_T = (ħc/2π)(α₀k₀²/z²)ℋ_T(x₀, η), valid for z < 0.2λ_T.
///
/// ℋ_T = Q(η) + Σ_{m≥2} (−1)^m x₀^{2m−1}/(2m−1)! [2/x₀ − x₀(1 − 1/m)] Σ_{j=m}^{N} (2j−1)!ζ(2j)/θ^{2j}.
/// The inner sums are asymptotic; N is the index of their smallest term,
/// capped at ⌈θ⌉.
pub fn thermal_short_expansion(atom: &AtomParams, env: &ThermalEnvironment, z: f64) -> Result<f64> {
    check_distance("thermal_short_expansion", z)?;
    require_thermal("thermal_short_expansion", env)?;
    let u = z / env.lambda_t;
    if u >= SHORT_EXPANSION_MAX {
        return Err(Error::Validity {
            what: "thermal_short_expansion",
            detail: format!("z/lambda_T = {u} is not below {SHORT_EXPANSION_MAX}"),
        });
    }
    let (eta, x0) = thermal_args(atom, env, z);
    let ln_theta = env.theta.ln();
    let n = smallest_moment_index(env.theta.ceil() as u32, ln_theta)?;

    // inner[m] = Σ_{j=m}^{n} moments, as suffix sums
    let mut inner = vec![0.0; n as usize + 2];
    for j in (2..=n).rev() {
        inner[j as usize] = inner[j as usize + 1] + ln_bose_moment(j, ln_theta)?.exp();
    }
    let ln_x0 = x0.ln();
    let mut double_sum = 0.0;
    for m in (2..=n).rev() {
        let mf = m as f64;
        let ln_pre = (2.0 * mf - 1.0) * ln_x0 - ln_factorial(2 * m - 1);
        let factor = 2.0 / x0 - x0 * (1.0 - 1.0 / mf);
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        double_sum += sign * (ln_pre + inner[m as usize].ln()).exp() * factor;
    }
    let h_t = q_series(eta)? + double_sum;
    Ok(atom.alpha0 * atom.k0 * atom.k0 / (2.0 * PI * z * z) * h_t)
}

/// Reading of the polygamma symbol 𝖥^(m)(x) in the long-distance expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PolygammaConvention {
    /// Gauss's notation, 𝖥^(m)(x) = ψ^(m)(1 + x). Agrees with the exact series.
    #[default]
    Gauss,
    /// 𝖥^(m)(x) = ψ^(m)(x).
    Modern,
}

/// Long-distance expansion V_T = (ħc/2π)(α₀k₀/z³)ℒ_T(x₀, η), valid for z ≥ 0.5λ_T.
///
/// ℒ_T = −P(η)/x₀ + (1 − x₀²/2) Σ_j Im 𝖥^(2j)(−i/η)/θ^{2j+1} + x₀ Σ_j Re 𝖥^(2j−1)(−i/η)/θ^{2j}.
/// Both sums stop at their smallest term, and at j = ⌈θ⌉ at the latest.
pub fn thermal_long_expansion(
    atom: &AtomParams,
    env: &ThermalEnvironment,
    z: f64,
    convention: PolygammaConvention,
) -> Result<f64> {
    check_distance("thermal_long_expansion", z)?;
    require_thermal("thermal_long_expansion", env)?;
    let u = z / env.lambda_t;
    if u < LONG_EXPANSION_MIN {
        return Err(Error::Validity {
            what: "thermal_long_expansion",
            detail: format!("z/lambda_T = {u} is below {LONG_EXPANSION_MIN}"),
        });
    }
    let (eta, x0) = thermal_args(atom, env, z);
    let shift = match convention {
        PolygammaConvention::Gauss => 1.0,
        PolygammaConvention::Modern => 0.0,
    };
    let arg = Complex64::new(shift, -1.0 / eta);
    let ln_theta = env.theta.ln();
    let cap = env.theta.ceil() as u32;

    let odd = asymptotic_polygamma_sum(cap, |j| {
        polygamma_scaled(2 * j, arg, (2 * j + 1) as f64 * ln_theta)
    })?;
    let even = asymptotic_polygamma_sum(cap, |j| {
        polygamma_scaled(2 * j - 1, arg, 2.0 * j as f64 * ln_theta)
    })?;
    let l_t = -bose_sum_p(eta)? / x0 + (1.0 - x0 * x0 / 2.0) * odd.im + x0 * even.re;
    Ok(atom.alpha0 * atom.k0 / (2.0 * PI * z.powi(3)) * l_t)
}

// Σ_{j=1}^{cap} term(j), stopped before the first term larger than its predecessor.
fn asymptotic_polygamma_sum(
    cap: u32,
    term: impl Fn(u32) -> Result<Complex64>,
) -> Result<Complex64> {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut last = f64::INFINITY;
    for j in 1..=cap {
        let t = term(j)?;
        let mag = t.norm();
        if mag > last {
            break;
        }
        sum += t;
        if mag <= f64::EPSILON * 1e-2 * sum.norm() {
            break;
        }
        last = mag;
    }
    Ok(sum)
}

/// Total large-distance asymptote −k_BTα₀/(4z³) = −ħcα₀/(4λ_T z³).
pub fn lifshitz_asymptote(atom: &AtomParams, env: &ThermalEnvironment, z: f64) -> Result<f64> {
    check_distance("lifshitz_asymptote", z)?;
    Ok(-atom.alpha0 / (4.0 * env.lambda_t * z.powi(3)))
}

/// Approximation picked by [`auto_thermal`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ThermalApproximation {
    Vacuum,
    ShortLeading,
    ExactSeries,
    LongExpansion,
}

impl ThermalApproximation {
    pub fn as_str(self) -> &'static str {
        match self {
            ThermalApproximation::Vacuum => "vacuum",
            ThermalApproximation::ShortLeading => "short_leading",
            ThermalApproximation::ExactSeries => "exact_series",
            ThermalApproximation::LongExpansion => "long_expansion",
        }
    }
}

/// Thermal correction from the approximation declared valid at `z`:
/// short-distance law up to 0.05λ_T, exact series below λ_T, long-distance
/// expansion beyond.
pub fn auto_thermal(
    atom: &AtomParams,
    env: &ThermalEnvironment,
    z: f64,
) -> Result<(ThermalApproximation, f64)> {
    check_distance("auto_thermal", z)?;
    if env.is_vacuum() {
        return Ok((ThermalApproximation::Vacuum, 0.0));
    }
    let u = z / env.lambda_t;
    if u <= SHORT_LEADING_MAX {
        Ok((
            ThermalApproximation::ShortLeading,
            thermal_short_leading(atom, env, z)?,
        ))
    } else if u < LONG_AUTO_MIN {
        Ok((
            ThermalApproximation::ExactSeries,
            thermal_potential_exact(atom, env, z)?,
        ))
    } else {
        let v = thermal_long_expansion(atom, env, z, PolygammaConvention::Gauss)?;
        Ok((ThermalApproximation::LongExpansion, v))
    }
}

/// V(z, T) = V₀(z) + V_T(z) with the exact forms of both.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PotentialBreakdown {
    pub z: f64,
    pub vacuum: f64,
    pub thermal: f64,
    pub total: f64,
    pub regime: Regime,
    pub notes: String,
}

pub fn total_potential(
    atom: &AtomParams,
    env: &ThermalEnvironment,
    z: f64,
) -> Result<PotentialBreakdown> {
    let vacuum = vacuum_potential(atom, z)?;
    let thermal = thermal_potential_exact(atom, env, z)?;
    let regime = classify_regime(2.0 * atom.k0 * z)?;
    let mut notes = format!("vacuum regime {}", regime.as_str());
    if !env.is_vacuum() {
        let u = z / env.lambda_t;
        let side = if thermal.abs() > vacuum.abs() {
            "thermal term dominates"
        } else {
            "vacuum term dominates"
        };
        notes.push_str(&format!("; z/lambda_T = {u:.6}; {side}"));
    }
    Ok(PotentialBreakdown {
        z,
        vacuum,
        thermal,
        total: vacuum + thermal,
        regime,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(theta: f64) -> (AtomParams, ThermalEnvironment) {
        let atom = AtomParams::new(theta, 1.0).unwrap();
        let env = ThermalEnvironment::from_lambda_t(1.0, &atom).unwrap();
        (atom, env)
    }

    #[test]
    fn composed_fields_are_consistent() {
        let t = j0_series(1.0, 100.0).unwrap();
        assert!(((t.j0_plus - t.j0_minus).im - t.k0_val).abs() <= 1e-15 * t.k0_val.abs().max(1.0));
        assert!((-100.0 * (t.j0_plus + t.j0_minus).re - t.k1_val).abs() <= 1e-12 * t.k1_val.abs());
        let direct = (1e4 - 2.0) * t.k0_val + 2.0 * t.k1_val - 200.0 * t.p_val;
        assert!((direct - t.bracket).abs() < 1e-9 * direct.abs().max(t.bracket.abs()) + 1e-12);
    }

    #[test]
    fn theta_floor_enforced() {
        assert!(j0_series(1.0, 9.0).is_err());
    }

    #[test]
    fn vacuum_has_no_thermal_part() {
        let atom = AtomParams::new(1.0, 1.0).unwrap();
        let env = ThermalEnvironment::vacuum();
        assert_eq!(thermal_potential_exact(&atom, &env, 0.3).unwrap(), 0.0);
        let b = total_potential(&atom, &env, 0.3).unwrap();
        assert_eq!(b.total, b.vacuum);
    }

    #[test]
    fn validity_windows() {
        let (atom, env) = setup(100.0);
        assert!(thermal_short_expansion(&atom, &env, 0.2).is_err());
        assert!(thermal_short_expansion(&atom, &env, 0.19).is_ok());
        assert!(thermal_long_expansion(&atom, &env, 0.49, PolygammaConvention::Gauss).is_err());
        assert!(thermal_long_expansion(&atom, &env, 0.5, PolygammaConvention::Gauss).is_ok());
    }

    #[test]
    fn auto_mode_windows() {
        let (atom, env) = setup(100.0);
        assert_eq!(
            auto_thermal(&atom, &env, 0.05).unwrap().0,
            ThermalApproximation::ShortLeading
        );
        assert_eq!(
            auto_thermal(&atom, &env, 0.5).unwrap().0,
            ThermalApproximation::ExactSeries
        );
        assert_eq!(
            auto_thermal(&atom, &env, 1.0).unwrap().0,
            ThermalApproximation::LongExpansion
        );
    }

    #[test]
    fn zero_distance_limit_near_nondispersive_value() {
        let (atom, env) = setup(100.0);
        let c = thermal_zero_distance_limit(&atom, &env).unwrap();
        assert!((c - NONDISPERSIVE_CONSTANT).abs() < 3e-3, "{c}");
    }
}
