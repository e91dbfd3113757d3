//! The two Bose-type sums of the thermal correction.

use std::f64::consts::PI;

use super::zeta_even;
use crate::{Error, Result};

const Q_MAX_TERMS: u32 = 1_000_000;

/// P(η) = Σ_{m≥1} 1/(1 + m²η²).
///
/// Closed form π coth(π/η)/(2η) − 1/2 for η ≤ 4. Above that the closed form
/// cancels, so the convergent expansion Σ_k (−1)^{k+1} ζ(2k)/η^{2k} is used.
pub fn bose_sum_p(eta: f64) -> Result<f64> {
    if !(eta > 0.0 && eta.is_finite()) {
        return Err(Error::domain("bose_sum_p", eta, "need 0 < eta < inf"));
    }
    if eta <= 4.0 {
        return Ok(PI / (2.0 * eta * (PI / eta).tanh()) - 0.5);
    }
    let r = 1.0 / (eta * eta);
    let mut power = r;
    let mut sum = 0.0;
    let mut sign = 1.0;
    for k in 1..=40 {
        let t = sign * zeta_even(k)? * power;
        sum += t;
        if t.abs() <= f64::EPSILON * 1e-2 * sum.abs() {
            break;
        }
        power *= r;
        sign = -sign;
    }
    Ok(sum)
}

/// Q(x) = Σ_{m≥2} (−1)^m (1 − 1/m) ζ(2m)/x^{2m}, for x > 1.
pub fn q_series(x: f64) -> Result<f64> {
    if !(x > 1.0 && x.is_finite()) {
        return Err(Error::domain("q_series", x, "need 1 < x < inf"));
    }
    let r = 1.0 / (x * x);
    let mut power = r * r;
    let mut sum = 0.0;
    for m in 2..=Q_MAX_TERMS {
        let zeta = if m <= 40 { zeta_even(m)? } else { 1.0 };
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        let t = sign * (1.0 - 1.0 / m as f64) * zeta * power;
        sum += t;
        if t.abs() <= f64::EPSILON * 1e-2 * sum.abs().max(f64::MIN_POSITIVE) {
            return Ok(sum);
        }
        power *= r;
    }
    Err(Error::Convergence {
        what: "q_series",
        steps: Q_MAX_TERMS as usize,
        estimate: power,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    // Truncated sum plus the integral estimate of the remainder.
    fn direct_p(eta: f64, terms: u32) -> f64 {
        let head: f64 = (1..=terms)
            .rev()
            .map(|m| 1.0 / (1.0 + (m as f64 * eta).powi(2)))
            .sum();
        let tail = (std::f64::consts::FRAC_PI_2 - (eta * (terms as f64 + 0.5)).atan()) / eta;
        head + tail
    }

    #[test]
    fn p_branches_meet() {
        let eta = 4.0 + 1e-12;
        let a = PI / (2.0 * eta * (PI / eta).tanh()) - 0.5;
        let b = bose_sum_p(eta).unwrap();
        assert!((a - b).abs() < 1e-13 * a.abs(), "{a} {b}");
    }

    #[test]
    fn p_large_eta_matches_direct() {
        for eta in [5.0, 20.0, 1e3] {
            let d = direct_p(eta, 200_000);
            assert!(
                (bose_sum_p(eta).unwrap() - d).abs() < 1e-9 * d,
                "eta = {eta}"
            );
        }
    }

    #[test]
    fn q_domain() {
        assert!(q_series(1.0).is_err());
        assert!(q_series(0.5).is_err());
        assert!(q_series(1.001).is_ok());
    }
}
