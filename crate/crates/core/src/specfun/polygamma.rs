//! Polygamma functions of complex argument through the Hurwitz zeta function,
//! ψ^(m)(z) = (−1)^{m+1} m! ζ(m+1, z).
//!
//! The argument is shifted by direct summation until `Re >= 1` and
//! `|z| >= max(20, m+1)`, then the Euler–Maclaurin (Bernoulli) series finishes
//! the tail. All magnitudes are carried as logarithms, so m! and z^{-(m+1)}
//! never appear on their own; callers that divide by a large power pass its
//! logarithm as `log_scale`.

use num_complex::Complex64;

use super::{bernoulli_over_factorial, check_finite};
use crate::{Error, Result};

const MIN_TAIL_RADIUS: f64 = 20.0;
const MAX_BERNOULLI_TERMS: u32 = 60;

/// ln n!, exact products up to 20! and Stirling's series beyond.
pub fn ln_factorial(n: u32) -> f64 {
    if n <= 20 {
        let mut p = 1.0f64;
        for k in 2..=n {
            p *= k as f64;
        }
        return p.ln();
    }
    let x = n as f64 + 1.0;
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    // ln Γ(x)
    (x - 0.5) * x.ln() - x
        + 0.5 * (2.0 * std::f64::consts::PI).ln()
        + inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 / 1680.0)))
}

fn is_pole(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// Hurwitz zeta Σ_{k≥0} (a+k)^{−s}, multiplied by e^{−log_scale}. `s >= 2`.
pub fn hurwitz_zeta_scaled(s: u32, a: Complex64, log_scale: f64) -> Result<Complex64> {
    if s < 2 {
        return Err(Error::domain("hurwitz_zeta", s as f64, "need s >= 2"));
    }
    if !(a.re.is_finite() && a.im.is_finite()) {
        return Err(Error::domain("hurwitz_zeta", a.re, "argument not finite"));
    }
    if is_pole(a) {
        return Err(Error::Pole {
            function: "hurwitz_zeta",
            re: a.re,
            im: a.im,
        });
    }
    let sf = s as f64;
    let radius = MIN_TAIL_RADIUS.max(sf);

    let term = |b: Complex64| (-sf * b.ln() - log_scale).exp();

    let mut sum = Complex64::new(0.0, 0.0);
    let mut b = a;
    while b.re < 1.0 || b.norm() < radius {
        let t = term(b);
        sum += t;
        // Past the imaginary axis the terms shrink monotonically; once one is
        // negligible the whole remainder, bounded by |t| |b| / (s-1), is too.
        if b.re > 0.0 && t.norm() * b.norm() / (sf - 1.0) <= 1e-3 * f64::EPSILON * sum.norm() {
            return check_finite("hurwitz_zeta", sum);
        }
        b += 1.0;
    }

    // ζ(s,b) ≈ b^{-s} [ b/(s-1) + 1/2 + Σ_j B_2j/(2j)! (s)_{2j-1} b^{1-2j} ]
    let base = term(b);
    let inv = b.inv();
    let inv2 = inv * inv;
    let mut bracket = b / (sf - 1.0) + 0.5;
    let mut t = bernoulli_over_factorial(1)? * sf * inv;
    let mut last = f64::INFINITY;
    for j in 1..MAX_BERNOULLI_TERMS {
        let mag = t.norm();
        if mag > last {
            break;
        }
        bracket += t;
        if mag <= f64::EPSILON * 1e-2 * bracket.norm() {
            break;
        }
        last = mag;
        let jf = j as f64;
        let ratio = bernoulli_over_factorial(j + 1)? / bernoulli_over_factorial(j)?;
        t *= inv2 * ratio * (sf + 2.0 * jf - 1.0) * (sf + 2.0 * jf);
    }
    sum += base * bracket;
    check_finite("hurwitz_zeta", sum)
}

fn digamma(z: Complex64) -> Result<Complex64> {
    let mut shift = Complex64::new(0.0, 0.0);
    let mut b = z;
    while b.re < 1.0 || b.norm() < MIN_TAIL_RADIUS {
        shift += b.inv();
        b += 1.0;
    }
    // ψ(b) = ln b − 1/(2b) − Σ_j B_2j/(2j) b^{-2j}
    let inv2 = b.inv() * b.inv();
    let mut power = inv2;
    let mut series = Complex64::new(0.0, 0.0);
    let mut fact = 1.0f64; // (2j-1)!
    for j in 1..30u32 {
        if j > 1 {
            fact *= ((2 * j - 2) * (2 * j - 1)) as f64;
        }
        let t = power * bernoulli_over_factorial(j)? * fact;
        series += t;
        if t.norm() <= f64::EPSILON * 1e-2 {
            break;
        }
        power *= inv2;
    }
    Ok(b.ln() - 0.5 * b.inv() - series - shift)
}

/// ψ^(m)(z) multiplied by e^{−log_scale}.
pub fn polygamma_scaled(m: u32, z: Complex64, log_scale: f64) -> Result<Complex64> {
    if is_pole(z) {
        return Err(Error::Pole {
            function: "polygamma",
            re: z.re,
            im: z.im,
        });
    }
    if m == 0 {
        let v = digamma(z)? * (-log_scale).exp();
        return check_finite("polygamma", v);
    }
    let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
    let v = hurwitz_zeta_scaled(m + 1, z, log_scale - ln_factorial(m))?;
    check_finite("polygamma", sign * v)
}

/// Polygamma function ψ^(m)(z) of order m.
pub fn polygamma(m: u32, z: Complex64) -> Result<Complex64> {
    polygamma_scaled(m, z, 0.0)
}
