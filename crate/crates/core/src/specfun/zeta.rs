use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::{Error, Result};

/// Largest `m` accepted by [`zeta_even`].
pub const ZETA_EVEN_MAX: u32 = 260;

// Exact even Bernoulli numbers B_2 .. B_26 as (numerator, denominator).
const BERNOULLI_EVEN: [(f64, f64); 13] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
    (854513.0, 138.0),
    (-236364091.0, 2730.0),
    (8553103.0, 6.0),
];

struct Tables {
    /// zeta(2m), index m (index 0 unused)
    zeta: Vec<f64>,
    /// zeta(2m) - 1
    zeta_minus_one: Vec<f64>,
    /// B_2j / (2j)!
    bernoulli_ratio: Vec<f64>,
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(build_tables)
}

// Σ_{k>=2} k^{-s}: direct terms up to 39, Euler–Maclaurin from 40 on.
fn dirichlet_tail(s: i32) -> f64 {
    let n = 40.0f64;
    let sf = s as f64;
    let head: f64 = (2..40).rev().map(|k| (k as f64).powi(-s)).sum();
    let ns = n.powi(-s);
    head + ns
        * (n / (sf - 1.0) + 0.5 + sf / (12.0 * n)
            - sf * (sf + 1.0) * (sf + 2.0) / (720.0 * n.powi(3)))
}

fn build_tables() -> Tables {
    let n = ZETA_EVEN_MAX as usize;
    let mut zeta = vec![0.0; n + 1];
    let mut zeta_minus_one = vec![0.0; n + 1];
    let mut bernoulli_ratio = vec![0.0; n + 1];
    let two_pi = 2.0 * PI;

    let mut factorial = 1.0f64; // (2m)!
    for m in 1..=n {
        let s = 2 * m;
        factorial *= (s - 1) as f64 * s as f64;
        let tail = if m == 1 {
            PI * PI / 6.0 - 1.0
        } else {
            dirichlet_tail(s as i32)
        };
        zeta_minus_one[m] = tail;
        if m <= BERNOULLI_EVEN.len() {
            let (num, den) = BERNOULLI_EVEN[m - 1];
            bernoulli_ratio[m] = num / den / factorial;
            // zeta(2m) = |B_2m| 2^(2m-1) pi^2m / (2m)!
            zeta[m] = PI.powi(s as i32) * num.abs() * 2f64.powi(s as i32 - 1) / (den * factorial);
        } else {
            zeta[m] = 1.0 + tail;
            let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
            bernoulli_ratio[m] = sign * 2.0 * (1.0 + tail) * (-(s as f64) * two_pi.ln()).exp();
        }
    }
    Tables {
        zeta,
        zeta_minus_one,
        bernoulli_ratio,
    }
}

fn check_m(m: u32) -> Result<usize> {
    if m == 0 || m > ZETA_EVEN_MAX {
        return Err(Error::domain("zeta_even", m as f64, "need 1 <= m <= 260"));
    }
    Ok(m as usize)
}

/// Riemann zeta at even argument, ζ(2m), from the Bernoulli-number closed form.
pub fn zeta_even(m: u32) -> Result<f64> {
    let m = check_m(m)?;
    Ok(tables().zeta[m])
}

/// ζ(2m) − 1, which stays strictly decreasing after ζ(2m) itself rounds to 1.
pub fn zeta_even_minus_one(m: u32) -> Result<f64> {
    let m = check_m(m)?;
    Ok(tables().zeta_minus_one[m])
}

/// B_{2j} / (2j)! for 1 ≤ j ≤ 260. Underflows to zero past j ≈ 190.
pub fn bernoulli_over_factorial(j: u32) -> Result<f64> {
    let j = check_m(j)?;
    Ok(tables().bernoulli_ratio[j])
}
