//! Double-precision special functions used by the closed forms.
//!
//! Every function with more than one evaluation branch documents its switch
//! point and the worst error measured against 50-digit references there.

mod expint;
mod kernel;
mod polygamma;
mod series;
mod trig;
mod zeta;

pub use expint::scaled_e1;
pub(crate) use expint::scaled_e1_pair;
pub use kernel::kernel_g;
pub use polygamma::{hurwitz_zeta_scaled, ln_factorial, polygamma, polygamma_scaled};
pub use series::{bose_sum_p, q_series};
pub use trig::{auxiliary_f, auxiliary_g, cosine_integral, sine_integral_si};
pub use zeta::{bernoulli_over_factorial, zeta_even, zeta_even_minus_one, ZETA_EVEN_MAX};

use crate::{Error, Result};

/// Complex number used for E1, polygamma and the thermal series.
pub type ComplexValue = num_complex::Complex64;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Accuracy targets for primitives and for composed physics quantities.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct AccuracyBudget {
    pub rel_tol_specfun: f64,
    pub rel_tol_composed: f64,
}

impl AccuracyBudget {
    /// Guaranteed primitive accuracy. The measured error is closer to 1e-13.
    pub const GUARANTEED_SPECFUN: f64 = 1e-10;

    pub fn new(rel_tol_specfun: f64, rel_tol_composed: f64) -> Result<Self> {
        if !(rel_tol_specfun > 0.0
            && rel_tol_specfun <= rel_tol_composed
            && rel_tol_composed < 1e-3)
        {
            return Err(Error::domain(
                "AccuracyBudget::new",
                rel_tol_specfun,
                "need 0 < rel_tol_specfun <= rel_tol_composed < 1e-3",
            ));
        }
        Ok(Self {
            rel_tol_specfun,
            rel_tol_composed,
        })
    }
}

impl Default for AccuracyBudget {
    fn default() -> Self {
        Self {
            rel_tol_specfun: 1e-12,
            rel_tol_composed: 1e-8,
        }
    }
}

pub(crate) fn check_finite(function: &'static str, v: ComplexValue) -> Result<ComplexValue> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow { function })
    }
}
