use thiserror::Error;

/// Failures raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{function}: argument {value} outside domain ({reason})")]
    Domain {
        function: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("{function}: pole at {re} + {im}i")]
    Pole {
        function: &'static str,
        re: f64,
        im: f64,
    },

    #[error("{function}: result not representable in double precision")]
    Overflow { function: &'static str },

    #[error("{what} did not converge after {steps} steps (error estimate {estimate:e})")]
    Convergence {
        what: &'static str,
        steps: usize,
        estimate: f64,
    },

    #[error("{what} used outside its validity window: {detail}")]
    Validity { what: &'static str, detail: String },

    #[error("{what}: no sign change on [{lo}, {hi}]")]
    NoSignChange {
        what: &'static str,
        lo: f64,
        hi: f64,
    },

    #[error("{what}: ill-conditioned ({detail})")]
    IllConditioned { what: &'static str, detail: String },
}

impl Error {
    pub(crate) fn domain(function: &'static str, value: f64, reason: &'static str) -> Self {
        Error::Domain {
            function,
            value,
            reason,
        }
    }

    /// True for errors caused by the caller's inputs rather than by the numerics.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::Domain { .. } | Error::Pole { .. } | Error::Validity { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
