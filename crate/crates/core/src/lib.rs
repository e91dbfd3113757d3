//! Casimir-Polder interaction between a two-level polarizable atom and a
//! perfectly conducting wall.
//!
//! The crate evaluates the exact vacuum energy, the exact finite-temperature
//! correction, and their short- and long-distance approximations. Every closed
//! form is cross-checked against an independent quadrature reconstruction in
//! [`oracle`].
//!
//! Unit convention: all lengths passed to one call share a single unit and
//! energies come back in units of `ħc / length`. [`units`] converts to eV.
//!
//! ```
//! use cpwall::{AtomParams, ThermalEnvironment};
//!
//! let atom = AtomParams::new(100.0, 1.0).unwrap();
//! let env = ThermalEnvironment::from_lambda_t(1.0, &atom).unwrap();
//! let v = cpwall::thermal::total_potential(&atom, &env, 0.5).unwrap();
//! assert!(v.total < 0.0);
//! ```

// `!(x > 0.0)` is deliberate throughout: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod curves;
mod error;
pub mod grid;
pub mod oracle;
pub mod specfun;
pub mod thermal;
pub mod units;
pub mod vacuum;
pub mod verify;

pub use error::{Error, Result};
pub use specfun::ComplexValue;
pub use units::{AtomParams, PhysicalConstants, ThermalEnvironment};
