//! Atom and environment parameters, physical constants and unit conversion.
//!
//! The numerical core works with ħ = c = k_B = 1 in whatever length unit the
//! caller picks. [`PhysicalConstants`] is needed only to go from kelvin to a
//! thermal length and from `ħc/length` to electron-volts.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::{Error, Result};

/// Joules per electron-volt, exact in the 2019 SI.
pub const JOULE_PER_EV: f64 = 1.602_176_634e-19;

/// The paper's working point: k₀λ_T for an optical transition at room temperature.
pub const DEFAULT_THETA: f64 = 100.0;

/// Smallest k₀λ_T accepted; below it the two-level picture is not trusted.
pub const MIN_THETA: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhysicalConstants {
    pub hbar_c_ev_nm: f64,
    pub k_b_ev_per_k: f64,
}

impl Default for PhysicalConstants {
    /// CODATA 2018.
    fn default() -> Self {
        Self {
            hbar_c_ev_nm: 197.326_980_4,
            k_b_ev_per_k: 8.617_333_262e-5,
        }
    }
}

impl PhysicalConstants {
    /// Thermal length ħc/(k_B T) in nm.
    pub fn thermal_length_nm(&self, temperature: f64) -> f64 {
        self.hbar_c_ev_nm / (self.k_b_ev_per_k * temperature)
    }

    /// Temperature whose thermal length is `lambda_t_nm`.
    pub fn temperature_for(&self, lambda_t_nm: f64) -> f64 {
        self.hbar_c_ev_nm / (self.k_b_ev_per_k * lambda_t_nm)
    }
}

/// Parsed constants file.
///
/// Flat `key = value` lines; `#` starts a comment. Recognised keys are
/// `hbar_c_ev_nm`, `k_b_ev_per_k` and `default_theta`. Missing keys keep their
/// defaults, unknown keys are rejected.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Config {
    pub constants: PhysicalConstants,
    pub default_theta: f64,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            constants: PhysicalConstants::default(),
            default_theta: DEFAULT_THETA,
        }
    }
}

/// Error in a constants file, with its 1-based line number.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ConfigError {}

impl FromStr for Config {
    type Err = ConfigError;

    fn from_str(text: &str) -> std::result::Result<Self, ConfigError> {
        let mut cfg = Config::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| ConfigError {
                line: idx + 1,
                message,
            };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err(format!("expected `key = value`, got `{line}`")))?;
            let key = key.trim();
            let value: f64 = value
                .trim()
                .parse()
                .map_err(|_| err(format!("`{}` is not a number", value.trim())))?;
            if !(value.is_finite() && value > 0.0) {
                return Err(err(format!("{key} must be positive and finite")));
            }
            match key {
                "hbar_c_ev_nm" => cfg.constants.hbar_c_ev_nm = value,
                "k_b_ev_per_k" => cfg.constants.k_b_ev_per_k = value,
                "default_theta" => cfg.default_theta = value,
                other => return Err(err(format!("unknown key `{other}`"))),
            }
        }
        Ok(cfg)
    }
}

/// Two-level atom: transition wavenumber k₀ and static polarizability α₀.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AtomParams {
    pub k0: f64,
    pub alpha0: f64,
}

impl AtomParams {
    pub fn new(k0: f64, alpha0: f64) -> Result<Self> {
        if !(k0 > 0.0 && k0.is_finite()) {
            return Err(Error::domain("AtomParams::new", k0, "k0 must be positive"));
        }
        if !(alpha0 > 0.0 && alpha0.is_finite()) {
            return Err(Error::domain(
                "AtomParams::new",
                alpha0,
                "alpha0 must be positive",
            ));
        }
        Ok(Self { k0, alpha0 })
    }

    /// Transition wavelength λ₀ = 2π/k₀.
    pub fn lambda0(&self) -> f64 {
        2.0 * PI / self.k0
    }
}

/// Field state seen by the atom.
///
/// `lambda_t` is infinite (and `temperature` zero) for the vacuum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThermalEnvironment {
    pub temperature: Option<f64>,
    pub lambda_t: f64,
    pub theta: f64,
}

impl ThermalEnvironment {
    /// Environment with thermal length `lambda_t`, in the atom's length unit.
    pub fn from_lambda_t(lambda_t: f64, atom: &AtomParams) -> Result<Self> {
        if !(lambda_t > 0.0) || lambda_t.is_nan() {
            return Err(Error::domain(
                "ThermalEnvironment",
                lambda_t,
                "thermal length must be positive",
            ));
        }
        if lambda_t.is_infinite() {
            return Ok(Self::vacuum());
        }
        let theta = atom.k0 * lambda_t;
        if theta < MIN_THETA {
            return Err(Error::domain(
                "ThermalEnvironment",
                theta,
                "k0 * lambda_T must be at least 10",
            ));
        }
        Ok(Self {
            temperature: None,
            lambda_t,
            theta,
        })
    }

    /// Environment at `theta = k₀λ_T`.
    pub fn from_theta(theta: f64, atom: &AtomParams) -> Result<Self> {
        Self::from_lambda_t(theta / atom.k0, atom)
    }

    /// Environment at `temperature` kelvin. The atom's lengths must be in nm.
    pub fn from_temperature(
        temperature: f64,
        constants: &PhysicalConstants,
        atom: &AtomParams,
    ) -> Result<Self> {
        if !(temperature >= 0.0 && temperature.is_finite()) {
            return Err(Error::domain(
                "ThermalEnvironment",
                temperature,
                "temperature must be a non-negative number of kelvin",
            ));
        }
        if temperature == 0.0 {
            return Ok(Self::vacuum());
        }
        let mut env = Self::from_lambda_t(constants.thermal_length_nm(temperature), atom)?;
        env.temperature = Some(temperature);
        Ok(env)
    }

    /// Zero temperature.
    pub fn vacuum() -> Self {
        Self {
            temperature: Some(0.0),
            lambda_t: f64::INFINITY,
            theta: f64::INFINITY,
        }
    }

    pub fn is_vacuum(&self) -> bool {
        self.lambda_t.is_infinite()
    }
}

/// Conversion between a physical length unit and the atom's natural units
/// (lengths in 1/k₀, energies in ħcα₀k₀⁴).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NaturalUnits {
    atom: AtomParams,
}

impl NaturalUnits {
    pub fn new(atom: AtomParams) -> Self {
        Self { atom }
    }

    pub fn length_to_natural(&self, z: f64) -> f64 {
        z * self.atom.k0
    }

    pub fn length_from_natural(&self, u: f64) -> f64 {
        u / self.atom.k0
    }

    /// Energy in ħc/length to units of ħcα₀k₀⁴.
    pub fn energy_to_natural(&self, e: f64) -> f64 {
        e / (self.atom.alpha0 * self.atom.k0.powi(4))
    }

    pub fn energy_from_natural(&self, e: f64) -> f64 {
        e * self.atom.alpha0 * self.atom.k0.powi(4)
    }
}

/// Energy in ħc/nm to electron-volts.
pub fn energy_ev(e: f64, constants: &PhysicalConstants) -> f64 {
    e * constants.hbar_c_ev_nm
}

/// Energy in ħc/nm to joules.
pub fn energy_joule(e: f64, constants: &PhysicalConstants) -> f64 {
    energy_ev(e, constants) * JOULE_PER_EV
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn room_temperature_thermal_length() {
        let c = PhysicalConstants::default();
        let lt = c.thermal_length_nm(300.0);
        assert!((lt - 7633.0).abs() < 1.0, "{lt}");
        assert!((c.temperature_for(lt) - 300.0).abs() < 1e-10);
    }

    #[test]
    fn config_parsing() {
        let cfg: Config = "# pinned\nhbar_c_ev_nm = 197.3\n\n default_theta=30 # low\n"
            .parse()
            .unwrap();
        assert_eq!(cfg.constants.hbar_c_ev_nm, 197.3);
        assert_eq!(cfg.constants.k_b_ev_per_k, 8.617_333_262e-5);
        assert_eq!(cfg.default_theta, 30.0);

        let e = "k_b_ev_per_k = 1\nbogus = 2\n"
            .parse::<Config>()
            .unwrap_err();
        assert_eq!(e.line, 2);
        assert!("hbar_c_ev_nm 197".parse::<Config>().is_err());
        assert!("hbar_c_ev_nm = -1".parse::<Config>().is_err());
    }

    #[test]
    fn theta_floor() {
        let atom = AtomParams::new(1.0, 1.0).unwrap();
        assert!(ThermalEnvironment::from_lambda_t(9.99, &atom).is_err());
        let env = ThermalEnvironment::from_lambda_t(10.0, &atom).unwrap();
        assert_eq!(env.theta, 10.0);
        assert!(ThermalEnvironment::from_lambda_t(f64::INFINITY, &atom)
            .unwrap()
            .is_vacuum());
    }

    #[test]
    fn zero_kelvin_is_vacuum() {
        let atom = AtomParams::new(0.01, 1.0).unwrap();
        let env = ThermalEnvironment::from_temperature(0.0, &PhysicalConstants::default(), &atom)
            .unwrap();
        assert!(env.is_vacuum());
    }
}
