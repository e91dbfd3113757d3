//! Tabulated potential curves in the scaled units of the three standard plots.
//!
//! * Figure 1: (k₀z)³V₀ in ħcα₀k₀⁴ against k₀z.
//! * Figure 2: (z/λ_T)³V in ħcα₀/λ_T⁴ against z/λ_T.
//! * Figure 3: V_T in ħcα₀/λ_T⁴ against z/λ_T.
//!
//! Only the dimensionless ratio θ = k₀λ_T matters, so curves are computed for
//! k₀ = α₀ = 1.

use std::f64::consts::PI;
use std::io::{self, Write};

use serde::Serialize;

use crate::grid::{linspace, logspace, try_map_grid};
use crate::thermal::{lifshitz_asymptote, thermal_potential_exact, thermal_short_leading};
use crate::vacuum::{nonretarded_asymptote, retarded_asymptote, vacuum_potential};
use crate::{AtomParams, Error, Result, ThermalEnvironment};

pub const DEFAULT_POINTS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Figure {
    One,
    Two,
    Three,
}

impl Figure {
    pub fn from_id(id: u8) -> Option<Self> {
        match id {
            1 => Some(Figure::One),
            2 => Some(Figure::Two),
            3 => Some(Figure::Three),
            _ => None,
        }
    }

    pub fn id(self) -> u8 {
        match self {
            Figure::One => 1,
            Figure::Two => 2,
            Figure::Three => 3,
        }
    }

    pub fn columns(self) -> &'static [&'static str] {
        match self {
            Figure::One => &[
                "k0z",
                "exact_scaled",
                "nonretarded_scaled",
                "retarded_scaled",
            ],
            Figure::Two => &["z_over_lambdaT", "total_scaled", "lifshitz_scaled"],
            Figure::Three => &[
                "z_over_lambdaT",
                "thermal_scaled",
                "short_leading_scaled",
                "vacuum_retarded_scaled",
            ],
        }
    }

    /// Plot range of the abscissa.
    pub fn default_range(self) -> (f64, f64) {
        match self {
            Figure::One => (0.05, 10.0),
            Figure::Two => (0.1, 3.0),
            Figure::Three => (0.0, 1.5),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurveSpec {
    pub figure: Figure,
    pub theta: f64,
    pub points: usize,
    pub x_range: (f64, f64),
}

impl CurveSpec {
    pub fn new(figure: Figure, theta: f64) -> Self {
        Self {
            figure,
            theta,
            points: DEFAULT_POINTS,
            x_range: figure.default_range(),
        }
    }

    /// Abscissae: logarithmic for Figure 1, linear otherwise. A range starting
    /// at 0 leaves out z = 0 and starts one step in.
    pub fn abscissae(&self) -> Result<Vec<f64>> {
        let (lo, hi) = self.x_range;
        if !(lo >= 0.0 && hi > lo && hi.is_finite()) {
            return Err(Error::domain("CurveSpec", lo, "need 0 <= lo < hi"));
        }
        if self.points < 2 {
            return Err(Error::domain(
                "CurveSpec",
                self.points as f64,
                "need at least 2 points",
            ));
        }
        Ok(match self.figure {
            Figure::One if lo == 0.0 => {
                return Err(Error::domain(
                    "CurveSpec",
                    lo,
                    "figure 1 is logarithmic in k0z",
                ))
            }
            Figure::One => logspace(lo, hi, self.points),
            _ if lo == 0.0 => {
                let step = hi / self.points as f64;
                (1..=self.points)
                    .map(|i| {
                        if i == self.points {
                            hi
                        } else {
                            step * i as f64
                        }
                    })
                    .collect()
            }
            _ => linspace(lo, hi, self.points),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurveTable {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
}

impl CurveTable {
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.columns.iter().position(|c| *c == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }

    /// CSV with a header row and 17 significant digits per value.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "{}", self.columns.join(","))?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:.16e}")).collect();
            writeln!(out, "{}", cells.join(","))?;
        }
        Ok(())
    }
}

pub fn evaluate_curve(spec: &CurveSpec) -> Result<CurveTable> {
    let atom = AtomParams::new(1.0, 1.0)?;
    let xs = spec.abscissae()?;
    let rows = match spec.figure {
        Figure::One => try_map_grid(&xs, |x| {
            let x3 = x * x * x;
            Ok::<_, Error>(vec![
                x,
                x3 * vacuum_potential(&atom, x)?,
                x3 * nonretarded_asymptote(&atom, x)?,
                x3 * retarded_asymptote(&atom, x)?,
            ])
        })?,
        Figure::Two | Figure::Three => {
            let env = ThermalEnvironment::from_theta(spec.theta, &atom)?;
            let l = env.lambda_t;
            let l4 = l.powi(4);
            if spec.figure == Figure::Two {
                try_map_grid(&xs, |u| {
                    let z = u * l;
                    let total =
                        vacuum_potential(&atom, z)? + thermal_potential_exact(&atom, &env, z)?;
                    let u3 = u * u * u;
                    Ok::<_, Error>(vec![
                        u,
                        u3 * l4 * total,
                        u3 * l4 * lifshitz_asymptote(&atom, &env, z)?,
                    ])
                })?
            } else {
                try_map_grid(&xs, |u| {
                    let z = u * l;
                    Ok::<_, Error>(vec![
                        u,
                        l4 * thermal_potential_exact(&atom, &env, z)?,
                        l4 * thermal_short_leading(&atom, &env, z)?,
                        -3.0 / (8.0 * PI * u.powi(4)),
                    ])
                })?
            }
        }
    };
    Ok(CurveTable {
        columns: spec.figure.columns().to_vec(),
        rows,
    })
}
