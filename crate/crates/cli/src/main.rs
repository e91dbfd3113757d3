use std::f64::consts::PI;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use cpwall::analysis::{
    dominance_crossover, find_thermal_equilibrium, quadratic_fit, regime_error_table,
    DEFAULT_FIT_POINTS, HARMONIC_WINDOWS,
};
use cpwall::curves::{evaluate_curve, CurveSpec, Figure, DEFAULT_POINTS};
use cpwall::grid::logspace;
use cpwall::thermal::{auto_thermal, total_potential};
use cpwall::units::{energy_joule, Config, NaturalUnits, DEFAULT_THETA};
use cpwall::verify::{self, Mode};
use cpwall::{AtomParams, ThermalEnvironment};

const CONFIG_ENV: &str = "CPWALL_CONFIG";
const ROOM_PRESET: &str = "optical transition at room temperature";

#[derive(Parser)]
#[command(
    name = "cpwall",
    version,
    about = "Atom-wall Casimir-Polder energies in vacuum and at finite temperature"
)]
struct Cli {
    /// Constants file (`key = value` lines). Overrides $CPWALL_CONFIG.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the potential at one distance.
    Eval(EvalArgs),
    /// Emit a figure's curves as CSV.
    #[command(visible_alias = "figure")]
    Curve(CurveArgs),
    /// Run the acceptance checks.
    Verify(VerifyArgs),
    /// Equilibrium, crossover, harmonic fits and approximation errors.
    Analyze(AnalyzeArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Units {
    /// metres and joules
    Si,
    /// lengths in 1/k0, energies in hbar c alpha0 k0^4
    Natural,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct EvalArgs {
    /// Transition wavenumber in 1/um.
    #[arg(long, required_unless_present = "lambda0", conflicts_with = "lambda0")]
    k0: Option<f64>,
    /// Transition wavelength in um.
    #[arg(long)]
    lambda0: Option<f64>,
    /// Static polarizability in nm^3.
    #[arg(long)]
    alpha0: f64,
    /// Atom-wall distance in um.
    #[arg(long)]
    z: f64,
    /// Field temperature in K. Without it the configured default theta is used.
    #[arg(long)]
    temperature: Option<f64>,
    #[arg(long, value_enum, default_value_t = Units::Si)]
    units: Units,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct CurveArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    figure: u8,
    /// k0 lambda_T; defaults to the configured value.
    #[arg(long)]
    theta: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_POINTS)]
    points: usize,
    /// Abscissa range as LO,HI in the figure's units.
    #[arg(long, value_parser = parse_pair)]
    range: Option<(f64, f64)>,
    /// Write to a file instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Reduced oracle grids.
    #[arg(long)]
    quick: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long)]
    theta: Option<f64>,
    /// Fit window LO,HI in units of lambda_T; may be repeated.
    #[arg(long = "fit-window", value_parser = parse_pair)]
    fit_window: Vec<(f64, f64)>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn parse_pair(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s.split_once(',').ok_or("expected LO,HI")?;
    let lo: f64 = a.trim().parse().map_err(|_| format!("bad number `{a}`"))?;
    let hi: f64 = b.trim().parse().map_err(|_| format!("bad number `{b}`"))?;
    Ok((lo, hi))
}

enum Failure {
    Usage(String),
    Domain(String),
    Numeric(String),
    Rejected,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Rejected => 1,
            Failure::Usage(_) => 2,
            Failure::Domain(_) => 3,
            Failure::Numeric(_) => 4,
        }
    }
}

impl From<cpwall::Error> for Failure {
    fn from(e: cpwall::Error) -> Self {
        if e.is_domain() {
            Failure::Domain(e.to_string())
        } else {
            Failure::Numeric(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Numeric(format!("output: {e}"))
    }
}

fn load_config(flag: Option<&PathBuf>) -> Result<Config, Failure> {
    let path = match flag {
        Some(p) => p.clone(),
        None => match std::env::var_os(CONFIG_ENV) {
            Some(p) if !p.is_empty() => PathBuf::from(p),
            _ => return Ok(Config::default()),
        },
    };
    let text = std::fs::read_to_string(&path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    text.parse()
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(m) | Failure::Domain(m) | Failure::Numeric(m) => {
                    eprintln!("error: {m}")
                }
                Failure::Rejected => {}
            }
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let config = load_config(cli.config.as_ref())?;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Eval(a) => eval(&a, &config, &mut out)?,
        Command::Curve(a) => curve(&a, &config, &mut out)?,
        Command::Verify(a) => verify_cmd(&a, &mut out)?,
        Command::Analyze(a) => analyze(&a, &config, &mut out)?,
    }
    out.flush()?;
    Ok(())
}

fn positive(name: &str, v: f64) -> Result<f64, Failure> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(Failure::Usage(format!(
            "--{name} must be a positive number, got {v}"
        )))
    }
}

fn eval<W: Write>(a: &EvalArgs, config: &Config, out: &mut W) -> Result<(), Failure> {
    // everything below works in nm
    let k0 = match (a.k0, a.lambda0) {
        (Some(k), _) => positive("k0", k)? / 1000.0,
        (None, Some(l)) => 2.0 * PI / (positive("lambda0", l)? * 1000.0),
        (None, None) => {
            return Err(Failure::Usage(
                "one of --k0 or --lambda0 is required".into(),
            ))
        }
    };
    let alpha0 = positive("alpha0", a.alpha0)?;
    let z = positive("z", a.z)? * 1000.0;
    let atom = AtomParams::new(k0, alpha0)?;
    let constants = config.constants;

    let (env, environment) = match a.temperature {
        Some(t) => {
            if !(t >= 0.0 && t.is_finite()) {
                return Err(Failure::Usage(format!(
                    "--temperature must be >= 0, got {t}"
                )));
            }
            let env = ThermalEnvironment::from_temperature(t, &constants, &atom)?;
            let label = if t == 0.0 {
                "vacuum".to_string()
            } else {
                format!("{t} K")
            };
            (env, label)
        }
        None => {
            let env = ThermalEnvironment::from_theta(config.default_theta, &atom)?;
            let label = if config.default_theta == DEFAULT_THETA {
                format!("theta = {} preset ({ROOM_PRESET})", config.default_theta)
            } else {
                format!("theta = {} from config", config.default_theta)
            };
            (env, label)
        }
    };

    let b = total_potential(&atom, &env, z)?;
    let (approx, thermal_auto) = auto_thermal(&atom, &env, z)?;
    let natural = NaturalUnits::new(atom);
    let (length_unit, energy_unit) = match a.units {
        Units::Si => ("m", "J"),
        Units::Natural => ("1/k0", "hbar c alpha0 k0^4"),
    };
    let length = |nm: f64| match a.units {
        Units::Si => nm * 1e-9,
        Units::Natural => natural.length_to_natural(nm),
    };
    let energy = |e: f64| match a.units {
        Units::Si => energy_joule(e, &constants),
        Units::Natural => natural.energy_to_natural(e),
    };
    let temperature = match (a.temperature, env.is_vacuum()) {
        (Some(t), _) => Some(t),
        (None, false) => Some(constants.temperature_for(env.lambda_t)),
        (None, true) => None,
    };
    let finite = |v: f64| if v.is_finite() { json!(v) } else { Value::Null };

    let fields: Vec<(&str, Value)> = vec![
        (
            "units",
            json!(match a.units {
                Units::Si => "si",
                Units::Natural => "natural",
            }),
        ),
        ("length_unit", json!(length_unit)),
        ("energy_unit", json!(energy_unit)),
        ("environment", json!(environment)),
        (
            "temperature_k",
            temperature.map_or(Value::Null, |t| json!(t)),
        ),
        ("theta", finite(env.theta)),
        ("lambda_t", finite(length(env.lambda_t))),
        ("k0_per_um", json!(k0 * 1000.0)),
        ("lambda0", json!(length(atom.lambda0()))),
        ("alpha0_nm3", json!(alpha0)),
        ("z", json!(length(z))),
        ("x0", json!(2.0 * k0 * z)),
        (
            "z_over_lambda_t",
            if env.is_vacuum() {
                json!(0.0)
            } else {
                json!(z / env.lambda_t)
            },
        ),
        ("regime", json!(b.regime.as_str())),
        ("vacuum", json!(energy(b.vacuum))),
        ("thermal", json!(energy(b.thermal))),
        ("total", json!(energy(b.total))),
        ("auto_approximation", json!(approx.as_str())),
        ("thermal_auto", json!(energy(thermal_auto))),
        ("notes", json!(b.notes)),
    ];
    write_record(out, a.format, &fields)
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        Value::Number(n) => match n.as_f64() {
            Some(f) if n.is_f64() => format!("{f:.16e}"),
            _ => n.to_string(),
        },
        other => other.to_string(),
    }
}

fn write_record<W: Write>(
    out: &mut W,
    format: Format,
    fields: &[(&str, Value)],
) -> Result<(), Failure> {
    match format {
        Format::Json => {
            let map: Map<String, Value> = fields
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect();
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&Value::Object(map)).unwrap_or_default()
            )?;
        }
        Format::Csv => {
            let keys: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
            let vals: Vec<String> = fields.iter().map(|(_, v)| csv_cell(&plain(v))).collect();
            writeln!(out, "{}", keys.join(","))?;
            writeln!(out, "{}", vals.join(","))?;
        }
        Format::Text => {
            let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in fields {
                writeln!(out, "{k:<width$}  {}", plain(v))?;
            }
        }
    }
    Ok(())
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn curve<W: Write>(a: &CurveArgs, config: &Config, out: &mut W) -> Result<(), Failure> {
    let figure = Figure::from_id(a.figure)
        .ok_or_else(|| Failure::Usage("figure must be 1, 2 or 3".into()))?;
    let mut spec = CurveSpec::new(figure, a.theta.unwrap_or(config.default_theta));
    spec.points = a.points;
    if let Some(r) = a.range {
        spec.x_range = r;
    }
    let table = evaluate_curve(&spec)?;
    match &a.output {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| Failure::Usage(format!("cannot create {}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            table.write_csv(&mut w)?;
            w.flush()?;
        }
        None => table.write_csv(out)?,
    }
    Ok(())
}

fn verify_cmd<W: Write>(a: &VerifyArgs, out: &mut W) -> Result<(), Failure> {
    let mode = if a.quick { Mode::Quick } else { Mode::Full };
    let report = verify::run(mode);
    match a.format {
        Format::Json => {
            let v = serde_json::to_value(&report).map_err(|e| Failure::Numeric(e.to_string()))?;
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&v).unwrap_or_default()
            )?;
        }
        Format::Csv => {
            writeln!(
                out,
                "id,passed,flag,measured,tolerance,seconds,title,detail"
            )?;
            for c in &report.criteria {
                writeln!(
                    out,
                    "{},{},{},{:e},{:e},{:.3},{},{}",
                    c.id,
                    c.passed,
                    c.flag.unwrap_or(""),
                    c.measured,
                    c.tolerance,
                    c.seconds,
                    csv_cell(c.title),
                    csv_cell(&c.detail)
                )?;
            }
        }
        Format::Text => {
            for c in &report.criteria {
                writeln!(out, "{}", c.line())?;
            }
            let failed = report.criteria.iter().filter(|c| !c.passed).count();
            writeln!(
                out,
                "{} of {} criteria passed",
                report.criteria.len() - failed,
                report.criteria.len()
            )?;
        }
    }
    out.flush()?;
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Rejected)
    }
}

fn analyze<W: Write>(a: &AnalyzeArgs, config: &Config, out: &mut W) -> Result<(), Failure> {
    let theta = a.theta.unwrap_or(config.default_theta);
    let atom = AtomParams::new(1.0, 1.0)?;
    let env = ThermalEnvironment::from_theta(theta, &atom)?;
    let windows = if a.fit_window.is_empty() {
        HARMONIC_WINDOWS.to_vec()
    } else {
        a.fit_window.clone()
    };

    let eq = find_thermal_equilibrium(&atom, &env)?;
    let crossover = dominance_crossover(&atom, &env)? / env.lambda_t;
    let fits = windows
        .iter()
        .map(|&w| quadratic_fit(&atom, &env, w, DEFAULT_FIT_POINTS))
        .collect::<cpwall::Result<Vec<_>>>()?;
    let grid: Vec<f64> = logspace(0.01, 5.0, 12)
        .into_iter()
        .map(|u| u * env.lambda_t)
        .collect();
    let table = regime_error_table(&atom, &env, &grid)?;

    match a.format {
        Format::Json => {
            let v = json!({
                "theta": theta,
                "equilibrium": eq,
                "crossover_over_lambda_t": crossover,
                "fits": fits.iter().map(|f| json!({"fit": f, "vertex": f.vertex()})).collect::<Vec<_>>(),
                "regime_errors": table,
            });
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&v).unwrap_or_default()
            )?;
        }
        Format::Csv => {
            writeln!(
                out,
                "z_over_lambdaT,x0,nonretarded,retarded,short_leading,long_expansion,lifshitz"
            )?;
            let cell = |v: Option<f64>| v.map(|x| format!("{x:.6e}")).unwrap_or_default();
            for r in &table {
                writeln!(
                    out,
                    "{},{:.6e},{:.6e},{:.6e},{},{},{}",
                    cell(r.z_over_lambda_t),
                    r.x0,
                    r.nonretarded,
                    r.retarded,
                    cell(r.short_leading),
                    cell(r.long_expansion),
                    cell(r.lifshitz)
                )?;
            }
        }
        Format::Text => {
            writeln!(out, "theta = {theta}")?;
            writeln!(
                out,
                "equilibrium: z*/lambda_T = {:.5} ({}, d2V/du2 = {:.5} hbar c alpha0/lambda_T^4)",
                eq.z_star_over_lambda_t,
                if eq.is_stable() { "stable" } else { "unstable" },
                eq.second_derivative
            )?;
            writeln!(
                out,
                "thermal term overtakes vacuum at z/lambda_T = {crossover:.5}"
            )?;
            for f in &fits {
                let (c0, c1, c2) = f.coefficients;
                writeln!(
                    out,
                    "fit on [{}, {}]: V_T = {c0:.6} + {c1:.6} u + {c2:.6} u^2, rms/range = {:.3e}, vertex u = {:.4}",
                    f.window.0,
                    f.window.1,
                    f.rms_residual_relative,
                    f.vertex()
                )?;
            }
            writeln!(out, "relative error of the approximations:")?;
            writeln!(
                out,
                "{:>10} {:>10} {:>11} {:>11} {:>11} {:>11} {:>11}",
                "z/lambda_T", "x0", "nonret", "retarded", "short", "long", "lifshitz"
            )?;
            let cell = |v: Option<f64>| v.map(|x| format!("{x:.3e}")).unwrap_or_else(|| "-".into());
            for r in &table {
                writeln!(
                    out,
                    "{:>10.4} {:>10.3} {:>11.3e} {:>11.3e} {:>11} {:>11} {:>11}",
                    r.z_over_lambda_t.unwrap_or(0.0),
                    r.x0,
                    r.nonretarded,
                    r.retarded,
                    cell(r.short_leading),
                    cell(r.long_expansion),
                    cell(r.lifshitz)
                )?;
            }
        }
    }
    Ok(())
}
