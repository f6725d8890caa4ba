//! Command-line and config-file parsing.
//!
//! Every setting has one name shared by the TOML file and the echoed
//! configuration, so the echo can be fed back through `--config`. Flags
//! override file values, which override the per-subcommand defaults.

use std::f64::consts::PI;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Failure;

#[derive(Debug, Parser)]
#[command(name = "tfse", version, about = "Time-fractional Schrödinger equation scenarios")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scenario {
    Ml,
    Free,
    Well,
    Green,
    Fracderiv,
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scenario::Ml => "ml",
            Scenario::Free => "free",
            Scenario::Well => "well",
            Scenario::Green => "green",
            Scenario::Fracderiv => "fracderiv",
        })
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate E_{α,β}(z) once and print `re im error_bound method`
    Ml {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_parser = parse_complex)]
        alpha: Option<Complex64>,
        #[arg(long, value_parser = parse_complex)]
        beta: Option<Complex64>,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z: Option<Complex64>,
    },
    /// Evolve a free Gaussian packet
    Free {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        packet: PacketArgs,
        /// Emit the causal time kernel on the (t, k) grid instead of the field
        #[arg(long)]
        kernel: bool,
    },
    /// Evolve a superposition of infinite-well modes
    Well {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        width: Option<f64>,
        /// Mode coefficients as `n:c` pairs, e.g. `1:1,3:0.5-0.2i`
        #[arg(long)]
        modes: Option<String>,
    },
    /// Apply a Green function to a Gaussian packet
    Green {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        packet: PacketArgs,
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        /// Emit the momentum-space multiplier on the (t, k) grid instead of the field
        #[arg(long)]
        kernel: bool,
    },
    /// Fractional derivative of the evolving free packet
    Fracderiv {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        packet: PacketArgs,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        lambda: Option<Complex64>,
    },
}

#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// Derivative order, real or complex (`0.5+0.1i`)
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, conflicts_with_all = ["nu_re", "nu_im"])]
    pub nu: Option<Complex64>,
    #[arg(long, allow_hyphen_values = true)]
    pub nu_re: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub nu_im: Option<f64>,
    /// Mass ratio m / M_p
    #[arg(long)]
    pub nm: Option<f64>,
    #[arg(long)]
    pub lp: Option<f64>,
    #[arg(long)]
    pub tp: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub t_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub t_max: Option<f64>,
    #[arg(long)]
    pub nt: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub x_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub x_max: Option<f64>,
    #[arg(long)]
    pub nx: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub k_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub k_max: Option<f64>,
    #[arg(long)]
    pub nk: Option<usize>,
    /// Mittag-Leffler tolerance, in (0, 1e-2]
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// TOML file with default settings; flags win over its values
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct PacketArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub k_center: Option<f64>,
    #[arg(long)]
    pub sigma_k: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub x0: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Retarded,
    Advanced,
    Wheeler,
}

/// A complex setting. Files may give a number or a string such as `"0.5-1i"`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexValue(pub Complex64);

impl Serialize for ComplexValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.im == 0.0 {
            s.serialize_f64(self.0.re)
        } else {
            s.serialize_str(&self.0.to_string())
        }
    }
}

impl<'de> Deserialize<'de> for ComplexValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Float(f64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(ComplexValue(Complex64::new(v as f64, 0.0))),
            Raw::Float(v) => Ok(ComplexValue(Complex64::new(v, 0.0))),
            Raw::Text(s) => parse_complex(&s).map(ComplexValue).map_err(serde::de::Error::custom),
        }
    }
}

pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let v = Complex64::from_str(s.trim()).map_err(|_| format!("`{s}` is not a real or complex number"))?;
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(format!("`{s}` is not finite"))
    }
}

/// Every setting, as read from a file or echoed after resolution.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Settings {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<ComplexValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nm: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lp: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tp: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_min: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_max: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nt: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x_min: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x_max: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nx: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_min: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_max: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nk: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_center: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma_k: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x0: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub width: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modes: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<Kind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<ComplexValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<ComplexValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<ComplexValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<ComplexValue>,
}

macro_rules! overlay {
    ($hi:expr, $lo:expr; $($f:ident),*) => {
        Settings { $($f: $hi.$f.or($lo.$f),)* }
    };
}

impl Settings {
    /// Field-wise `self` where set, otherwise `lower`.
    pub fn over(self, lower: Settings) -> Settings {
        overlay!(self, lower; nu, nm, lp, tp, t_min, t_max, nt, x_min, x_max, nx, k_min, k_max, nk, tol,
            output, format, k_center, sigma_k, x0, width, modes, kind, kernel, lambda, alpha, beta, z)
    }

    pub fn from_file(path: &Path) -> Result<Settings, Failure> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("--config: cannot read {}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| Failure::Usage(format!("--config: {}: {}", path.display(), e.message())))
    }

    fn defaults(scenario: Scenario, width: f64) -> Settings {
        let mut d = Settings {
            nu: Some(ComplexValue(Complex64::new(1.0, 0.0))),
            nm: Some(1.0),
            lp: Some(1.0),
            tp: Some(1.0),
            t_min: Some(0.0),
            t_max: Some(1.0),
            nt: Some(11),
            x_min: Some(-10.0),
            x_max: Some(10.0),
            nx: Some(201),
            k_min: Some(-10.0),
            k_max: Some(10.0),
            nk: Some(401),
            tol: Some(1e-12),
            format: Some(Format::Csv),
            ..Settings::default()
        };
        match scenario {
            Scenario::Ml => {
                d = Settings {
                    tol: d.tol,
                    format: d.format,
                    alpha: Some(ComplexValue(Complex64::new(1.0, 0.0))),
                    beta: Some(ComplexValue(Complex64::new(1.0, 0.0))),
                    z: Some(ComplexValue(Complex64::new(0.0, 0.0))),
                    ..Settings::default()
                }
            }
            Scenario::Free => {
                d.kernel = Some(false);
                packet_defaults(&mut d);
            }
            Scenario::Green => {
                // t = 0 is singular for Re ν ≤ 1, so the default window starts after it
                d.t_min = Some(0.25);
                d.t_max = Some(2.0);
                d.nt = Some(8);
                d.kind = Some(Kind::Retarded);
                d.kernel = Some(false);
                packet_defaults(&mut d);
            }
            Scenario::Fracderiv => {
                d.lambda = Some(ComplexValue(Complex64::new(0.5, 0.0)));
                packet_defaults(&mut d);
            }
            Scenario::Well => {
                d.k_min = None;
                d.k_max = None;
                d.nk = None;
                d.width = Some(width);
                d.modes = Some("1:1".into());
                d.x_min = Some(0.0);
                d.x_max = Some(width);
                d.nx = Some(101);
            }
        }
        d
    }
}

fn packet_defaults(d: &mut Settings) {
    d.k_center = Some(0.0);
    d.sigma_k = Some(1.0);
    d.x0 = Some(0.0);
}

/// Flag values as a settings layer; `nu` and `flag_for_nu` need the layer below
/// when only one of `--nu-re` / `--nu-im` is given.
fn flag_layer(command: &Command) -> (Scenario, &CommonArgs, Settings) {
    let mut s = Settings::default();
    let (scenario, common) = match command {
        Command::Ml { common, alpha, beta, z } => {
            s.alpha = alpha.map(ComplexValue);
            s.beta = beta.map(ComplexValue);
            s.z = z.map(ComplexValue);
            (Scenario::Ml, common)
        }
        Command::Free { common, packet, kernel } => {
            packet_layer(&mut s, packet);
            s.kernel = kernel.then_some(true);
            (Scenario::Free, common)
        }
        Command::Well { common, width, modes } => {
            s.width = *width;
            s.modes = modes.clone();
            (Scenario::Well, common)
        }
        Command::Green { common, packet, kind, kernel } => {
            packet_layer(&mut s, packet);
            s.kind = *kind;
            s.kernel = kernel.then_some(true);
            (Scenario::Green, common)
        }
        Command::Fracderiv { common, packet, lambda } => {
            packet_layer(&mut s, packet);
            s.lambda = lambda.map(ComplexValue);
            (Scenario::Fracderiv, common)
        }
    };
    s.nu = common.nu.map(ComplexValue);
    s.nm = common.nm;
    s.lp = common.lp;
    s.tp = common.tp;
    s.t_min = common.t_min;
    s.t_max = common.t_max;
    s.nt = common.nt;
    s.x_min = common.x_min;
    s.x_max = common.x_max;
    s.nx = common.nx;
    s.k_min = common.k_min;
    s.k_max = common.k_max;
    s.nk = common.nk;
    s.tol = common.tol;
    s.output = common.output.clone();
    s.format = common.format;
    (scenario, common, s)
}

fn packet_layer(s: &mut Settings, p: &PacketArgs) {
    s.k_center = p.k_center;
    s.sigma_k = p.sigma_k;
    s.x0 = p.x0;
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub min: f64,
    pub max: f64,
    pub n: usize,
}

impl Grid {
    pub fn points(&self) -> Vec<f64> {
        tfse_core::grid::linspace(self.min, self.max, self.n)
    }
}

/// Scenario-specific parameters after validation.
#[derive(Debug, Clone, PartialEq)]
pub enum Params {
    Ml { alpha: Complex64, beta: Complex64, z: Complex64 },
    Free { packet: Packet, kernel: bool },
    Well { width: f64, modes: Vec<Complex64> },
    Green { packet: Packet, kind: Kind, kernel: bool },
    Fracderiv { packet: Packet, lambda: Complex64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Packet {
    pub k_center: f64,
    pub sigma_k: f64,
    pub x0: f64,
}

/// A validated, fully resolved run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub scenario: Scenario,
    pub nu: Complex64,
    pub scales: tfse_core::scales::Scales,
    pub t: Grid,
    pub x: Grid,
    pub k: Grid,
    pub params: Params,
    pub tolerance: f64,
    pub output: Option<PathBuf>,
    pub format: Format,
    /// The resolved settings, in config-file form.
    pub settings: Settings,
}

impl RunConfig {
    /// The resolved settings as TOML, suitable for `--config`.
    pub fn echo(&self) -> String {
        let mut out = format!("# tfse {}\n", self.scenario);
        let Ok(toml::Value::Table(table)) = toml::Value::try_from(&self.settings) else {
            return out;
        };
        // the toml writer spells small floats out in full; shortest round-trip form reads better
        for (key, value) in &table {
            match value {
                toml::Value::Float(v) => out.push_str(&format!("{key} = {v:?}\n")),
                other => out.push_str(&format!("{key} = {other}\n")),
            }
        }
        out
    }
}

/// Merges flags, the optional config file and defaults, then validates.
pub fn resolve(cli: &Cli) -> Result<RunConfig, Failure> {
    let (scenario, common, mut flags) = flag_layer(&cli.command);
    let file = match &common.config {
        Some(p) => Settings::from_file(p)?,
        None => Settings::default(),
    };
    if common.nu_re.is_some() || common.nu_im.is_some() {
        let below = file.nu.map_or(Complex64::new(1.0, 0.0), |c| c.0);
        flags.nu = Some(ComplexValue(Complex64::new(common.nu_re.unwrap_or(below.re), common.nu_im.unwrap_or(below.im))));
    }
    let nu_flag = if common.nu_re.is_some() {
        "--nu-re"
    } else if common.nu_im.is_some() {
        "--nu-im"
    } else {
        "--nu"
    };
    let merged = flags.over(file);
    let width = merged.width.unwrap_or(PI);
    let settings = merged.over(Settings::defaults(scenario, width));
    validate(scenario, settings, nu_flag)
}

fn usage(flag: &str, msg: impl fmt::Display) -> Failure {
    Failure::Usage(format!("{flag}: {msg}"))
}

fn positive(v: f64, flag: &str) -> Result<f64, Failure> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(usage(flag, format!("must be finite and > 0, got {v}")))
    }
}

fn grid(min: Option<f64>, max: Option<f64>, n: Option<usize>, axis: &str) -> Result<Grid, Failure> {
    let (min, max, n) = (min.unwrap_or(0.0), max.unwrap_or(0.0), n.unwrap_or(0));
    if !min.is_finite() {
        return Err(usage(&format!("--{axis}-min"), "must be finite"));
    }
    if !(max.is_finite() && max > min) {
        return Err(usage(&format!("--{axis}-max"), format!("must be finite and > {min}, got {max}")));
    }
    if n < 2 {
        return Err(usage(&format!("--n{axis}"), format!("need at least 2 points, got {n}")));
    }
    Ok(Grid { min, max, n })
}

fn parse_modes(text: &str) -> Result<Vec<Complex64>, Failure> {
    let mut coeffs: Vec<Complex64> = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (n, c) = item.split_once(':').ok_or_else(|| usage("--modes", format!("`{item}` is not of the form n:c")))?;
        let n: usize = n.trim().parse().map_err(|_| usage("--modes", format!("bad mode index `{n}`")))?;
        if n == 0 {
            return Err(usage("--modes", "mode indices start at 1"));
        }
        let c = parse_complex(c).map_err(|e| usage("--modes", e))?;
        if coeffs.len() < n {
            coeffs.resize(n, Complex64::new(0.0, 0.0));
        }
        coeffs[n - 1] += c;
    }
    if coeffs.is_empty() {
        return Err(usage("--modes", "no modes given"));
    }
    Ok(coeffs)
}

fn validate(scenario: Scenario, settings: Settings, nu_flag: &str) -> Result<RunConfig, Failure> {
    let s = &settings;
    let tolerance = s.tol.unwrap_or(1e-12);
    if !(tolerance > 0.0 && tolerance <= 1e-2) {
        return Err(usage("--tol", format!("must lie in (0, 1e-2], got {tolerance}")));
    }
    let format = s.format.unwrap_or(Format::Csv);
    let nu = s.nu.map_or(Complex64::new(1.0, 0.0), |c| c.0);
    let unit = Grid { min: 0.0, max: 1.0, n: 2 };
    let complex = |v: Option<ComplexValue>| v.map_or(Complex64::new(0.0, 0.0), |c| c.0);

    if scenario == Scenario::Ml {
        let alpha = complex(s.alpha);
        if !(alpha.re > 0.0) {
            return Err(usage("--alpha", format!("Re(alpha) must be > 0, got {alpha}")));
        }
        return Ok(RunConfig {
            scenario,
            nu,
            scales: tfse_core::scales::Scales::default(),
            t: unit,
            x: unit,
            k: unit,
            params: Params::Ml { alpha, beta: complex(s.beta), z: complex(s.z) },
            tolerance,
            output: s.output.clone(),
            format,
            settings,
        });
    }

    if !(nu.re > 0.0) {
        return Err(usage(nu_flag, format!("Re(nu) must be > 0, got {nu}")));
    }
    let nm = positive(s.nm.unwrap_or(1.0), "--nm")?;
    let lp = positive(s.lp.unwrap_or(1.0), "--lp")?;
    let tp = positive(s.tp.unwrap_or(1.0), "--tp")?;
    let scales = tfse_core::scales::Scales::new(nm, lp, tp).map_err(|e| usage("--nm/--lp/--tp", e))?;
    let t = grid(s.t_min, s.t_max, s.nt, "t")?;
    if matches!(scenario, Scenario::Free | Scenario::Well | Scenario::Fracderiv) && t.min < 0.0 {
        return Err(usage("--t-min", format!("causal evolution needs t >= 0, got {}", t.min)));
    }
    let x = grid(s.x_min, s.x_max, s.nx, "x")?;
    let k = if scenario == Scenario::Well { unit } else { grid(s.k_min, s.k_max, s.nk, "k")? };
    let packet = || -> Result<Packet, Failure> {
        let k_center = s.k_center.unwrap_or(0.0);
        let x0 = s.x0.unwrap_or(0.0);
        if !k_center.is_finite() {
            return Err(usage("--k-center", "must be finite"));
        }
        if !x0.is_finite() {
            return Err(usage("--x0", "must be finite"));
        }
        Ok(Packet { k_center, sigma_k: positive(s.sigma_k.unwrap_or(1.0), "--sigma-k")?, x0 })
    };
    let params = match scenario {
        Scenario::Ml => unreachable!(),
        Scenario::Free => Params::Free { packet: packet()?, kernel: s.kernel.unwrap_or(false) },
        Scenario::Green => Params::Green {
            packet: packet()?,
            kind: s.kind.unwrap_or(Kind::Retarded),
            kernel: s.kernel.unwrap_or(false),
        },
        Scenario::Fracderiv => Params::Fracderiv { packet: packet()?, lambda: complex(s.lambda) },
        Scenario::Well => {
            let width = positive(s.width.unwrap_or(PI), "--width")?;
            let modes = parse_modes(s.modes.as_deref().unwrap_or("1:1"))?;
            let slack = 1e-12 * width;
            if x.min < -slack || x.max > width + slack {
                return Err(usage("--x-min/--x-max", format!("the x-grid must lie inside [0, {width}]")));
            }
            Params::Well { width, modes }
        }
    };
    Ok(RunConfig { scenario, nu, scales, t, x, k, params, tolerance, output: s.output.clone(), format, settings })
}
