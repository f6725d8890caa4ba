//! Scenario execution.

use num_complex::Complex64;
use rayon::prelude::*;
use tfse_core::free_particle::{evolve_free, gaussian_packet, MomentumSpectrum};
use tfse_core::frac_calc::{forward_transform, frac_deriv, inverse_transform};
use tfse_core::green::{apply_green, green_kernel_k_with, GreenKind};
use tfse_core::grid::SpaceTimeField;
use tfse_core::kernels::causal_kernel_with;
use tfse_core::mittag_leffler::{ml_with, MlConfig, MlOrder, MlResult};
use tfse_core::potential_well::{evolve_well, WellSpectrum};
use tfse_core::scales::{dispersion_w, DerivativeOrder};
use tfse_core::Error;

use crate::config::{Format, Kind, Packet, Params, RunConfig};
use crate::output::{number, Table};

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Table(Table),
    Ml(MlResult),
}

impl Outcome {
    pub fn render(&self, format: Format) -> String {
        match self {
            Outcome::Table(t) => t.render(format),
            Outcome::Ml(r) => match format {
                Format::Csv => format!("{} {} {} {}\n", number(r.value.re), number(r.value.im), number(r.abs_error_bound), r.method.name()),
                Format::Json => format!(
                    "{{\"re\":{},\"im\":{},\"error_bound\":{},\"method\":\"{}\"}}\n",
                    number(r.value.re),
                    number(r.value.im),
                    number(r.abs_error_bound),
                    r.method.name()
                ),
            },
        }
    }
}

/// One `SpaceTimeField` per time, evaluated in parallel and stacked t-major.
fn by_rows(t: &[f64], x: &[f64], row: impl Fn(f64) -> Result<SpaceTimeField, Error> + Sync) -> Result<SpaceTimeField, Error> {
    let rows: Vec<SpaceTimeField> = t.par_iter().map(|&t| row(t)).collect::<Result<_, _>>()?;
    let values = rows.iter().flat_map(|r| r.values().iter().copied()).collect();
    SpaceTimeField::new(t.to_vec(), x.to_vec(), values)
}

fn kernel_table(t: &[f64], k: &[f64], f: impl Fn(f64, f64) -> Result<Complex64, Error> + Sync) -> Result<Table, Error> {
    let rows: Vec<Vec<Complex64>> = t.par_iter().map(|&t| k.iter().map(|&k| f(t, k)).collect()).collect::<Result<_, _>>()?;
    Ok(Table::from_kernel(t, k, &rows.concat()))
}

fn packet(p: &Packet, k: &[f64]) -> Result<MomentumSpectrum, Error> {
    gaussian_packet(p.k_center, p.sigma_k, p.x0, k)
}

fn green_kind(k: Kind) -> GreenKind {
    match k {
        Kind::Retarded => GreenKind::Retarded,
        Kind::Advanced => GreenKind::Advanced,
        Kind::Wheeler => GreenKind::Wheeler,
    }
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, Error> {
    let ml_cfg = MlConfig::with_tolerance(cfg.tolerance);
    if let Params::Ml { alpha, beta, z } = cfg.params {
        return ml_with(MlOrder::new(alpha, beta)?, z, &ml_cfg).map(Outcome::Ml);
    }
    let nu = DerivativeOrder::new(cfg.nu)?;
    let s = &cfg.scales;
    let (t, x, k) = (cfg.t.points(), cfg.x.points(), cfg.k.points());
    let table = match &cfg.params {
        Params::Ml { .. } => unreachable!(),
        Params::Free { kernel: true, .. } => {
            kernel_table(&t, &k, |t, k| causal_kernel_with(nu, dispersion_w(k, nu, s), t, &ml_cfg))?
        }
        Params::Free { packet: p, .. } => {
            let spec = packet(p, &k)?;
            Table::from_field(&by_rows(&t, &x, |t| evolve_free(&spec, nu, s, &[t], &x, &ml_cfg))?)
        }
        Params::Well { width, modes } => {
            let ws = WellSpectrum::new(*width, modes.clone())?;
            Table::from_field(&by_rows(&t, &x, |t| evolve_well(&ws, nu, s, &[t], &x, &ml_cfg))?)
        }
        Params::Green { kind, kernel: true, .. } => {
            let kind = green_kind(*kind);
            kernel_table(&t, &k, |t, k| green_kernel_k_with(kind, nu, t, k, s, &ml_cfg))?
        }
        Params::Green { packet: p, kind, .. } => {
            let spec = packet(p, &k)?;
            let kind = green_kind(*kind);
            Table::from_field(&by_rows(&t, &x, |t| apply_green(kind, nu, &spec, &[t], &x, s, &ml_cfg))?)
        }
        Params::Fracderiv { packet: p, lambda } => {
            let spec = packet(p, &k)?;
            let field = by_rows(&t, &x, |t| {
                let psi = evolve_free(&spec, nu, s, &[t], &x, &ml_cfg)?;
                let d = frac_deriv(&forward_transform(psi.values(), &x, &k)?, *lambda)?;
                SpaceTimeField::new(vec![t], x.clone(), inverse_transform(&d, &x)?)
            })?;
            Table::from_field(&field)
        }
    };
    Ok(Outcome::Table(table))
}
