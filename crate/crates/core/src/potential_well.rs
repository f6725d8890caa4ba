//! Infinite square well on `[0, a]`.
//!
//! Modes are `sin(nπx/a)`, `n ≥ 1`, and a state is the coefficient list
//! `a_n`. Mode `n` evolves with the scalar kernels at `w_n = β²(nπ/a)²`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::free_particle::MAX_GENERAL_M;
use crate::grid::{trapezoid_weights, SpaceTimeField};
use crate::kernels::{canonical_decomposition_half, causal_kernel_with, general_kernel_with};
use crate::mittag_leffler::MlConfig;
use crate::scales::{well_w, DerivativeOrder, Scales};

/// Default number of modes kept when projecting.
pub const DEFAULT_MODES: usize = 32;

/// Endpoint-to-peak ratio above which samples are said not to vanish at the walls.
pub const WALL_LIMIT: f64 = 1e-10;

/// Width and coefficients; `coefficients()[j]` belongs to mode `n = j + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct WellSpectrum {
    width: f64,
    coefficients: Vec<Complex64>,
}

impl WellSpectrum {
    pub fn new(width: f64, coefficients: Vec<Complex64>) -> Result<Self> {
        if !(width > 0.0 && width.is_finite()) {
            return Err(Error::InvalidArgument("well width must be finite and > 0"));
        }
        if coefficients.is_empty() {
            return Err(Error::InvalidArgument("well spectrum needs at least one mode"));
        }
        Ok(WellSpectrum { width, coefficients })
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    /// `a_n`, zero beyond the stored modes.
    pub fn coefficient(&self, n: u32) -> Complex64 {
        match n {
            0 => Complex64::new(0.0, 0.0),
            _ => self.coefficients.get(n as usize - 1).copied().unwrap_or_default(),
        }
    }

    /// `Σ a_n sin(nπx/a)` at each `x`.
    pub fn reconstruct(&self, x_values: &[f64]) -> Vec<Complex64> {
        let modes = mode_table(self.coefficients.len(), self.width, x_values);
        synthesize(&self.coefficients, &modes, x_values.len())
    }
}

/// `sin(nπx/a)`, x-major, `n = 1..=n_modes`.
fn mode_table(n_modes: usize, width: f64, x_values: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(n_modes * x_values.len());
    for &x in x_values {
        let q = PI * x / width;
        for n in 1..=n_modes {
            out.push((q * n as f64).sin());
        }
    }
    out
}

fn synthesize(coeffs: &[Complex64], modes: &[f64], nx: usize) -> Vec<Complex64> {
    let nm = coeffs.len();
    (0..nx).map(|ix| modes[ix * nm..(ix + 1) * nm].iter().zip(coeffs).map(|(s, c)| c * s).sum()).collect()
}

fn check_inside(width: f64, x_values: &[f64]) -> Result<()> {
    let slack = 1e-12 * width;
    if x_values.iter().any(|&x| !(x >= -slack && x <= width + slack)) {
        return Err(Error::InvalidArgument("x values must lie inside the well"));
    }
    Ok(())
}

/// `a_n = (2/a) ∫₀^a ψ(x) sin(nπx/a) dx` by the trapezoid rule on the uniform
/// grid `x_j = j a / (len − 1)`.
///
/// On that grid the discrete sines are orthogonal, so the projection of any
/// combination of modes `n < len − 1` is exact up to rounding.
pub fn project_initial(samples: &[Complex64], width: f64, n_modes: usize) -> Result<WellSpectrum> {
    if samples.len() < 3 {
        return Err(Error::InvalidArgument("projection needs at least three samples"));
    }
    if n_modes == 0 {
        return Err(Error::InvalidArgument("projection needs at least one mode"));
    }
    let peak = samples.iter().fold(0.0, |m: f64, v| m.max(v.norm()));
    let wall = samples[0].norm().max(samples[samples.len() - 1].norm());
    if peak > 0.0 && wall > WALL_LIMIT * peak {
        return Err(Error::BoundaryViolation(wall / peak));
    }
    let x = crate::grid::linspace(0.0, width, samples.len());
    let w = trapezoid_weights(&x)?;
    let modes = mode_table(n_modes, width, &x);
    let mut coefficients = alloc::vec![Complex64::new(0.0, 0.0); n_modes];
    for (j, (v, wj)) in samples.iter().zip(&w).enumerate() {
        let row = &modes[j * n_modes..(j + 1) * n_modes];
        for (c, s) in coefficients.iter_mut().zip(row) {
            *c += v * (wj * s);
        }
    }
    let scale = 2.0 / width;
    coefficients.iter_mut().for_each(|c| *c *= scale);
    WellSpectrum::new(width, coefficients)
}

/// `ψ(t, x) = Σ_n a_n sin(nπx/a) E_ν((−it)^ν w_n)` for `t ≥ 0`.
pub fn evolve_well(
    ws: &WellSpectrum,
    nu: DerivativeOrder,
    scales: &Scales,
    t_values: &[f64],
    x_values: &[f64],
    cfg: &MlConfig,
) -> Result<SpaceTimeField> {
    if let Some(&t) = t_values.iter().find(|t| !(**t >= 0.0)) {
        return Err(Error::NegativeTime(t));
    }
    check_inside(ws.width, x_values)?;
    let n_modes = ws.coefficients.len();
    let modes = mode_table(n_modes, ws.width, x_values);
    let w = (1..=n_modes as u32).map(|n| well_w(n, ws.width, nu, scales)).collect::<Result<Vec<_>>>()?;
    let mut values = Vec::with_capacity(t_values.len() * x_values.len());
    let mut coeffs = alloc::vec![Complex64::new(0.0, 0.0); n_modes];
    for &t in t_values {
        for (j, c) in coeffs.iter_mut().enumerate() {
            let a = ws.coefficients[j];
            *c = if a == Complex64::new(0.0, 0.0) { a } else { a * causal_kernel_with(nu, w[j], t, cfg)? };
        }
        values.extend(synthesize(&coeffs, &modes, x_values.len()));
    }
    SpaceTimeField::new(t_values.to_vec(), x_values.to_vec(), values)
}

/// One coefficient `a_nm` of `a_n(k₀) = Σ_m a_nm k₀^m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralWellTerm {
    n: u32,
    m: u32,
    coefficient: Complex64,
}

impl GeneralWellTerm {
    pub fn new(n: u32, m: u32, coefficient: Complex64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("well mode index starts at 1"));
        }
        if m > MAX_GENERAL_M {
            return Err(Error::InvalidArgument("general spectral term index m exceeds the supported maximum"));
        }
        Ok(GeneralWellTerm { n, m, coefficient })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn coefficient(&self) -> Complex64 {
        self.coefficient
    }
}

/// `ψ(t, x) = Σ a_nm sin(nπx/a) G_m(t, w_n)` with the general kernels.
pub fn evolve_well_general(
    terms: &[GeneralWellTerm],
    nu: DerivativeOrder,
    scales: &Scales,
    width: f64,
    t_values: &[f64],
    x_values: &[f64],
    cfg: &MlConfig,
) -> Result<SpaceTimeField> {
    if !(width > 0.0 && width.is_finite()) {
        return Err(Error::InvalidArgument("well width must be finite and > 0"));
    }
    check_inside(width, x_values)?;
    let n_max = terms.iter().map(|t| t.n).max().unwrap_or(0) as usize;
    if n_max == 0 {
        return Ok(SpaceTimeField::zeros(t_values.to_vec(), x_values.to_vec()));
    }
    let modes = mode_table(n_max, width, x_values);
    let mut values = Vec::with_capacity(t_values.len() * x_values.len());
    let mut coeffs = alloc::vec![Complex64::new(0.0, 0.0); n_max];
    for &t in t_values {
        coeffs.iter_mut().for_each(|c| *c = Complex64::new(0.0, 0.0));
        for term in terms {
            if term.coefficient == Complex64::new(0.0, 0.0) {
                continue;
            }
            let w = well_w(term.n, width, nu, scales)?;
            coeffs[term.n as usize - 1] += term.coefficient * general_kernel_with(nu, term.m, w, t, cfg)?;
        }
        values.extend(synthesize(&coeffs, &modes, x_values.len()));
    }
    SpaceTimeField::new(t_values.to_vec(), x_values.to_vec(), values)
}

/// On-shell and off-shell `ν = 1/2` fields at one time `t > 0`.
pub fn decompose_half_well(
    ws: &WellSpectrum,
    scales: &Scales,
    t: f64,
    x_values: &[f64],
) -> Result<(SpaceTimeField, SpaceTimeField)> {
    if !(t > 0.0) {
        return Err(Error::InvalidArgument("half-shell decomposition needs t > 0"));
    }
    check_inside(ws.width, x_values)?;
    let half = DerivativeOrder::new(0.5)?;
    let n_modes = ws.coefficients.len();
    let modes = mode_table(n_modes, ws.width, x_values);
    let mut on = alloc::vec![Complex64::new(0.0, 0.0); n_modes];
    let mut off = on.clone();
    for (j, &a) in ws.coefficients.iter().enumerate() {
        if a == Complex64::new(0.0, 0.0) {
            continue;
        }
        let parts = canonical_decomposition_half(well_w(j as u32 + 1, ws.width, half, scales)?.re, t)?;
        on[j] = a * parts.onshell;
        off[j] = a * parts.offshell;
    }
    let row = |c: &[Complex64]| SpaceTimeField::new(alloc::vec![t], x_values.to_vec(), synthesize(c, &modes, x_values.len()));
    Ok((row(&on)?, row(&off)?))
}
