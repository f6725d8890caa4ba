//! Free-particle evolution in momentum space.
//!
//! A state is a sampled amplitude `a(k)` on a uniform k-grid; position space
//! uses the convention `ψ(x) = (1/2π) ∫ a(k) e^{−ikx} dk`. Every field below is
//! the composite trapezoid rule of that integral with a time kernel inserted:
//!
//! ```text
//! ψ(t, x) = (1/2π) Σ_k ω_k K(t, k) a(k) e^{−ikx}
//! ```
//!
//! with `K` the causal kernel, a sum of general kernels, or one half of the
//! `ν = 1/2` split.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::grid::{trapezoid_weights, uniform_spacing, SpaceTimeField};
use crate::kernels::{canonical_decomposition_half, causal_kernel_with, general_kernel_with};
use crate::mittag_leffler::MlConfig;
use crate::scales::{dispersion_w, DerivativeOrder, Scales};

/// Edge-to-peak ratio above which a spectrum counts as truncated.
pub const EDGE_DECAY_LIMIT: f64 = 1e-10;

/// Largest `m` accepted in a general spectral term.
pub const MAX_GENERAL_M: u32 = 8;

/// Sampled `a(k)` on a uniform grid. One sample is a single plane wave with
/// quadrature weight 1.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentumSpectrum {
    k_values: Vec<f64>,
    amplitudes: Vec<Complex64>,
}

impl MomentumSpectrum {
    pub fn new(k_values: Vec<f64>, amplitudes: Vec<Complex64>) -> Result<Self> {
        if k_values.is_empty() || k_values.len() != amplitudes.len() {
            return Err(Error::InvalidArgument("spectrum needs equally long, non-empty k and amplitude arrays"));
        }
        if k_values.len() > 1 {
            uniform_spacing(&k_values)?;
        }
        Ok(MomentumSpectrum { k_values, amplitudes })
    }

    /// The plane wave `c e^{−ik₀x}` at `t = 0`.
    pub fn single_mode(k0: f64, c: Complex64) -> Self {
        MomentumSpectrum { k_values: alloc::vec![k0], amplitudes: alloc::vec![c * (2.0 * PI)] }
    }

    pub fn k_values(&self) -> &[f64] {
        &self.k_values
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// `max(|a(k_first)|, |a(k_last)|) / max |a|`; zero for an empty spectrum.
    pub fn edge_ratio(&self) -> f64 {
        let peak = self.amplitudes.iter().fold(0.0, |m: f64, a| m.max(a.norm()));
        if peak == 0.0 || self.amplitudes.len() < 2 {
            return 0.0;
        }
        let edge = self.amplitudes[0].norm().max(self.amplitudes[self.amplitudes.len() - 1].norm());
        edge / peak
    }

    /// Same grid, amplitudes mapped sample-wise.
    pub fn map(&self, f: impl Fn(f64, Complex64) -> Complex64) -> Self {
        let amplitudes = self.k_values.iter().zip(&self.amplitudes).map(|(&k, &a)| f(k, a)).collect();
        MomentumSpectrum { k_values: self.k_values.clone(), amplitudes }
    }

    /// Quadrature weights `ω_k / 2π`.
    fn weights(&self) -> Result<Vec<f64>> {
        Ok(trapezoid_weights(&self.k_values)?.into_iter().map(|w| w / (2.0 * PI)).collect())
    }
}

/// `a(k) = N exp(−(k − k_c)² / 4σ_k²) e^{ikx₀}`, with `N = (2π)^{1/4} σ_k^{−1/2}`
/// so that `∫ |ψ(0, x)|² dx = 1`.
pub fn gaussian_packet(k_center: f64, sigma_k: f64, x0: f64, k_values: &[f64]) -> Result<MomentumSpectrum> {
    if !(sigma_k > 0.0 && sigma_k.is_finite()) {
        return Err(Error::InvalidArgument("sigma_k must be finite and > 0"));
    }
    let norm = (2.0 * PI).powf(0.25) / sigma_k.sqrt();
    let amplitudes = k_values
        .iter()
        .map(|&k| {
            let d = (k - k_center) / sigma_k;
            Complex64::from_polar(norm * (-0.25 * d * d).exp(), k * x0)
        })
        .collect();
    let spec = MomentumSpectrum::new(k_values.to_vec(), amplitudes)?;
    let ratio = spec.edge_ratio();
    if ratio > EDGE_DECAY_LIMIT {
        return Err(Error::GridTooNarrow { ratio, limit: EDGE_DECAY_LIMIT });
    }
    Ok(spec)
}

/// `e^{−ikx}` for every `(x, k)`, x-major.
fn plane_waves(k_values: &[f64], x_values: &[f64]) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(k_values.len() * x_values.len());
    for &x in x_values {
        for &k in k_values {
            out.push(Complex64::from_polar(1.0, -k * x));
        }
    }
    out
}

/// Sums `Σ_k c_k e^{−ikx}` for every `x` and appends to `out`.
fn synthesize(coeffs: &[Complex64], waves: &[Complex64], nx: usize, out: &mut Vec<Complex64>) {
    let nk = coeffs.len();
    for ix in 0..nx {
        let row = &waves[ix * nk..(ix + 1) * nk];
        out.push(row.iter().zip(coeffs).map(|(e, c)| e * c).sum());
    }
}

/// Causal evolution `ψ(t, x)` for `t ≥ 0`.
pub fn evolve_free(
    spec: &MomentumSpectrum,
    nu: DerivativeOrder,
    scales: &Scales,
    t_values: &[f64],
    x_values: &[f64],
    cfg: &MlConfig,
) -> Result<SpaceTimeField> {
    if let Some(&t) = t_values.iter().find(|t| !(**t >= 0.0)) {
        return Err(Error::NegativeTime(t));
    }
    let weights = spec.weights()?;
    let waves = plane_waves(&spec.k_values, x_values);
    let w: Vec<Complex64> = spec.k_values.iter().map(|&k| dispersion_w(k, nu, scales)).collect();
    let mut values = Vec::with_capacity(t_values.len() * x_values.len());
    let mut coeffs = alloc::vec![Complex64::new(0.0, 0.0); spec.k_values.len()];
    for &t in t_values {
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = if spec.amplitudes[i] == Complex64::new(0.0, 0.0) {
                Complex64::new(0.0, 0.0)
            } else {
                spec.amplitudes[i] * weights[i] * causal_kernel_with(nu, w[i], t, cfg)?
            };
        }
        synthesize(&coeffs, &waves, x_values.len(), &mut values);
    }
    SpaceTimeField::new(t_values.to_vec(), x_values.to_vec(), values)
}

/// One coefficient `a_m(k)` of the expansion `a(k₀, k) = Σ_m a_m(k) k₀^m`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralSpectralTerm {
    m: u32,
    amplitudes: Vec<Complex64>,
}

impl GeneralSpectralTerm {
    pub fn new(m: u32, amplitudes: Vec<Complex64>) -> Result<Self> {
        if m > MAX_GENERAL_M {
            return Err(Error::InvalidArgument("general spectral term index m exceeds the supported maximum"));
        }
        Ok(GeneralSpectralTerm { m, amplitudes })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }
}

/// `ψ(t, x) = Σ_m (1/2π) Σ_k ω_k a_m(k) G_m(t, k) e^{−ikx}` with the general
/// kernels `G_m`; `t` may be negative.
pub fn evolve_free_general(
    k_values: &[f64],
    terms: &[GeneralSpectralTerm],
    nu: DerivativeOrder,
    scales: &Scales,
    t_values: &[f64],
    x_values: &[f64],
    cfg: &MlConfig,
) -> Result<SpaceTimeField> {
    if terms.is_empty() {
        return Ok(SpaceTimeField::zeros(t_values.to_vec(), x_values.to_vec()));
    }
    if terms.iter().any(|term| term.amplitudes.len() != k_values.len()) {
        return Err(Error::InvalidArgument("term amplitudes must match the k-grid"));
    }
    let weights: Vec<f64> = MomentumSpectrum::new(k_values.to_vec(), alloc::vec![Complex64::new(0.0, 0.0); k_values.len()])?.weights()?;
    let waves = plane_waves(k_values, x_values);
    let w: Vec<Complex64> = k_values.iter().map(|&k| dispersion_w(k, nu, scales)).collect();
    let mut values = Vec::with_capacity(t_values.len() * x_values.len());
    let mut coeffs = alloc::vec![Complex64::new(0.0, 0.0); k_values.len()];
    for &t in t_values {
        coeffs.iter_mut().for_each(|c| *c = Complex64::new(0.0, 0.0));
        for term in terms {
            for (i, c) in coeffs.iter_mut().enumerate() {
                let a = term.amplitudes[i];
                if a != Complex64::new(0.0, 0.0) {
                    *c += a * weights[i] * general_kernel_with(nu, term.m, w[i], t, cfg)?;
                }
            }
        }
        synthesize(&coeffs, &waves, x_values.len(), &mut values);
    }
    SpaceTimeField::new(t_values.to_vec(), x_values.to_vec(), values)
}

/// On-shell and off-shell `ν = 1/2` fields at a single time `t > 0`
/// (one-row fields), using the canonical split for every mode.
pub fn decompose_half_shell(
    spec: &MomentumSpectrum,
    scales: &Scales,
    t: f64,
    x_values: &[f64],
) -> Result<(SpaceTimeField, SpaceTimeField)> {
    if !(t > 0.0) {
        return Err(Error::InvalidArgument("half-shell decomposition needs t > 0"));
    }
    let half = DerivativeOrder::new(0.5)?;
    let weights = spec.weights()?;
    let waves = plane_waves(&spec.k_values, x_values);
    let mut on = alloc::vec![Complex64::new(0.0, 0.0); spec.k_values.len()];
    let mut off = on.clone();
    for (i, &k) in spec.k_values.iter().enumerate() {
        let a = spec.amplitudes[i] * weights[i];
        if a == Complex64::new(0.0, 0.0) {
            continue;
        }
        let parts = canonical_decomposition_half(dispersion_w(k, half, scales).re, t)?;
        on[i] = a * parts.onshell;
        off[i] = a * parts.offshell;
    }
    let mut on_values = Vec::with_capacity(x_values.len());
    let mut off_values = Vec::with_capacity(x_values.len());
    synthesize(&on, &waves, x_values.len(), &mut on_values);
    synthesize(&off, &waves, x_values.len(), &mut off_values);
    Ok((
        SpaceTimeField::new(alloc::vec![t], x_values.to_vec(), on_values)?,
        SpaceTimeField::new(alloc::vec![t], x_values.to_vec(), off_values)?,
    ))
}
