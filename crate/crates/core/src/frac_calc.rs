//! Spectral fractional derivative.
//!
//! A function on the real line is carried by the two boundary values of its
//! complex Fourier transform,
//!
//! ```text
//! upper(k) =  ∫₀^∞ f(x) e^{ikx} dx        (analytic for Im k > 0)
//! lower(k) = −∫_{−∞}^0 f(x) e^{ikx} dx    (analytic for Im k < 0)
//! ```
//!
//! so that `upper − lower` is the ordinary transform and
//! `f(x) = (1/2π) ∫ (upper − lower) e^{−ikx} dk`. The derivative of order `λ`
//! multiplies both by `(−ik)^λ = |k|^λ e^{−iπλ sgn(k)/2}`, whose branch cut
//! lies on the negative imaginary axis and never meets the real line.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::grid::trapezoid_weights;

/// Edge-to-peak ratio above which samples are said not to decay.
pub const EDGE_DECAY_LIMIT: f64 = 1e-10;

/// Relative size below which the `k = 0` amplitude counts as vanishing.
pub const ORIGIN_LIMIT: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct SignedSpectrum {
    k_values: Vec<f64>,
    upper: Vec<Complex64>,
    lower: Vec<Complex64>,
}

impl SignedSpectrum {
    pub fn new(k_values: Vec<f64>, upper: Vec<Complex64>, lower: Vec<Complex64>) -> Result<Self> {
        if upper.len() != k_values.len() || lower.len() != k_values.len() {
            return Err(Error::InvalidArgument("spectrum arrays must match the k-grid"));
        }
        trapezoid_weights(&k_values)?;
        Ok(SignedSpectrum { k_values, upper, lower })
    }

    pub fn k_values(&self) -> &[f64] {
        &self.k_values
    }

    pub fn upper(&self) -> &[Complex64] {
        &self.upper
    }

    pub fn lower(&self) -> &[Complex64] {
        &self.lower
    }

    /// `upper − lower`, the ordinary Fourier transform.
    pub fn jump(&self) -> Vec<Complex64> {
        self.upper.iter().zip(&self.lower).map(|(u, l)| u - l).collect()
    }

    /// Multiplies both boundary values by `f(k)`.
    pub fn map(&self, f: impl Fn(f64) -> Complex64) -> Self {
        let mut out = self.clone();
        for (i, &k) in self.k_values.iter().enumerate() {
            let m = f(k);
            out.upper[i] *= m;
            out.lower[i] *= m;
        }
        out
    }
}

/// Trapezoid transform of `samples` on the uniform grid `x_values`, split at
/// `x = 0` (a sample exactly at the origin is shared half and half).
pub fn forward_transform(samples: &[Complex64], x_values: &[f64], k_values: &[f64]) -> Result<SignedSpectrum> {
    if samples.len() != x_values.len() || samples.len() < 2 {
        return Err(Error::InvalidArgument("samples must match an x-grid of at least two points"));
    }
    let peak = samples.iter().fold(0.0, |m: f64, v| m.max(v.norm()));
    let edge = samples[0].norm().max(samples[samples.len() - 1].norm());
    if peak > 0.0 && edge > EDGE_DECAY_LIMIT * peak {
        return Err(Error::EdgeDecayViolation(edge / peak));
    }
    let w = trapezoid_weights(x_values)?;
    let mut upper = Vec::with_capacity(k_values.len());
    let mut lower = Vec::with_capacity(k_values.len());
    for &k in k_values {
        let (mut u, mut l) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
        for ((&x, &f), &wj) in x_values.iter().zip(samples).zip(&w) {
            let term = f * Complex64::from_polar(wj, k * x);
            if x > 0.0 {
                u += term;
            } else if x < 0.0 {
                l -= term;
            } else {
                u += term * 0.5;
                l -= term * 0.5;
            }
        }
        upper.push(u);
        lower.push(l);
    }
    SignedSpectrum::new(k_values.to_vec(), upper, lower)
}

/// `(−ik)^λ` for real `k ≠ 0`.
pub fn minus_ik_power(k: f64, lambda: Complex64) -> Complex64 {
    let ln = Complex64::new(k.abs().ln(), -PI / 2.0 * k.signum());
    (lambda * ln).exp()
}

/// Derivative of order `λ` with the entire-function term set to zero.
///
/// `λ = 0` is the identity. For `Re λ > 0` the `k = 0` sample is sent to zero.
/// For any other `λ` the transform must vanish at `k = 0` (relative to its
/// peak) when the grid contains that point, and both `k = 0` amplitudes are
/// then zeroed. A sample within `1e-12 · max |k|` of the origin counts as
/// `k = 0`.
pub fn frac_deriv(spectrum: &SignedSpectrum, lambda: Complex64) -> Result<SignedSpectrum> {
    if lambda == Complex64::new(0.0, 0.0) {
        return Ok(spectrum.clone());
    }
    let scale = spectrum.k_values.iter().fold(0.0, |m: f64, k| m.max(k.abs()));
    let at_origin = |k: f64| k.abs() <= 1e-12 * scale;
    if lambda.re <= 0.0 {
        let jump = spectrum.jump();
        let peak = jump.iter().fold(0.0, |m: f64, v| m.max(v.norm()));
        for (&k, j) in spectrum.k_values.iter().zip(&jump) {
            if at_origin(k) && j.norm() > ORIGIN_LIMIT * peak {
                return Err(Error::OriginSingularity);
            }
        }
    }
    Ok(spectrum.map(|k| if at_origin(k) { Complex64::new(0.0, 0.0) } else { minus_ik_power(k, lambda) }))
}

/// `f(x) = (1/2π) Σ_k ω_k (upper − lower) e^{−ikx}`.
pub fn inverse_transform(spectrum: &SignedSpectrum, x_values: &[f64]) -> Result<Vec<Complex64>> {
    let w = trapezoid_weights(&spectrum.k_values)?;
    let jump = spectrum.jump();
    let coeffs: Vec<Complex64> = jump.iter().zip(&w).map(|(j, w)| j * (w / (2.0 * PI))).collect();
    Ok(x_values
        .iter()
        .map(|&x| spectrum.k_values.iter().zip(&coeffs).map(|(&k, c)| c * Complex64::from_polar(1.0, -k * x)).sum())
        .collect())
}

/// Polynomial `constant + slope · x` left undetermined by integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ambiguity {
    pub constant: Complex64,
    pub slope: Complex64,
}

impl Ambiguity {
    pub fn eval(&self, x: f64) -> Complex64 {
        self.constant + self.slope * x
    }
}

/// The term an entire function `a(k) = Σ a_j k^j` adds to a primitive of
/// order `λ ∈ {−1, −2}`:
///
/// ```text
/// −∮ a(k) (−ik)^λ e^{−ikx} dk = −2πi (−i)^λ Res_{k=0} [a(k) k^λ e^{−ikx}]
/// ```
///
/// (counter-clockwise around the origin). This is `2π a₀` for `λ = −1` and
/// `2πi a₁ + 2π a₀ x` for `λ = −2`. Missing coefficients count as zero.
pub fn primitive_ambiguity(lambda: i32, entire_coefficients: &[Complex64]) -> Result<Ambiguity> {
    let a = |j: usize| entire_coefficients.get(j).copied().unwrap_or_default();
    let two_pi = 2.0 * PI;
    match lambda {
        -1 => Ok(Ambiguity { constant: a(0) * two_pi, slope: Complex64::new(0.0, 0.0) }),
        -2 => Ok(Ambiguity { constant: a(1) * Complex64::new(0.0, two_pi), slope: a(0) * two_pi }),
        other => Err(Error::UnsupportedLambda(other)),
    }
}
