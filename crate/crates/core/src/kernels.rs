//! Scalar time kernels.
//!
//! * [`causal_kernel`]: `E_ν((−it)^ν w)` with `(−it)^ν = t^ν e^{−iπν/2}`, the
//!   time factor of a mode started at `t = 0`.
//! * [`general_kernel`]: `e^{−iπ(ν−m)/2} (t+i0)^{ν−m−1} E_{ν,ν−m}((t+i0)^ν e^{−iπν/2} w)`,
//!   the factor carried by the `k₀^m` coefficient of a general spectral weight.
//! * [`branch_decomposition_half`]: at `ν = 1/2` the causal kernel splits
//!   into a pole term `∝ e^{−iw²t}` and a cut integral along `k₀ > 0`.
//!
//! For `z = e^{−iπ/4} √t w` one has `E_{1/2}(z) = e^{z²} erfc(−z)` and
//! `erfc(−z) = 2 − erfc(z)`, so
//!
//! ```text
//! E_{1/2}(z) = 2 e^{−iw²t} − e^{z²} erfc(z)
//!            = 2 e^{−iw²t} − (w/π) ∫₀^∞ e^{+ik₀t} / (√k₀ (k₀ + w²)) dk₀.
//! ```
//!
//! The canonical split therefore has residue `2` and cut weight
//! `−w / (π √k₀)`. The cut integral is evaluated after rotating the path onto
//! the positive imaginary `k₀` axis, where `e^{+ik₀t}` decays like `e^{−vt}`.

use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::mittag_leffler::{ml_with, MlConfig, MlOrder};
use crate::quad::{integrate, QuadConfig};
use crate::scales::DerivativeOrder;

fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

/// Mittag-Leffler value for a kernel.
///
/// Rounding `z` alone perturbs `E_{α,β}(z)` by a relative `ε |z^{1/α}| / |α|`
/// near the exponential regime. A certified result whose bound exceeds the
/// requested tolerance is still accepted when the bound lies within eight times
/// that floor; anything worse stays [`Error::NonConvergent`].
pub fn kernel_ml(order: MlOrder, z: Complex64, cfg: &MlConfig) -> Result<Complex64> {
    match ml_with(order, z, cfg) {
        Ok(r) => Ok(r.value),
        Err(Error::NonConvergent { best, bound }) if best.re.is_finite() && best.im.is_finite() => {
            let alpha = order.alpha();
            let zeta = z.norm().powf(1.0 / alpha.re);
            let floor = 8.0 * f64::EPSILON * (1.0 + zeta / alpha.norm()) * best.norm().max(1.0);
            if bound <= floor {
                Ok(best)
            } else {
                Err(Error::NonConvergent { best, bound })
            }
        }
        Err(e) => Err(e),
    }
}

/// `(t + i0)^μ`: `t^μ` for `t > 0`, `|t|^μ e^{iπμ}` for `t < 0`.
///
/// At `t = 0` the value is `1` for `μ = 0`, `0` for `Re μ > 0` and
/// [`Error::SingularAtZero`] otherwise (including `Re μ = 0`, `μ ≠ 0`, where
/// the power oscillates without limit).
pub fn i0_power(t: f64, mu: Complex64) -> Result<Complex64> {
    if t == 0.0 {
        return if mu == zero() {
            Ok(Complex64::new(1.0, 0.0))
        } else if mu.re > 0.0 {
            Ok(zero())
        } else {
            Err(Error::SingularAtZero(mu))
        };
    }
    let ln = Complex64::new(t.abs().ln(), if t < 0.0 { PI } else { 0.0 });
    Ok((mu * ln).exp())
}

/// `e^{−iπν/2}`.
fn quarter_turns(nu: Complex64) -> Complex64 {
    (Complex64::new(0.0, -PI / 2.0) * nu).exp()
}

/// `E_ν((−it)^ν w)` for `t ≥ 0`; exactly `1` at `t = 0`.
pub fn causal_kernel(nu: DerivativeOrder, w: Complex64, t: f64) -> Result<Complex64> {
    causal_kernel_with(nu, w, t, &MlConfig::default())
}

pub fn causal_kernel_with(nu: DerivativeOrder, w: Complex64, t: f64, cfg: &MlConfig) -> Result<Complex64> {
    if t < 0.0 || t.is_nan() {
        return Err(Error::NegativeTime(t));
    }
    if t == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let nu = nu.value();
    let z = i0_power(t, nu)? * quarter_turns(nu) * w;
    kernel_ml(MlOrder::new(nu, 1.0)?, z, cfg)
}

/// `e^{−iπ(ν−m)/2} (t+i0)^{ν−m−1} E_{ν,ν−m}((t+i0)^ν e^{−iπν/2} w)`.
pub fn general_kernel(nu: DerivativeOrder, m: u32, w: Complex64, t: f64) -> Result<Complex64> {
    general_kernel_with(nu, m, w, t, &MlConfig::default())
}

pub fn general_kernel_with(nu: DerivativeOrder, m: u32, w: Complex64, t: f64, cfg: &MlConfig) -> Result<Complex64> {
    let nu = nu.value();
    let beta = nu - f64::from(m);
    let prefactor = i0_power(t, beta - 1.0)?;
    if prefactor == zero() {
        return Ok(zero());
    }
    let z = if t == 0.0 { zero() } else { i0_power(t, nu)? * quarter_turns(nu) * w };
    let e = kernel_ml(MlOrder::new(nu, beta)?, z, cfg)?;
    Ok(quarter_turns(beta) * prefactor * e)
}

/// On-shell and off-shell parts of the `ν = 1/2` kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfShellParts {
    /// `residue · e^{−iw²t}`.
    pub onshell: Complex64,
    /// `∫₀^∞ weight(k₀) / (k₀ + w²) e^{+ik₀t} dk₀`.
    pub offshell: Complex64,
    /// The pure phase `e^{−iw²t}`.
    pub phase: Complex64,
}

impl HalfShellParts {
    pub fn total(&self) -> Complex64 {
        self.onshell + self.offshell
    }
}

/// Residue of the canonical split, `1/ν = 2`.
pub const CANONICAL_RESIDUE: f64 = 2.0;

/// Canonical cut weight `−w / (π √k₀)` for the dispersion value `w`.
///
/// Accepts complex `k₀` so that the integration path can be rotated.
pub fn canonical_weight(w: f64) -> impl Fn(Complex64) -> Complex64 + Copy {
    move |k0: Complex64| -Complex64::new(w / PI, 0.0) / k0.sqrt()
}

/// Splits the `ν = 1/2` evolution of a mode with dispersion `w > 0` at `t > 0`.
///
/// `weight` must be analytic in the open first quadrant of `k₀`, at most
/// `|k₀|^{−1/2}` singular at the origin and of sub-exponential growth; the
/// cut integral is then equal to the same integral along `k₀ = iv`, `v > 0`,
/// and is computed there with `v = σ²/t` by adaptive quadrature.
pub fn branch_decomposition_half<F>(w: f64, residue: Complex64, weight: F, t: f64) -> Result<HalfShellParts>
where
    F: Fn(Complex64) -> Complex64,
{
    if !(w > 0.0 && w.is_finite()) {
        return Err(Error::InvalidArgument("branch decomposition needs finite w > 0"));
    }
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::InvalidArgument("branch decomposition needs finite t > 0"));
    }
    let w2 = w * w;
    let phase = Complex64::new(0.0, -w2 * t).exp();
    let i = Complex64::new(0.0, 1.0);
    // k₀ = iσ²/t, dk₀ = 2iσ/t dσ, e^{ik₀t} = e^{−σ²}; e^{−σ²} < 1e-27 beyond σ = 8
    let integrand = |sigma: f64| {
        let s2 = sigma * sigma;
        let k0 = Complex64::new(0.0, s2 / t);
        weight(k0) / (k0 + w2) * i * (2.0 * sigma / t * (-s2).exp())
    };
    let cfg = QuadConfig { abs_tol: 1e-14, rel_tol: 1e-13, max_panels: 2000 };
    let offshell = integrate(integrand, 0.0, 8.0, cfg)?.value;
    Ok(HalfShellParts { onshell: residue * phase, offshell, phase })
}

/// [`branch_decomposition_half`] with the canonical residue and weight;
/// `onshell + offshell = causal_kernel(1/2, w, t)`.
///
/// `w = 0` returns the limit `w → 0⁺`: on-shell `2`, off-shell `−1`.
pub fn canonical_decomposition_half(w: f64, t: f64) -> Result<HalfShellParts> {
    if w == 0.0 && t > 0.0 && t.is_finite() {
        let one = Complex64::new(1.0, 0.0);
        return Ok(HalfShellParts { onshell: one * CANONICAL_RESIDUE, offshell: -one, phase: one });
    }
    branch_decomposition_half(w, Complex64::new(CANONICAL_RESIDUE, 0.0), canonical_weight(w), t)
}
