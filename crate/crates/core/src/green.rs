//! Retarded, advanced and Wheeler Green functions as momentum-space multipliers.
//!
//! ```text
//! ret(t, k) = (1/2π) e^{−iπν/2} t^{ν−1} E_{ν,ν}(e^{−iπν/2} t^ν β²k²),    t > 0
//! adv(t, k) = (1/2π) e^{+iπν/2} |t|^{ν−1} E_{ν,ν}(e^{+iπν/2} |t|^ν β²k²), t < 0
//! ```
//!
//! and `wheeler = (ret + adv) / 2`. The advanced multiplier is the mirror of the
//! retarded one under `t → −t` with `i → −i`; at `ν = 1` both reduce to
//! `∓(i/2π) e^{−iβ²k²t}`, and at `ν = 2` to the familiar `−sin(√w|t|)/(2π√w)`.
//!
//! Position-space values are only offered at `ν = 1` through
//! [`green_closed_form_nu1`]. For other orders the Green function is paired with
//! a sampled spectrum by [`apply_green`].

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::free_particle::MomentumSpectrum;
use crate::grid::{trapezoid_weights, SpaceTimeField};
use crate::kernels::kernel_ml;
use crate::mittag_leffler::{MlConfig, MlOrder};
use crate::scales::{beta_sq, dispersion_w, DerivativeOrder, Scales};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GreenKind {
    Retarded,
    Advanced,
    Wheeler,
}

/// `(1/2π) e^{∓iπν/2} |t|^{ν−1} E_{ν,ν}(e^{∓iπν/2} |t|^ν w)`, upper sign for `sign = 1`.
fn one_sided(nu: Complex64, w: Complex64, abs_t: f64, sign: f64, cfg: &MlConfig) -> Result<Complex64> {
    let rot = (Complex64::new(0.0, -sign * PI / 2.0) * nu).exp();
    let lt = abs_t.ln();
    let z = rot * ((nu * lt).exp() * w);
    let e = kernel_ml(MlOrder::new(nu, nu)?, z, cfg)?;
    Ok(rot * ((nu - 1.0) * lt).exp() * e / (2.0 * PI))
}

pub fn green_kernel_k(kind: GreenKind, nu: DerivativeOrder, t: f64, k: f64, s: &Scales) -> Result<Complex64> {
    green_kernel_k_with(kind, nu, t, k, s, &MlConfig::default())
}

/// The multiplier at `(t, k)`.
///
/// At `t = 0` the kernels carry a jump or an integrable singularity when
/// `Re ν ≤ 1`, reported as [`Error::SingularAtZero`]; for `Re ν > 1` they
/// vanish there.
pub fn green_kernel_k_with(
    kind: GreenKind,
    nu: DerivativeOrder,
    t: f64,
    k: f64,
    s: &Scales,
    cfg: &MlConfig,
) -> Result<Complex64> {
    if !t.is_finite() {
        return Err(Error::InvalidArgument("time must be finite"));
    }
    let v = nu.value();
    if t == 0.0 {
        return if v.re > 1.0 { Ok(Complex64::new(0.0, 0.0)) } else { Err(Error::SingularAtZero(v - 1.0)) };
    }
    let w = dispersion_w(k, nu, s);
    let zero = Complex64::new(0.0, 0.0);
    let ret = || if t > 0.0 { one_sided(v, w, t, 1.0, cfg) } else { Ok(zero) };
    let adv = || if t < 0.0 { one_sided(v, w, -t, -1.0, cfg) } else { Ok(zero) };
    match kind {
        GreenKind::Retarded => ret(),
        GreenKind::Advanced => adv(),
        GreenKind::Wheeler => Ok((ret()? + adv()?) * 0.5),
    }
}

/// `field(t, x) = Σ_k ω_k G(t, k) a(k) e^{−ikx}` with trapezoid weights `ω_k`.
///
/// This is `∫ G(t, x − y) ψ(y) dy` for `ψ(y) = (1/2π) ∫ a(k) e^{−iky} dk`.
pub fn apply_green(
    kind: GreenKind,
    nu: DerivativeOrder,
    spec: &MomentumSpectrum,
    t_values: &[f64],
    x_values: &[f64],
    s: &Scales,
    cfg: &MlConfig,
) -> Result<SpaceTimeField> {
    let k = spec.k_values();
    let weights = trapezoid_weights(k)?;
    let mut waves = Vec::with_capacity(k.len() * x_values.len());
    for &x in x_values {
        waves.extend(k.iter().map(|&k| Complex64::from_polar(1.0, -k * x)));
    }
    let mut values = Vec::with_capacity(t_values.len() * x_values.len());
    let mut coeffs = alloc::vec![Complex64::new(0.0, 0.0); k.len()];
    for &t in t_values {
        for (i, c) in coeffs.iter_mut().enumerate() {
            let a = spec.amplitudes()[i];
            *c = if a == Complex64::new(0.0, 0.0) {
                a
            } else {
                a * weights[i] * green_kernel_k_with(kind, nu, t, k[i], s, cfg)?
            };
        }
        for ix in 0..x_values.len() {
            let row = &waves[ix * k.len()..(ix + 1) * k.len()];
            values.push(row.iter().zip(&coeffs).map(|(e, c)| e * c).sum());
        }
    }
    SpaceTimeField::new(t_values.to_vec(), x_values.to_vec(), values)
}

/// Position-space Green functions at `ν = 1`:
///
/// ```text
/// ret(dt, dx) = −i H(dt)  (1/(4πiβ²dt))^{1/2} e^{i dx²/(4β²dt)}
/// adv(dt, dx) = +i H(−dt) (1/(4πiβ²dt))^{1/2} e^{i dx²/(4β²dt)}
/// ```
///
/// with the principal square root, and Wheeler the average of the two.
pub fn green_closed_form_nu1(kind: GreenKind, dt: f64, dx: f64, s: &Scales) -> Result<Complex64> {
    if dt == 0.0 {
        return Err(Error::ZeroTimeSeparation);
    }
    let b2 = beta_sq(DerivativeOrder::new(1.0)?, s).re;
    let i = Complex64::new(0.0, 1.0);
    let spread = (Complex64::new(1.0, 0.0) / (i * (4.0 * PI * b2 * dt))).sqrt() * Complex64::from_polar(1.0, dx * dx / (4.0 * b2 * dt));
    let zero = Complex64::new(0.0, 0.0);
    let ret = if dt > 0.0 { -i * spread } else { zero };
    let adv = if dt < 0.0 { i * spread } else { zero };
    Ok(match kind {
        GreenKind::Retarded => ret,
        GreenKind::Advanced => adv,
        GreenKind::Wheeler => (ret + adv) * 0.5,
    })
}
