use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use super::{MlConfig, MlMethod, MlResult};
use crate::error::{Error, Result};
use crate::gamma::rgamma;

/// Exponential part: `Σ_m (1/α) ζ_m^{1−β} e^{ζ_m}` over the branches
/// `ζ_m = |z|^{1/α} e^{i(θ + 2πm)/α}` with `|θ + 2πm| < απ`, and the summed
/// size of the branches inside the Stokes wedge.
fn exponential_part(alpha: f64, beta: Complex64, z: Complex64, wedge: f64) -> (Complex64, f64, f64) {
    let theta = z.arg();
    let r = z.norm();
    let ln_r = r.ln();
    let size = r.powf(1.0 / alpha);
    let edge = alpha * PI;
    let m_lo = ((-edge - wedge - theta) / (2.0 * PI)).ceil() as i64;
    let m_hi = ((edge + wedge - theta) / (2.0 * PI)).floor() as i64;

    let mut value = Complex64::new(0.0, 0.0);
    let mut ambiguous = 0.0;
    let mut rounding = 0.0;
    for m in m_lo..=m_hi {
        let phi = theta + 2.0 * PI * m as f64;
        let ln_zeta = Complex64::new(ln_r, phi) / alpha;
        let zeta = Complex64::from_polar(size, phi / alpha);
        let term = ((Complex64::new(1.0, 0.0) - beta) * ln_zeta + zeta).exp() / alpha;
        if phi.abs() < edge {
            value += term;
            rounding += f64::EPSILON * term.norm() * (2.0 + zeta.norm() * (3.0 + (phi / alpha).abs()));
        }
        if (phi.abs() - edge).abs() <= wedge {
            ambiguous += term.norm();
        }
    }
    (value, ambiguous, rounding)
}

/// `−Σ_{k=1}^{n} z^{−k} / Γ(β − αk)` and an estimate of the omitted tail:
/// twice the next two terms, which covers a slowly decaying run of terms.
fn algebraic_part(alpha: f64, beta: Complex64, z: Complex64, n: usize) -> (Complex64, f64, f64) {
    let ln_z = z.ln();
    let term = |k: usize| (-(ln_z * k as f64)).exp() * rgamma(beta - alpha * k as f64);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut rounding = 0.0;
    for k in 1..=n {
        let t = term(k);
        sum -= t;
        rounding += f64::EPSILON * t.norm() * (4.0 + k as f64 * ln_z.norm());
    }
    let omitted = 2.0 * (term(n + 1).norm() + term(n + 2).norm());
    (sum, omitted, rounding)
}

fn assemble(alpha: f64, beta: Complex64, z: Complex64, n: usize, cfg: &MlConfig) -> (Complex64, f64, f64) {
    let (exp_part, ambiguous, r1) = exponential_part(alpha, beta, z, cfg.stokes_wedge);
    let (alg_part, omitted, r2) = algebraic_part(alpha, beta, z, n);
    let value = exp_part + alg_part;
    let bound = omitted + r1 + r2 + 4.0 * f64::EPSILON * value.norm();
    (value, bound, ambiguous)
}

pub(super) fn fixed(alpha: f64, beta: Complex64, z: Complex64, n: usize, cfg: &MlConfig) -> Result<MlResult> {
    let (value, bound, ambiguous) = assemble(alpha, beta, z, n, cfg);
    if ambiguous > cfg.target(value) {
        return Err(Error::SectorUnsupported { arg: z.arg() });
    }
    Ok(MlResult { value, abs_error_bound: bound + ambiguous, method: MlMethod::Asymptotic })
}

/// Grows the number of algebraic terms until the bound meets the tolerance
/// or the omitted terms stop shrinking.
pub(super) fn adaptive(alpha: f64, beta: Complex64, z: Complex64, cfg: &MlConfig) -> Result<MlResult> {
    let mut last = f64::INFINITY;
    for n in 0..=cfg.max_asymptotic_terms {
        let (value, bound, ambiguous) = assemble(alpha, beta, z, n, cfg);
        let target = cfg.target(value);
        if ambiguous > target {
            return Err(Error::SectorUnsupported { arg: z.arg() });
        }
        let total = bound + ambiguous;
        if total <= target {
            return Ok(MlResult { value, abs_error_bound: total, method: MlMethod::Asymptotic });
        }
        if total > last {
            return Err(Error::NonConvergent { best: value, bound: total });
        }
        last = total;
    }
    Err(Error::NonConvergent { best: Complex64::new(f64::NAN, f64::NAN), bound: last })
}
