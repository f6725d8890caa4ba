use core::cell::Cell;

use num_complex::Complex64;
use num_traits::Float;

use super::{ml_with, MlConfig, MlOrder};
use crate::error::{Error, Result};
use crate::quad::{integrate, QuadConfig};

const TAIL_TOL: f64 = 1e-13;

/// Relative residual of the Laplace pair
///
/// ```text
/// ∫₀^∞ e^{−μx} x^{β−1} E_{α,β}(z x^α) dx = μ^{α−β} / (μ^α − z)
/// ```
///
/// The left side is integrated adaptively on `[0, X_max]` with at most
/// `quad_points` panels. `X_max` is grown until the integrand envelope
/// `|f(X)| / c · (1 + |Re β − 1| / (cX))` (with `c` the net exponential decay
/// rate) drops below `1e-13 · |RHS|`. When `Re β < 1` the substitution
/// `x = u^{1/Re β}` removes the endpoint singularity.
pub fn laplace_identity_residual(order: MlOrder, mu: Complex64, z: Complex64, quad_points: usize) -> Result<f64> {
    if !(mu.re > 0.0) {
        return Err(Error::InvalidArgument("Re(mu) must be positive"));
    }
    if quad_points == 0 {
        return Err(Error::InvalidArgument("quad_points must be at least 1"));
    }
    let (alpha, beta) = (order.alpha(), order.beta());
    let rhs = (mu.ln() * (alpha - beta)).exp() / ((mu.ln() * alpha).exp() - z);
    let rhs_abs = rhs.norm();

    // the dominant exponential of E_{α,β}(z x^α) grows like e^{x Re z^{1/α}}
    let growth = if z == Complex64::new(0.0, 0.0) {
        0.0
    } else {
        let zeta = (z.ln() / alpha).exp();
        let in_sector = z.arg().abs() < core::f64::consts::PI * alpha.re;
        if in_sector {
            zeta.re.max(0.0)
        } else {
            0.0
        }
    };
    let decay = mu.re - growth;
    if !(decay > 0.0) {
        return Err(Error::QuadratureFailure { estimate: f64::INFINITY, tolerance: TAIL_TOL });
    }

    let cfg = MlConfig::default();
    let failure: Cell<Option<Error>> = Cell::new(None);
    let integrand = |x: f64| -> Complex64 {
        if x == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let lx = x.ln();
        let arg = z * (alpha * lx).exp();
        match ml_with(order, arg, &cfg) {
            Ok(r) => ((beta - 1.0) * lx - mu * x).exp() * r.value,
            Err(e) => {
                failure.set(Some(e));
                Complex64::new(0.0, 0.0)
            }
        }
    };

    let b = beta.re - 1.0;
    let envelope = |x: f64| integrand(x).norm() / decay * (1.0 + b.abs() / (decay * x));
    let mut x_max = (1.0 + (1.0 / TAIL_TOL).ln() + b.max(0.0) * (1.0 + 1.0 / decay).ln()) / decay;
    let mut tail = envelope(x_max);
    let mut grown = 0;
    while tail > TAIL_TOL * rhs_abs {
        grown += 1;
        if grown > 40 {
            return Err(Error::QuadratureFailure { estimate: tail, tolerance: TAIL_TOL * rhs_abs });
        }
        x_max *= 1.5;
        tail = envelope(x_max);
    }
    if let Some(e) = failure.take() {
        return Err(e);
    }

    let qcfg = QuadConfig { abs_tol: 1e-12 * rhs_abs, rel_tol: 1e-11, max_panels: quad_points };
    let lhs = if beta.re < 1.0 {
        let p = 1.0 / beta.re;
        integrate(
            |u| {
                if u == 0.0 {
                    return Complex64::new(0.0, 0.0);
                }
                integrand(u.powf(p)) * (p * u.powf(p - 1.0))
            },
            0.0,
            x_max.powf(beta.re),
            qcfg,
        )?
    } else {
        integrate(&integrand, 0.0, x_max, qcfg)?
    };
    if let Some(e) = failure.take() {
        return Err(e);
    }
    Ok((lhs.value - rhs).norm() / rhs_abs)
}
