use num_complex::Complex64;
use num_traits::Float;

use super::MlOrder;
use crate::gamma::{is_pole, ln_gamma};

#[derive(Debug)]
pub(super) struct SeriesSum {
    pub value: Complex64,
    pub bound: f64,
}

/// Whether double-precision summation can plausibly meet `tol`.
///
/// The largest term is about `exp|ζ|` with `ζ = z^{1/α}` while the sum is
/// about `max(1, exp Re ζ)`, so the cancellation loss is `|ζ| − max(0, Re ζ)`
/// in natural-log units.
pub(super) fn promising(alpha: f64, z: Complex64, tol: f64) -> bool {
    let zeta = z.powf(1.0 / alpha);
    let size = zeta.norm();
    size < 700.0 && size - zeta.re.max(0.0) < (tol / f64::EPSILON).ln()
}

/// Truncated Taylor sum.
///
/// Terms are formed as `exp(n ln z − ln Γ(αn + β))`. The tail bound
/// `|t_n| ρ / (1 − ρ)` uses the term ratio `ρ`, which is decreasing once
/// `Re(αn + β) ≥ 2` (log-convexity of Γ); the rounding bound charges every
/// term for the error in its exponent and every partial sum for one addition.
pub(super) fn sum(order: MlOrder, z: Complex64, max_terms: usize, tol: f64) -> SeriesSum {
    let (alpha, beta) = (order.alpha(), order.beta());
    if z == Complex64::new(0.0, 0.0) {
        return SeriesSum { value: crate::gamma::rgamma(beta), bound: 0.0 };
    }
    let ln_z = z.ln();
    let ln_z_abs = ln_z.norm();
    let eps = f64::EPSILON;

    let mut total = Complex64::new(0.0, 0.0);
    let mut rounding = 0.0;
    let mut prev_abs = 0.0;
    let mut tail = f64::INFINITY;

    for n in 0..max_terms {
        let nf = n as f64;
        let g = alpha * nf + beta;
        let (term, exponent_size) = if is_pole(g) {
            (Complex64::new(0.0, 0.0), 0.0)
        } else {
            let lg = ln_gamma(g);
            let e = ln_z * nf - lg;
            (e.exp(), nf * ln_z_abs + lg.norm())
        };
        if !term.re.is_finite() || !term.im.is_finite() {
            return SeriesSum { value: total, bound: f64::INFINITY };
        }
        total += term;
        let term_abs = term.norm();
        rounding += eps * (term_abs * (4.0 + exponent_size) + total.norm());

        if g.re >= 2.0 && prev_abs > 0.0 && term_abs > 0.0 {
            let ratio = term_abs / prev_abs;
            if ratio < 0.9 {
                tail = term_abs * ratio / (1.0 - ratio);
                let scale = total.norm().max(1.0);
                if tail <= 0.01 * tol * scale || tail <= eps * total.norm() {
                    break;
                }
            } else {
                tail = f64::INFINITY;
            }
        } else if g.re >= 2.0 && term_abs == 0.0 && prev_abs == 0.0 {
            // underflow of consecutive terms
            tail = 0.0;
            break;
        }
        prev_abs = term_abs;
    }
    SeriesSum { value: total, bound: tail + rounding }
}
