//! Laplace-transform inversion on optimal parabolic contours.
//!
//! `E_{α,β}(z)` is the inverse Laplace transform of `s^{α−β} / (s^α − z)`
//! evaluated at `t = 1`. The Bromwich line is replaced by a parabola
//! `s(u) = μ (1 + iu)²` placed between two consecutive singularities (the
//! branch point at the origin and the poles `s* = z^{1/α} e^{2πik/α}`), the
//! integral is discretised by the trapezoidal rule with step `h` and `2N + 1`
//! nodes, and the residues `(1/α) s*^{1−β} e^{s*}` of the poles to the right of
//! the parabola are added back. `(μ, h, N)` follow the error balance of
//! Garrappa (SIAM J. Numer. Anal. 53, 2015): truncation, discretisation and
//! round-off are equalised at the requested accuracy, and the region needing
//! the fewest nodes is used.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use super::{MlMethod, MlResult};

/// ln of the unit roundoff used in the parameter selection.
const LOG_EPS_MACH: f64 = -36.043_653_389_117_15;
const MAX_NODES: f64 = 2000.0;

struct Params {
    mu: f64,
    h: f64,
    n: f64,
}

const INFEASIBLE: Params = Params { mu: 0.0, h: 0.0, n: f64::INFINITY };

/// Parabola confined between two singularities with
/// `φ(s) = (Re s + |s|) / 2` values `phi_j < phi_j1`.
fn bounded_region(t: f64, phi_j: f64, phi_j1: f64, p: f64, q: f64, mut log_eps: f64) -> Params {
    let fac = 1.01;
    let f_max = (log_eps - LOG_EPS_MACH).exp();
    let sq_phi_j = phi_j.sqrt();
    let threshold = 2.0 * ((log_eps - LOG_EPS_MACH) / t).sqrt();
    let sq_phi_j1 = phi_j1.sqrt().min(threshold - sq_phi_j);

    let (sq_bar_j, sq_bar_j1, f_bar);
    if p < 1e-14 && q < 1e-14 {
        sq_bar_j = sq_phi_j;
        sq_bar_j1 = sq_phi_j1;
        f_bar = 1.0;
    } else if p < 1e-14 {
        sq_bar_j = sq_phi_j;
        let f_min = if sq_phi_j > 0.0 { fac * (sq_phi_j / (sq_phi_j1 - sq_phi_j)).powf(q) } else { fac };
        if f_min >= f_max {
            return INFEASIBLE;
        }
        f_bar = f_min + f_min / f_max * (f_max - f_min);
        let fq = f_bar.powf(-1.0 / q);
        sq_bar_j1 = (2.0 * sq_phi_j1 - fq * sq_phi_j) / (2.0 + fq);
    } else if q < 1e-14 {
        sq_bar_j1 = sq_phi_j1;
        let f_min = fac * (sq_phi_j1 / (sq_phi_j1 - sq_phi_j)).powf(p);
        if f_min >= f_max {
            return INFEASIBLE;
        }
        f_bar = f_min + f_min / f_max * (f_max - f_min);
        let fp = f_bar.powf(-1.0 / p);
        sq_bar_j = (2.0 * sq_phi_j + fp * sq_phi_j1) / (2.0 - fp);
    } else {
        let f_min = fac * (sq_phi_j + sq_phi_j1) / (sq_phi_j1 - sq_phi_j).powf(p.max(q));
        if f_min >= f_max {
            return INFEASIBLE;
        }
        let f_min = f_min.max(1.5);
        f_bar = f_min + f_min / f_max * (f_max - f_min);
        let fp = f_bar.powf(-1.0 / p);
        let fq = f_bar.powf(-1.0 / q);
        let w = -phi_j1 * t / log_eps;
        let den = 2.0 + w - (1.0 + w) * fp + fq;
        sq_bar_j = ((2.0 + w + fq) * sq_phi_j + fp * sq_phi_j1) / den;
        sq_bar_j1 = (-(1.0 + w) * fq * sq_phi_j + (2.0 + w - (1.0 + w) * fp) * sq_phi_j1) / den;
    }

    log_eps -= f_bar.ln();
    let w = -sq_bar_j1 * sq_bar_j1 * t / log_eps;
    let mu = (((1.0 + w) * sq_bar_j + sq_bar_j1) / (2.0 + w)).powi(2);
    let h = -2.0 * PI / log_eps * (sq_bar_j1 - sq_bar_j) / ((1.0 + w) * sq_bar_j + sq_bar_j1);
    let n = ((1.0 - log_eps / t / mu).sqrt() / h).ceil();
    if !(mu > 0.0) || !(h > 0.0) || !n.is_finite() {
        return INFEASIBLE;
    }
    Params { mu, h, n }
}

/// Parabola to the right of the last singularity.
fn unbounded_region(t: f64, phi_j: f64, p: f64, log_eps: f64) -> Params {
    let sq_phi_j = phi_j.sqrt();
    let mut phi_bar = if phi_j > 0.0 { phi_j * 1.01 } else { 0.01 };
    let mut sq_phi_bar = phi_bar.sqrt();
    let (f_min, f_max, f_tar) = (1.0, 10.0, 5.0);

    let (mut n, mut a, mut sq_mu);
    let mut guard = 0;
    loop {
        let phi_t = phi_bar * t;
        let log_eps_phi_t = log_eps / phi_t;
        n = (phi_t / PI * (1.0 - 3.0 * log_eps_phi_t / 2.0 + (1.0 - 2.0 * log_eps_phi_t).sqrt())).ceil();
        a = PI * n / phi_t;
        sq_mu = sq_phi_bar * (4.0 - a).abs() / (7.0 - (1.0 + 12.0 * a).sqrt()).abs();
        let f_bar = ((sq_phi_bar - sq_phi_j) / sq_mu).powf(-p);
        if p < 1e-14 || (f_min < f_bar && f_bar < f_max) {
            break;
        }
        guard += 1;
        if guard > 100 {
            return INFEASIBLE;
        }
        sq_phi_bar = f_tar.powf(-1.0 / p) * sq_mu + sq_phi_j;
        phi_bar = sq_phi_bar * sq_phi_bar;
    }
    let mut mu = sq_mu * sq_mu;
    let mut h = (-3.0 * a - 2.0 + 2.0 * (1.0 + 12.0 * a).sqrt()) / (4.0 - a) / n;

    // keep round-off from e^{μt} under control
    let threshold = (log_eps - LOG_EPS_MACH) / t;
    if mu > threshold {
        let q = if p.abs() < 1e-14 { 0.0 } else { f_tar.powf(-1.0 / p) * mu.sqrt() };
        let phi_bar = (q + phi_j.sqrt()).powi(2);
        if phi_bar < threshold {
            let w = (LOG_EPS_MACH / (LOG_EPS_MACH - log_eps)).sqrt();
            let u = (-phi_bar * t / LOG_EPS_MACH).sqrt();
            mu = threshold;
            n = (w * log_eps / 2.0 / PI / (u * w - 1.0)).ceil();
            h = (LOG_EPS_MACH / (LOG_EPS_MACH - log_eps)).sqrt() / n;
        } else {
            return INFEASIBLE;
        }
    }
    if !(mu > 0.0) || !(h > 0.0) || !n.is_finite() || n < 1.0 {
        return INFEASIBLE;
    }
    Params { mu, h, n }
}

/// `E_{α,β}(z)` for real `α > 0`. `None` when no contour is admissible.
pub(super) fn evaluate(alpha: f64, beta: Complex64, z: Complex64, tol: f64) -> Option<MlResult> {
    // a strong branch point at the origin (β > α + 1) makes every parabola
    // expensive; step β down with E_{α,β}(z) = (E_{α,β−α}(z) − 1/Γ(β−α)) / z
    if beta.re > alpha + 1.0 && z.norm() >= 1.0 {
        let lower = evaluate(alpha, beta - alpha, z, tol)?;
        let head = crate::gamma::rgamma(beta - alpha);
        let value = (lower.value - head) / z;
        let rounding = f64::EPSILON * (lower.value.norm() + head.norm()) / z.norm() + f64::EPSILON * value.norm();
        let bound = lower.abs_error_bound / z.norm() + 4.0 * rounding;
        return Some(MlResult { value, abs_error_bound: bound, method: MlMethod::Quadrature });
    }
    let t = 1.0;
    let target = (tol * 1e-2).clamp(1e-14, 1e-6);
    let mut log_eps = target.ln();

    let theta = z.arg();
    let k_min = (-alpha / 2.0 - theta / (2.0 * PI)).ceil() as i64;
    let k_max = (alpha / 2.0 - theta / (2.0 * PI)).floor() as i64;
    let radius = z.norm().powf(1.0 / alpha);

    let phi = |s: Complex64| (s.re + s.norm()) / 2.0;
    let mut poles: Vec<(Complex64, f64)> = (k_min..=k_max)
        .map(|k| Complex64::from_polar(radius, (theta + 2.0 * PI * k as f64) / alpha))
        .map(|s| (s, phi(s)))
        .filter(|&(_, p)| p > 1e-15)
        .collect();
    poles.sort_by(|a, b| a.1.total_cmp(&b.1));

    // singularities: the origin, then the poles by increasing φ
    let mut sing: Vec<Complex64> = Vec::with_capacity(poles.len() + 1);
    let mut phis: Vec<f64> = Vec::with_capacity(poles.len() + 2);
    sing.push(Complex64::new(0.0, 0.0));
    phis.push(0.0);
    for &(s, p) in &poles {
        sing.push(s);
        phis.push(p);
    }
    let count = sing.len();
    phis.push(f64::INFINITY);
    let mut strength_left = Vec::with_capacity(count);
    strength_left.push((-2.0 * (alpha - beta.re + 1.0)).max(0.0));
    strength_left.extend(core::iter::repeat_n(1.0, count - 1));
    let strength_right = |j: usize| if j + 1 < count { 1.0 } else { f64::INFINITY };

    let mut best: (usize, Params) = (0, INFEASIBLE);
    for _attempt in 0..20 {
        best = (0, INFEASIBLE);
        for j in 0..count {
            let admissible = phis[j] < (log_eps - LOG_EPS_MACH) / t && phis[j] < phis[j + 1];
            if !admissible {
                continue;
            }
            let params = if j + 1 < count {
                bounded_region(t, phis[j], phis[j + 1], strength_left[j], strength_right(j), log_eps)
            } else {
                unbounded_region(t, phis[j], strength_left[j], log_eps)
            };
            if params.n < best.1.n {
                best = (j, params);
            }
        }
        if best.1.n > MAX_NODES {
            log_eps += core::f64::consts::LN_10;
        } else {
            break;
        }
    }
    let (region, Params { mu, h, n }) = best;
    if !n.is_finite() {
        return None;
    }

    let n = n as i64;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut scale = 0.0;
    for k in -n..=n {
        let u = h * k as f64;
        let s = Complex64::new(1.0, u).powi(2) * mu;
        let ds = Complex64::new(-2.0 * mu * u, 2.0 * mu);
        let ln_s = s.ln();
        let f = ((alpha - beta) * ln_s).exp() / ((ln_s * alpha).exp() - z) * ds;
        let term = (s * t).exp() * f;
        sum += term;
        // rounding of s carries into the exponent
        scale += term.norm() * (4.0 + s.norm());
    }
    let integral = sum * h / Complex64::new(0.0, 2.0 * PI);

    let mut residues = Complex64::new(0.0, 0.0);
    let mut residue_rounding = 0.0;
    for &s in &sing[region + 1..] {
        let term = ((Complex64::new(1.0, 0.0) - beta) * s.ln() + s * t).exp() / alpha;
        residues += term;
        // the pole's own rounding (a few ulps in modulus and angle) enters the exponent
        residue_rounding += f64::EPSILON * term.norm() * (2.0 + s.norm() * (3.0 + s.arg().abs()));
    }
    let mut value = integral + residues;
    if z.im == 0.0 && beta.im == 0.0 {
        value.im = 0.0;
    }

    // discretisation error is balanced at exp(log_eps) against the O(1)
    // scale of the transform (the factor 30 is calibrated on high-precision
    // reference values); round-off grows with the summed node weights
    let accuracy = log_eps.exp();
    let rounding = f64::EPSILON * scale * h / (2.0 * PI) + residue_rounding;
    let bound = 30.0 * accuracy * value.norm().max(1.0) + rounding;
    Some(MlResult { value, abs_error_bound: bound, method: MlMethod::Quadrature })
}
