//! Complex gamma function.
//!
//! Only the reciprocal gamma and `ln Γ` modulo `2πi` are needed by the
//! Mittag-Leffler sums, so the imaginary part of [`ln_gamma`] is not
//! normalised to a particular branch.

use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// `B_{2k} / (2k (2k − 1))` for k = 1..8.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

const STIRLING_MIN_ABS: f64 = 12.0;

/// `sin(πx)` with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let s = (PI * r).sin();
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

/// `cos(πx)` with exact zeros at the half-integers.
pub fn cos_pi(x: f64) -> f64 {
    sin_pi(x + 0.5)
}

/// `sin(πz)` for complex `z`.
pub fn sin_pi_complex(z: Complex64) -> Complex64 {
    let py = PI * z.im;
    Complex64::new(sin_pi(z.re) * py.cosh(), cos_pi(z.re) * py.sinh())
}

/// True when `z` is exactly one of the poles 0, −1, −2, …
pub fn is_pole(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// `(n − 1)!` when `z = n` is an integer in `1..=23`, where it is exact in `f64`.
fn small_factorial(z: Complex64) -> Option<f64> {
    if z.im != 0.0 || z.re != z.re.round() || !(1.0..=23.0).contains(&z.re) {
        return None;
    }
    let mut f = 1.0;
    for k in 2..z.re as u32 {
        f *= k as f64;
    }
    Some(f)
}

/// `ln Γ(z)` for `Re z ≥ 1/2`, via upward recurrence into the Stirling region.
fn ln_gamma_right(mut z: Complex64) -> Complex64 {
    if let Some(f) = small_factorial(z) {
        return Complex64::new(f.ln(), 0.0);
    }
    let mut shift = Complex64::new(0.0, 0.0);
    while z.re < STIRLING_MIN_ABS && z.norm() < STIRLING_MIN_ABS {
        shift += z.ln();
        z += 1.0;
    }
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut p = inv;
    for c in STIRLING {
        series += p * c;
        p *= inv2;
    }
    (z - 0.5) * z.ln() - z + LN_SQRT_2PI + series - shift
}

/// `ln Γ(z)` modulo `2πi`. Returns `+∞` at the poles.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    if is_pole(z) {
        return Complex64::new(f64::INFINITY, 0.0);
    }
    if z.re >= 0.5 {
        ln_gamma_right(z)
    } else {
        // Γ(z) Γ(1 − z) = π / sin(πz)
        Complex64::new(PI.ln(), 0.0) - sin_pi_complex(z).ln() - ln_gamma_right(Complex64::new(1.0, 0.0) - z)
    }
}

/// `1 / Γ(z)`, exactly zero at the poles.
pub fn rgamma(z: Complex64) -> Complex64 {
    if is_pole(z) {
        return Complex64::new(0.0, 0.0);
    }
    if let Some(f) = small_factorial(z) {
        return Complex64::new(1.0 / f, 0.0);
    }
    if z.re >= 0.5 {
        (-ln_gamma_right(z)).exp()
    } else {
        sin_pi_complex(z) / PI * ln_gamma_right(Complex64::new(1.0, 0.0) - z).exp()
    }
}

/// `Γ(z)`; infinite at the poles.
pub fn gamma(z: Complex64) -> Complex64 {
    rgamma(z).inv()
}
