//! Planck-scaled parameters and dispersion quantities.
//!
//! With `N_m = m / M_p` the free equation becomes
//! `(i T_p)^ν ∂_t^ν ψ = −(L_p² / 2N_m) ∂_x² ψ`, so a plane wave `e^{−ikx}` has
//! `w = L_p² k² / (2 T_p^ν N_m)` and the well mode `n` has
//! `w_n = (1/2N_m)(nπ L_p / a)² / T_p^ν`. `T_p^ν` is the principal power.

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};

/// Mass ratio and Planck length/time. Defaults are `1, 1, 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scales {
    n_m: f64,
    l_p: f64,
    t_p: f64,
}

impl Default for Scales {
    fn default() -> Self {
        Scales { n_m: 1.0, l_p: 1.0, t_p: 1.0 }
    }
}

impl Scales {
    pub fn new(n_m: f64, l_p: f64, t_p: f64) -> Result<Self> {
        for (v, name) in [(n_m, "n_m must be finite and > 0"), (l_p, "l_p must be finite and > 0"), (t_p, "t_p must be finite and > 0")] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidArgument(name));
            }
        }
        Ok(Scales { n_m, l_p, t_p })
    }

    /// Planck units with the given mass ratio.
    pub fn with_mass_ratio(n_m: f64) -> Result<Self> {
        Scales::new(n_m, 1.0, 1.0)
    }

    pub fn n_m(&self) -> f64 {
        self.n_m
    }

    pub fn l_p(&self) -> f64 {
        self.l_p
    }

    pub fn t_p(&self) -> f64 {
        self.t_p
    }
}

/// Order `ν` of the time derivative, `Re ν > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivativeOrder(Complex64);

impl DerivativeOrder {
    pub fn new(nu: impl Into<Complex64>) -> Result<Self> {
        let nu = nu.into();
        if !(nu.re > 0.0) || !nu.re.is_finite() || !nu.im.is_finite() {
            return Err(Error::InvalidDerivativeOrder(nu));
        }
        Ok(DerivativeOrder(nu))
    }

    pub fn value(&self) -> Complex64 {
        self.0
    }

    /// `ν` when it is real.
    pub fn real(&self) -> Option<f64> {
        (self.0.im == 0.0).then_some(self.0.re)
    }
}

fn t_p_power(nu: DerivativeOrder, s: &Scales) -> Complex64 {
    let nu = nu.value();
    if nu.im == 0.0 {
        Complex64::new(s.t_p.powf(nu.re), 0.0)
    } else {
        (nu * s.t_p.ln()).exp()
    }
}

/// `β² = L_p² / (2 T_p^ν N_m)`.
pub fn beta_sq(nu: DerivativeOrder, s: &Scales) -> Complex64 {
    Complex64::new(s.l_p * s.l_p / (2.0 * s.n_m), 0.0) / t_p_power(nu, s)
}

/// `w = β² k²`.
pub fn dispersion_w(k: f64, nu: DerivativeOrder, s: &Scales) -> Complex64 {
    beta_sq(nu, s) * (k * k)
}

/// `w_n = β² (nπ / a)²`; the ratio `w_n / w_1` is exactly `n²`.
pub fn well_w(n: u32, width: f64, nu: DerivativeOrder, s: &Scales) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::InvalidArgument("well mode index starts at 1"));
    }
    if !(width > 0.0 && width.is_finite()) {
        return Err(Error::InvalidArgument("well width must be finite and > 0"));
    }
    let q = core::f64::consts::PI / width;
    Ok(beta_sq(nu, s) * (q * q) * f64::from(n * n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nu(v: f64) -> DerivativeOrder {
        DerivativeOrder::new(v).unwrap()
    }

    #[test]
    fn dispersion_examples() {
        let s = Scales::default();
        assert_eq!(dispersion_w(2.0, nu(1.0), &s), Complex64::new(2.0, 0.0));
        assert_eq!(dispersion_w(0.0, nu(0.3), &s), Complex64::new(0.0, 0.0));
        let s2 = Scales::with_mass_ratio(2.0).unwrap();
        assert_eq!(dispersion_w(1.0, nu(0.5), &s2), Complex64::new(0.25, 0.0));
    }

    #[test]
    fn well_examples() {
        let s = Scales::default();
        let pi = core::f64::consts::PI;
        assert!((well_w(1, pi, nu(1.0), &s).unwrap() - 0.5).norm() < 1e-15);
        assert!((well_w(2, pi, nu(1.0), &s).unwrap() - 2.0).norm() < 1e-15);
        let s = Scales::new(1.0, 1.0, 2.0).unwrap();
        assert!((well_w(1, pi, nu(2.0), &s).unwrap() - 0.125).norm() < 1e-15);
        assert!(well_w(0, pi, nu(1.0), &s).is_err());
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta_sq(nu(1.0), &Scales::default()), Complex64::new(0.5, 0.0));
        assert_eq!(beta_sq(nu(1.0), &Scales::with_mass_ratio(0.5).unwrap()), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn mode_ratio_is_exactly_n_squared() {
        let s = Scales::new(0.7, 1.3, 1.9).unwrap();
        let order = DerivativeOrder::new(Complex64::new(0.8, 0.4)).unwrap();
        let w1 = well_w(1, 2.3, order, &s).unwrap();
        for n in 1..=64u32 {
            let wn = well_w(n, 2.3, order, &s).unwrap();
            assert_eq!(wn, w1 * f64::from(n * n));
        }
    }

    #[test]
    fn complex_power_of_t_p() {
        let s = Scales::new(1.0, 1.0, 2.0).unwrap();
        let order = DerivativeOrder::new(Complex64::new(1.0, 1.0)).unwrap();
        let want = Complex64::new(0.5, 0.0) / Complex64::new(2.0, 0.0).powc(Complex64::new(1.0, 1.0));
        assert!((beta_sq(order, &s) - want).norm() < 1e-15);
    }

    #[test]
    fn rejects_invalid() {
        assert!(Scales::new(0.0, 1.0, 1.0).is_err());
        assert!(Scales::new(1.0, f64::NAN, 1.0).is_err());
        assert!(matches!(DerivativeOrder::new(0.0), Err(Error::InvalidDerivativeOrder(_))));
        assert!(DerivativeOrder::new(Complex64::new(-1.0, 2.0)).is_err());
    }
}
