//! Generalized Mittag-Leffler function
//!
//! ```text
//! E_{α,β}(z) = Σ_{n≥0} zⁿ / Γ(αn + β),   Re α > 0
//! ```
//!
//! [`ml`] picks one of three evaluation paths and reports which one it used
//! together with an absolute error bound:
//!
//! * [`MlMethod::TaylorSeries`]: the truncated series with a tail bound and a
//!   running rounding-error bound. Used when the terms do not cancel badly.
//! * [`MlMethod::Asymptotic`]: exponential-plus-algebraic expansion for real
//!   `α ∈ (0, 2]` and `|z|` beyond the crossover radius. Terms sitting in the
//!   configured wedge around a Stokes line are counted in the error bound.
//! * [`MlMethod::Quadrature`]: inversion of the Laplace transform
//!   `s^{α−β} / (s^α − z)` on an optimal parabolic contour plus the residues of
//!   the poles to its right. Real `α` only; this is the fallback whenever the
//!   two expansions cannot be certified.
//!
//! The tolerance is absolute-or-relative, whichever is looser:
//! a result is accepted when `bound ≤ tol · max(1, |value|)`.

mod asymptotic;
mod contour;
mod laplace;
mod series;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gamma::rgamma;

pub use laplace::laplace_identity_residual;

/// Orders `(α, β)` of `E_{α,β}`. `Re α > 0` is enforced on construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MlOrder {
    alpha: Complex64,
    beta: Complex64,
}

impl MlOrder {
    pub fn new(alpha: impl Into<Complex64>, beta: impl Into<Complex64>) -> Result<Self> {
        let alpha = alpha.into();
        let beta = beta.into();
        if !(alpha.re > 0.0) || !alpha.im.is_finite() || !beta.re.is_finite() || !beta.im.is_finite() {
            return Err(Error::InvalidOrder(alpha));
        }
        Ok(MlOrder { alpha, beta })
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    /// `α` when it is real.
    pub fn real_alpha(&self) -> Option<f64> {
        (self.alpha.im == 0.0).then_some(self.alpha.re)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MlMethod {
    TaylorSeries,
    Asymptotic,
    Quadrature,
}

impl MlMethod {
    pub fn name(&self) -> &'static str {
        match self {
            MlMethod::TaylorSeries => "taylor",
            MlMethod::Asymptotic => "asymptotic",
            MlMethod::Quadrature => "quadrature",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MlResult {
    pub value: Complex64,
    pub abs_error_bound: f64,
    pub method: MlMethod,
}

/// Knobs of the evaluation strategy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MlConfig {
    /// Absolute-or-relative tolerance.
    pub tolerance: f64,
    /// `|z|` beyond which the asymptotic expansion is tried first.
    pub crossover_radius: f64,
    /// Series iteration budget.
    pub max_terms: usize,
    /// Half-width (radians, in the `arg z` plane) of the uncertified wedge
    /// around each Stokes line `|arg z + 2πm| = απ`.
    pub stokes_wedge: f64,
    /// Upper limit on algebraic terms when the asymptotic order is chosen adaptively.
    pub max_asymptotic_terms: usize,
}

impl Default for MlConfig {
    fn default() -> Self {
        MlConfig {
            tolerance: 1e-12,
            crossover_radius: 50.0,
            max_terms: 100_000,
            stokes_wedge: 0.25,
            max_asymptotic_terms: 40,
        }
    }
}

impl MlConfig {
    pub fn with_tolerance(tolerance: f64) -> Self {
        MlConfig { tolerance, ..Default::default() }
    }

    pub(crate) fn target(&self, value: Complex64) -> f64 {
        self.tolerance * value.norm().max(1.0)
    }
}

/// `E_{α,β}(z)` with the default configuration.
pub fn ml(order: MlOrder, z: Complex64) -> Result<MlResult> {
    ml_with(order, z, &MlConfig::default())
}

/// `E_{α,β}(z)` with an explicit configuration.
pub fn ml_with(order: MlOrder, z: Complex64, cfg: &MlConfig) -> Result<MlResult> {
    if z == Complex64::new(0.0, 0.0) {
        return Ok(MlResult { value: rgamma(order.beta), abs_error_bound: 0.0, method: MlMethod::TaylorSeries });
    }
    let radius = z.norm();
    let real_alpha = order.real_alpha();

    if let Some(alpha) = real_alpha {
        if radius >= cfg.crossover_radius && alpha <= 2.0 {
            if let Ok(r) = asymptotic::adaptive(alpha, order.beta, z, cfg) {
                if finite(r.value) {
                    return Ok(r);
                }
            }
        }
    }

    let mut best = None;
    if real_alpha.is_none() || series::promising(real_alpha.unwrap_or(1.0), z, cfg.tolerance) {
        let s = series::sum(order, z, cfg.max_terms, cfg.tolerance);
        if s.bound <= cfg.target(s.value) {
            return Ok(MlResult { value: s.value, abs_error_bound: s.bound, method: MlMethod::TaylorSeries });
        }
        best = Some((s.value, s.bound));
    }
    let Some(alpha) = real_alpha else {
        let (best, bound) = best.expect("series is always attempted for complex alpha");
        return Err(Error::NonConvergent { best, bound });
    };

    // inside the crossover radius the expansion can still certify itself when
    // the algebraic terms decay fast enough
    if radius < cfg.crossover_radius && alpha <= 2.0 && radius > 1.0 {
        if let Ok(r) = asymptotic::adaptive(alpha, order.beta, z, cfg) {
            if finite(r.value) {
                return Ok(r);
            }
        }
    }

    match contour::evaluate(alpha, order.beta, z, cfg.tolerance) {
        Some(r) if r.abs_error_bound <= cfg.target(r.value) && finite(r.value) => Ok(r),
        Some(r) if best.is_none_or(|(_, b)| r.abs_error_bound < b) => {
            Err(Error::NonConvergent { best: r.value, bound: r.abs_error_bound })
        }
        _ => {
            let (best, bound) = best.unwrap_or((Complex64::new(f64::NAN, f64::NAN), f64::INFINITY));
            Err(Error::NonConvergent { best, bound })
        }
    }
}

fn finite(v: Complex64) -> bool {
    v.re.is_finite() && v.im.is_finite()
}

/// Plain truncated Taylor sum with a certified tail and rounding bound.
///
/// This is the reference path used to cross-check [`ml`]; it fails with
/// [`Error::NonConvergent`] (carrying the best value and achieved bound) when
/// the bound cannot be brought under the default tolerance in `max_terms`.
pub fn ml_series(order: MlOrder, z: Complex64, max_terms: usize) -> Result<MlResult> {
    if max_terms == 0 {
        return Err(Error::InvalidArgument("max_terms must be at least 1"));
    }
    let cfg = MlConfig::default();
    let s = series::sum(order, z, max_terms, cfg.tolerance);
    if s.bound <= cfg.target(s.value) {
        Ok(MlResult { value: s.value, abs_error_bound: s.bound, method: MlMethod::TaylorSeries })
    } else {
        Err(Error::NonConvergent { best: s.value, bound: s.bound })
    }
}

/// Large-`|z|` expansion with a fixed number of algebraic terms.
///
/// `α` must be real in `(0, 2]` and `|z|` at least the default crossover radius.
/// The bound is twice the next two algebraic terms plus any exponential term in
/// the Stokes wedge; [`Error::SectorUnsupported`] when that exceeds the tolerance.
pub fn ml_asymptotic(order: MlOrder, z: Complex64, num_terms: usize) -> Result<MlResult> {
    let cfg = MlConfig::default();
    let alpha = order
        .real_alpha()
        .filter(|a| *a <= 2.0)
        .ok_or(Error::InvalidArgument("asymptotic expansion needs real alpha in (0, 2]"))?;
    if z.norm() < cfg.crossover_radius {
        return Err(Error::InvalidArgument("asymptotic expansion needs |z| above the crossover radius"));
    }
    asymptotic::fixed(alpha, order.beta, z, num_terms, &cfg)
}
