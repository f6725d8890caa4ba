//! Adaptive Gauss–Kronrod quadrature for complex-valued integrands.
//!
//! A 7/15-point pair on each panel, global bisection of the panel with the
//! largest error estimate. Semi-infinite ranges are mapped onto `(0, 1]`
//! with `x = a + (1 − τ)/τ`.

#![allow(clippy::excessive_precision)]

use alloc::collections::BinaryHeap;
use core::cmp::Ordering;

use num_complex::Complex64;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Gauss weights for the odd-indexed Kronrod nodes (and the centre).
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Tolerances and budget for one adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct QuadConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_panels: usize,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig { abs_tol: 1e-12, rel_tol: 1e-12, max_panels: 2000 }
    }
}

impl QuadConfig {
    pub fn with_tol(abs_tol: f64, rel_tol: f64) -> Self {
        QuadConfig { abs_tol, rel_tol, ..Default::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadEstimate {
    pub value: Complex64,
    pub abs_error: f64,
    pub evaluations: usize,
}

struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gk15<F: FnMut(f64) -> Complex64>(f: &mut F, a: f64, b: f64) -> (Complex64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += pair * WGK[j];
        if j % 2 == 1 {
            gauss += pair * WG[j / 2];
        }
    }
    let value = kronrod * half;
    let err = ((kronrod - gauss) * half).norm();
    // floor at the rounding level of the panel sum
    let floor = 50.0 * f64::EPSILON * value.norm();
    (value, err.max(floor))
}

/// Integrates `f` over the finite interval `[a, b]`.
pub fn integrate<F>(mut f: F, a: f64, b: f64, cfg: QuadConfig) -> Result<QuadEstimate>
where
    F: FnMut(f64) -> Complex64,
{
    if a == b {
        return Ok(QuadEstimate { value: Complex64::new(0.0, 0.0), abs_error: 0.0, evaluations: 0 });
    }
    let (v, e) = gk15(&mut f, a, b);
    let mut evaluations = 15;
    let mut total = v;
    let mut total_err = e;
    let mut heap = BinaryHeap::new();
    heap.push(Panel { a, b, value: v, error: e });
    while total_err > cfg.abs_tol.max(cfg.rel_tol * total.norm()) {
        if heap.len() >= cfg.max_panels {
            return Err(Error::QuadratureFailure {
                estimate: total_err,
                tolerance: cfg.abs_tol.max(cfg.rel_tol * total.norm()),
            });
        }
        let worst = heap.pop().expect("heap holds at least one panel");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // panel cannot be split any further in floating point
            return Err(Error::QuadratureFailure {
                estimate: total_err,
                tolerance: cfg.abs_tol.max(cfg.rel_tol * total.norm()),
            });
        }
        let (v1, e1) = gk15(&mut f, worst.a, mid);
        let (v2, e2) = gk15(&mut f, mid, worst.b);
        evaluations += 30;
        total += v1 + v2 - worst.value;
        total_err += e1 + e2 - worst.error;
        heap.push(Panel { a: worst.a, b: mid, value: v1, error: e1 });
        heap.push(Panel { a: mid, b: worst.b, value: v2, error: e2 });
    }
    // re-sum to shed the drift of incremental updates
    let mut value = Complex64::new(0.0, 0.0);
    let mut abs_error = 0.0;
    for p in heap.iter() {
        value += p.value;
        abs_error += p.error;
    }
    Ok(QuadEstimate { value, abs_error, evaluations })
}

/// Integrates `f` over `[a, ∞)`.
pub fn integrate_to_infinity<F>(mut f: F, a: f64, cfg: QuadConfig) -> Result<QuadEstimate>
where
    F: FnMut(f64) -> Complex64,
{
    integrate(
        |tau| {
            let x = a + (1.0 - tau) / tau;
            let y = f(x);
            if y == Complex64::new(0.0, 0.0) {
                y
            } else {
                y / (tau * tau)
            }
        },
        0.0,
        1.0,
        cfg,
    )
}
