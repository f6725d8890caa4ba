//! Uniform grids, trapezoidal weights and the `(t, x)` field container.

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};

/// `n` equally spaced points from `start` to `end` inclusive.
pub fn linspace(start: f64, end: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => alloc::vec![start],
        _ => {
            let step = (end - start) / (n - 1) as f64;
            (0..n).map(|i| if i == n - 1 { end } else { start + step * i as f64 }).collect()
        }
    }
}

/// Spacing of a uniform grid, or an error when the grid is not uniform
/// (relative tolerance `1e-9` on every step) or not increasing.
pub fn uniform_spacing(values: &[f64]) -> Result<f64> {
    if values.len() < 2 {
        return Err(Error::InvalidArgument("grid needs at least two points"));
    }
    let step = (values[values.len() - 1] - values[0]) / (values.len() - 1) as f64;
    if !(step > 0.0) || !step.is_finite() {
        return Err(Error::InvalidArgument("grid must be strictly increasing"));
    }
    for w in values.windows(2) {
        if ((w[1] - w[0]) - step).abs() > 1e-9 * step {
            return Err(Error::InvalidArgument("grid must be uniformly spaced"));
        }
    }
    Ok(step)
}

/// Composite trapezoid weights on a uniform grid: `h` inside, `h/2` at the ends.
/// A single point gets weight 1 (a delta spectrum).
pub fn trapezoid_weights(values: &[f64]) -> Result<Vec<f64>> {
    if values.len() == 1 {
        return Ok(alloc::vec![1.0]);
    }
    let h = uniform_spacing(values)?;
    let n = values.len();
    Ok((0..n).map(|i| if i == 0 || i == n - 1 { 0.5 * h } else { h }).collect())
}

/// Complex samples on a rectangular `(t, x)` grid, stored t-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SpaceTimeField {
    t_values: Vec<f64>,
    x_values: Vec<f64>,
    values: Vec<Complex64>,
}

impl SpaceTimeField {
    pub fn new(t_values: Vec<f64>, x_values: Vec<f64>, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != t_values.len() * x_values.len() {
            return Err(Error::InvalidArgument("field size does not match the grids"));
        }
        Ok(SpaceTimeField { t_values, x_values, values })
    }

    pub fn zeros(t_values: Vec<f64>, x_values: Vec<f64>) -> Self {
        let values = alloc::vec![Complex64::new(0.0, 0.0); t_values.len() * x_values.len()];
        SpaceTimeField { t_values, x_values, values }
    }

    /// Fills every sample from `f(t, x)`.
    pub fn from_fn(t_values: &[f64], x_values: &[f64], mut f: impl FnMut(f64, f64) -> Complex64) -> Self {
        let mut values = Vec::with_capacity(t_values.len() * x_values.len());
        for &t in t_values {
            for &x in x_values {
                values.push(f(t, x));
            }
        }
        SpaceTimeField { t_values: t_values.to_vec(), x_values: x_values.to_vec(), values }
    }

    pub fn t_values(&self) -> &[f64] {
        &self.t_values
    }

    pub fn x_values(&self) -> &[f64] {
        &self.x_values
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    pub fn get(&self, it: usize, ix: usize) -> Complex64 {
        self.values[it * self.x_values.len() + ix]
    }

    /// Samples at time index `it`.
    pub fn row(&self, it: usize) -> &[Complex64] {
        let nx = self.x_values.len();
        &self.values[it * nx..(it + 1) * nx]
    }

    /// Iterates `(t, x, ψ)` in t-major order.
    pub fn iter(&self) -> impl Iterator<Item = (f64, f64, Complex64)> + '_ {
        let nx = self.x_values.len();
        self.values.iter().enumerate().map(move |(i, &v)| (self.t_values[i / nx], self.x_values[i % nx], v))
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.norm()))
    }

    /// `(Σ_x |ψ(t, x)|² Δx)^{1/2}` at time index `it`, trapezoid in x.
    pub fn l2_norm_at(&self, it: usize) -> Result<f64> {
        l2_norm(self.row(it), &self.x_values)
    }

    /// Sample-wise combination with a field on the same grids.
    pub fn zip_with(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Result<Self> {
        if self.t_values != other.t_values || self.x_values != other.x_values {
            return Err(Error::InvalidArgument("fields live on different grids"));
        }
        let values = self.values.iter().zip(&other.values).map(|(&a, &b)| f(a, b)).collect();
        Ok(SpaceTimeField { t_values: self.t_values.clone(), x_values: self.x_values.clone(), values })
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let values = self.values.iter().map(|&v| v * c).collect();
        SpaceTimeField { t_values: self.t_values.clone(), x_values: self.x_values.clone(), values }
    }
}

/// Trapezoidal L² norm of samples on a uniform grid.
pub fn l2_norm(samples: &[Complex64], x_values: &[f64]) -> Result<f64> {
    let w = trapezoid_weights(x_values)?;
    Ok(samples.iter().zip(&w).map(|(v, w)| v.norm_sqr() * w).sum::<f64>().sqrt())
}

/// `‖a − b‖ / ‖b‖` in the discrete (unweighted) sense over all samples.
pub fn relative_l2(a: &[Complex64], b: &[Complex64]) -> f64 {
    let num: f64 = a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum();
    let den: f64 = b.iter().map(|y| y.norm_sqr()).sum();
    if den == 0.0 {
        num.sqrt()
    } else {
        (num / den).sqrt()
    }
}
