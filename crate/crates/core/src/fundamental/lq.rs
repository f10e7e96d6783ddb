use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::FftPlanner;

use super::filter::{filter, filter_complex, tail_bound, FilterMethod};
use crate::bspline::{bspline_hat, bspline_hat_complex};
use crate::error::{Error, Result};
use crate::grid::{GridFunction, UniformGrid};
use crate::quat::{AxialElement, QuaternionicOrder};

/// Discretization of the inverse Fourier integral for `L_q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LqConfig {
    /// Half-width `Ω` of the frequency window; a multiple of `2π`.
    pub omega: f64,
    /// FFT length, a power of two; `Ω/π` must divide it.
    pub fft_size: usize,
    pub filter: FilterMethod,
    /// Alias estimates above this produce a warning.
    pub alias_tolerance: f64,
}

impl Default for LqConfig {
    fn default() -> Self {
        Self {
            omega: 64.0 * PI,
            fft_size: 1 << 16,
            filter: FilterMethod::Zeta,
            alias_tolerance: 1e-3,
        }
    }
}

impl LqConfig {
    /// Frequency spacing `2Ω / N_f`.
    pub fn frequency_step(&self) -> f64 {
        2.0 * self.omega / self.fft_size as f64
    }

    /// Time spacing `π / Ω`.
    pub fn time_step(&self) -> f64 {
        PI / self.omega
    }

    /// Number of frequency samples per period `2π`.
    fn period(&self) -> Result<usize> {
        let n = self.fft_size;
        if n < 16 || !n.is_power_of_two() {
            return Err(Error::domain(
                "lq_grid",
                format!("fft size {n} is not a power of two >= 16"),
            ));
        }
        let j = self.omega / (2.0 * PI);
        if !(j >= 1.0) || (j - j.round()).abs() > 1e-9 {
            return Err(Error::domain(
                "lq_grid",
                "omega must be a positive multiple of 2π",
            ));
        }
        let twice = 2 * j.round() as usize;
        if !n.is_multiple_of(twice) || n / twice < 2 {
            return Err(Error::domain(
                "lq_grid",
                "omega / π must divide the fft size",
            ));
        }
        Ok(n / twice)
    }
}

/// `L_q` on the time grid of an [`LqConfig`].
#[derive(Debug, Clone, PartialEq)]
pub struct LqGrid {
    pub function: GridFunction,
    pub config: LqConfig,
    /// Estimate of `(1/2π) ∫_{|ξ|>Ω} |L̂_q|`, a bound on the truncation error.
    pub alias_estimate: f64,
    /// `min |F_q|` over the frequency samples.
    pub filter_min: f64,
    pub warnings: Vec<String>,
}

impl LqGrid {
    /// `L_q(m)`, if `m` lies on the grid.
    pub fn at_integer(&self, m: i64) -> Option<AxialElement> {
        self.function.at(m as f64)
    }

    /// `max |L_q(t) - L_q(-t)|` over the grid.
    pub fn evenness_defect(&self) -> f64 {
        let v = self.function.values();
        let n = v.len();
        // t_i = (i - n/2) Δt, so -t_i sits at n - i for 0 < i < n
        (1..n).map(|i| (v[i] - v[n - i]).norm()).fold(0.0, f64::max)
    }

    /// Largest `|L_q(m) - δ_{m,0}|` for `|m| <= range`.
    pub fn interpolation_defect(&self, range: i64) -> Option<f64> {
        let one = AxialElement::one(self.function.axis());
        let mut worst: f64 = 0.0;
        for m in -range..=range {
            let v = self.at_integer(m)?;
            let d = if m == 0 { (v - one).norm() } else { v.norm() };
            worst = worst.max(d);
        }
        Some(worst)
    }
}

fn zero_filter(method: FilterMethod, q: &QuaternionicOrder, min_modulus: f64) -> Error {
    Error::ZeroFilter {
        min_modulus,
        threshold: threshold(method, q),
    }
}

fn threshold(method: FilterMethod, q: &QuaternionicOrder) -> f64 {
    match method {
        FilterMethod::Truncated { m } => 2.0 * tail_bound(q, m),
        FilterMethod::Zeta => 1e-12,
    }
}

/// `L̂_q(ξ) = B̂_q(ξ) F_q(ξ)^{-1}`, dividing in the axial algebra.
pub fn lq_hat(q: &QuaternionicOrder, xi_val: f64, method: FilterMethod) -> Result<AxialElement> {
    let f = filter(q, xi_val, method)?;
    let inv = f.inverse().map_err(|_| zero_filter(method, q, f.norm()))?;
    Ok(bspline_hat(q, xi_val)? * inv)
}

/// `L̂_w(ξ) = B̂_w(ξ) / F_w(ξ)` for complex `w`.
pub fn lq_hat_complex(w: Complex64, xi_val: f64, method: FilterMethod) -> Result<Complex64> {
    let f = filter_complex(w, xi_val, method)?;
    if f.norm() < 1e-14 {
        return Err(Error::ZeroFilter {
            min_modulus: f.norm(),
            threshold: 1e-14,
        });
    }
    Ok(bspline_hat_complex(w, xi_val)? / f)
}

/// `(1/2π) Σ_j x_j e^{iξ_j t_n} Δξ` for `ξ_j = -Ω + jΔξ`, returned in
/// increasing `t_n = (n - N/2) Δt`.
fn inverse_transform(mut x: Vec<Complex64>, config: &LqConfig) -> Vec<Complex64> {
    let n = x.len();
    let fft = FftPlanner::new().plan_fft_inverse(n);
    fft.process(&mut x);
    let scale = config.frequency_step() / (2.0 * PI);
    (0..n)
        .map(|i| {
            let k = (i + n / 2) % n;
            // e^{-iΩ t_k} = (-1)^k since Ω Δt = π
            let sign = if k.is_multiple_of(2) { scale } else { -scale };
            x[k] * sign
        })
        .collect()
}

fn time_grid(config: &LqConfig) -> Result<UniformGrid> {
    let dt = config.time_step();
    UniformGrid::new(-((config.fft_size / 2) as f64) * dt, dt, config.fft_size)
}

/// Frequency sample `j` of `[-Ω, Ω)`; slot 0 carries the average of both
/// endpoints (trapezoid on a symmetric window).
fn frequency_samples<T, F>(config: &LqConfig, mut f: F) -> Result<Vec<T>>
where
    T: Copy + std::ops::Add<Output = T> + std::ops::Mul<f64, Output = T>,
    F: FnMut(usize, f64) -> Result<T>,
{
    let n = config.fft_size;
    let d = config.frequency_step();
    let mut out = (0..n)
        .map(|j| f(j, -config.omega + j as f64 * d))
        .collect::<Result<Vec<_>>>()?;
    out[0] = (out[0] + f(n, config.omega)?) * 0.5;
    Ok(out)
}

/// `∫_{|ξ|>Ω} |L̂|/(2π)`: numerically over `Ω < |ξ| < 4Ω`, then the
/// `|ξ|^{-Sc q}` envelope fitted on the last period.
fn alias_estimate<F>(config: &LqConfig, period: usize, sc: f64, mut modulus: F) -> Result<f64>
where
    F: FnMut(usize, f64) -> Result<f64>,
{
    let n = config.fft_size;
    let d = config.frequency_step();
    let mut integral = 0.0;
    let mut envelope: f64 = 0.0;
    let far = 3 * n / 2;
    for j in 1..=far {
        let x = config.omega + j as f64 * d;
        let v = modulus(j, x)? + modulus(j, -x)?;
        integral += v * d;
        if j + period > far {
            envelope = envelope.max(0.5 * v * x.powf(sc));
        }
    }
    let edge = config.omega + far as f64 * d;
    let rest = 2.0 * envelope * edge.powf(1.0 - sc) / (sc - 1.0);
    Ok((integral + rest) / (2.0 * PI))
}

/// `L_q` sampled on `t_n = n π/Ω`, `-N_f/2 <= n < N_f/2`, by the inverse
/// FFT of `L̂_q` on `[-Ω, Ω]`, working in the axial algebra of `q`.
pub fn lq_grid(q: &QuaternionicOrder, config: &LqConfig) -> Result<LqGrid> {
    q.require_sc_above(1.0, "lq_grid")?;
    let period = config.period()?;
    let d = config.frequency_step();
    let method = config.filter;

    let f_table = (0..period)
        .map(|j| filter(q, j as f64 * d, method))
        .collect::<Result<Vec<_>>>()?;
    let filter_min = f_table
        .iter()
        .map(AxialElement::norm)
        .fold(f64::INFINITY, f64::min);
    if filter_min <= threshold(method, q) {
        return Err(zero_filter(method, q, filter_min));
    }
    let inv_table = f_table
        .iter()
        .map(|f| f.inverse().map_err(|_| zero_filter(method, q, filter_min)))
        .collect::<Result<Vec<_>>>()?;
    let inv_at = |j: usize, shift: i64| {
        // ξ = -Ω + jΔξ ≡ jΔξ mod 2π; `shift` counts periods of `period` samples
        let idx = (j as i64 + shift).rem_euclid(period as i64) as usize;
        inv_table[idx]
    };

    let hat = frequency_samples(config, |j, x| Ok(bspline_hat(q, x)? * inv_at(j, 0)))?;
    let s = inverse_transform(hat.iter().map(|h| h.s).collect(), config);
    let u = inverse_transform(hat.iter().map(|h| h.u).collect(), config);
    let axis = q.axis();
    let values = s
        .into_iter()
        .zip(u)
        .map(|(s, u)| AxialElement::new(axis, s, u))
        .collect();
    let function = GridFunction::new(time_grid(config)?, axis, values)?;

    let omega_steps = (config.omega / d).round() as i64;
    let alias = alias_estimate(config, period, q.sc(), |j, x| {
        let shift = if x > 0.0 {
            omega_steps + j as i64
        } else {
            -omega_steps - j as i64
        };
        Ok((bspline_hat(q, x)? * inv_at(0, shift)).norm())
    })?;

    let mut warnings = Vec::new();
    if alias > config.alias_tolerance {
        warnings.push(format!(
            "alias estimate {alias:.3e} exceeds tolerance {:.1e}; increase omega",
            config.alias_tolerance
        ));
    }
    let residual = function.imag_residual();
    if residual > 1e-9 {
        warnings.push(format!("imaginary residual {residual:.3e} in L_q samples"));
    }
    for w in &warnings {
        log::warn!("{w}");
    }
    Ok(LqGrid {
        function,
        config: *config,
        alias_estimate: alias,
        filter_min,
        warnings,
    })
}

/// Complex fundamental spline `L_w` on the same grid as [`lq_grid`].
pub fn lq_grid_complex(w: Complex64, config: &LqConfig) -> Result<(UniformGrid, Vec<Complex64>)> {
    let period = config.period()?;
    let d = config.frequency_step();
    let method = config.filter;
    let table = (0..period)
        .map(|j| filter_complex(w, j as f64 * d, method))
        .collect::<Result<Vec<_>>>()?;
    let min = table.iter().map(|f| f.norm()).fold(f64::INFINITY, f64::min);
    if min < 1e-14 {
        return Err(Error::ZeroFilter {
            min_modulus: min,
            threshold: 1e-14,
        });
    }
    let hat = frequency_samples(config, |j, x| {
        Ok(bspline_hat_complex(w, x)? / table[j % period])
    })?;
    Ok((time_grid(config)?, inverse_transform(hat, config)))
}

/// `L_q` through the complex shadow: `Re L_w + μ Im L_w`.
pub fn lq_grid_shadow(q: &QuaternionicOrder, config: &LqConfig) -> Result<GridFunction> {
    q.require_sc_above(1.0, "lq_grid_shadow")?;
    let (grid, values) = lq_grid_complex(q.w(), config)?;
    let axis = q.axis();
    let values = values
        .iter()
        .map(|v| AxialElement::real(axis, v.re, v.im))
        .collect();
    GridFunction::new(grid, axis, values)
}
