use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::FftPlanner;

use super::filter::{filter, tail_bound, FilterMethod};
use crate::error::{Error, Result};
use crate::quat::{AxialElement, QuaternionicOrder};

/// Interpolation coefficients `c_{N,M,k}`, `-N/2 <= k < N/2`, so that
/// `L_q ≈ Σ_k c_k B_q(· - k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffTable {
    pub order: QuaternionicOrder,
    pub n: usize,
    pub method: FilterMethod,
    coeffs: Vec<AxialElement>,
    /// `min |F|` on the DFT grid.
    pub filter_min: f64,
    /// Truncation part plus the `12 (2π)² S_q / N` Riemann-sum part, with
    /// `S_q` estimated from differences of `F` on the DFT grid.
    pub error_bound: f64,
}

impl CoeffTable {
    /// `c_k`; zero outside `[-N/2, N/2)`.
    pub fn get(&self, k: i64) -> AxialElement {
        let h = (self.n / 2) as i64;
        if k < -h || k >= h {
            return AxialElement::zero(self.order.axis());
        }
        self.coeffs[(k + h) as usize]
    }

    /// `(k, c_k)` in increasing `k`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &AxialElement)> + '_ {
        let h = (self.n / 2) as i64;
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, c)| (i as i64 - h, c))
    }

    /// `max_{|k| <= range} |c_k - other_k|`.
    pub fn max_distance(&self, other: &CoeffTable, range: i64) -> f64 {
        (-range..=range)
            .map(|k| (self.get(k) - other.get(k)).norm())
            .fold(0.0, f64::max)
    }
}

/// `c_{N,M,k} = (1/N) Σ_j e^{2πijk/N} / F(2πj/N)` by one inverse FFT per
/// axial slot.
pub fn coeffs_dft(q: &QuaternionicOrder, n: usize, method: FilterMethod) -> Result<CoeffTable> {
    q.require_sc_above(1.0, "coeffs_dft")?;
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::domain("coeffs_dft", "N must be even and at least 4"));
    }
    let step = 2.0 * PI / n as f64;
    let f = (0..n)
        .map(|j| filter(q, j as f64 * step, method))
        .collect::<Result<Vec<_>>>()?;
    let filter_min = f
        .iter()
        .map(AxialElement::norm)
        .fold(f64::INFINITY, f64::min);
    let trunc = match method {
        FilterMethod::Truncated { m } => tail_bound(q, m),
        FilterMethod::Zeta => 0.0,
    };
    let zero = |min| Error::ZeroFilter {
        min_modulus: min,
        threshold: 2.0 * trunc,
    };
    if filter_min <= 2.0 * trunc {
        return Err(zero(filter_min));
    }
    let inv = f
        .iter()
        .map(|x| x.inverse().map_err(|_| zero(filter_min)))
        .collect::<Result<Vec<_>>>()?;

    let plan = FftPlanner::new().plan_fft_inverse(n);
    let mut s: Vec<Complex64> = inv.iter().map(|x| x.s).collect();
    let mut u: Vec<Complex64> = inv.iter().map(|x| x.u).collect();
    plan.process(&mut s);
    plan.process(&mut u);
    let h = n / 2;
    let axis = q.axis();
    let coeffs = (0..n)
        .map(|i| {
            let k = (i + h) % n;
            AxialElement::new(axis, s[k] / n as f64, u[k] / n as f64)
        })
        .collect();

    let mut sup_s: f64 = 0.0;
    let mut sup_u: f64 = 0.0;
    for j in 0..n {
        let d = f[(j + 1) % n] - f[j];
        sup_s = sup_s.max(d.s.norm() / step);
        sup_u = sup_u.max(d.u.norm() / step);
    }
    let epstein = (sup_s + sup_u) / (filter_min * filter_min);
    let error_bound = trunc / (filter_min * (filter_min - trunc))
        + 12.0 * (2.0 * PI).powi(2) * epstein / n as f64;

    Ok(CoeffTable {
        order: *q,
        n,
        method,
        coeffs,
        filter_min,
        error_bound,
    })
}

/// `(Σ_k c_k b_{m-k})_m` for `|m| <= range`: should be `δ_{m,0}`.
pub fn convolve_with_samples(
    table: &CoeffTable,
    samples: &crate::bspline::IntegerSymbol,
    range: i64,
) -> Vec<(i64, AxialElement)> {
    let axis = table.order.axis();
    (-range..=range)
        .map(|m| {
            let v = samples
                .iter()
                .fold(AxialElement::zero(axis), |acc, (l, b)| {
                    acc + table.get(m - l) * *b
                });
            (m, v)
        })
        .collect()
}

/// One step of a convergence study.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergencePoint {
    pub parameter: usize,
    pub error: f64,
}

/// A sequence of errors under parameter doubling and the least-squares
/// slope of `log₂ error` against `log₂ parameter`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceStudy {
    pub points: Vec<ConvergencePoint>,
    pub slope: f64,
}

pub(crate) fn least_squares(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let residual = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (y - intercept - slope * x).abs())
        .fold(0.0, f64::max);
    (slope, intercept, residual)
}

impl ConvergenceStudy {
    /// Slope refitted on the points whose error exceeds `floor`, so that
    /// values already at rounding level do not flatten the fit. `None` if
    /// fewer than two points remain.
    pub fn slope_above(&self, floor: f64) -> Option<f64> {
        let kept: Vec<_> = self.points.iter().filter(|p| p.error > floor).collect();
        if kept.len() < 2 {
            return None;
        }
        let xs: Vec<f64> = kept.iter().map(|p| (p.parameter as f64).log2()).collect();
        let ys: Vec<f64> = kept.iter().map(|p| p.error.log2()).collect();
        Some(least_squares(&xs, &ys).0)
    }
}

fn study(points: Vec<ConvergencePoint>) -> ConvergenceStudy {
    let xs: Vec<f64> = points.iter().map(|p| (p.parameter as f64).log2()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.error.log2()).collect();
    let slope = least_squares(&xs, &ys).0;
    ConvergenceStudy { points, slope }
}

/// Error of `c_{N,M,k}` against the untruncated `c_{N,∞,k}` (zeta-form
/// filter, same `N`) for `M = m0, 2 m0, ...`, over all `k`.
pub fn truncation_study(q: &QuaternionicOrder, n: usize, ms: &[usize]) -> Result<ConvergenceStudy> {
    let reference = coeffs_dft(q, n, FilterMethod::Zeta)?;
    let range = (n / 2 - 1) as i64;
    let points = ms
        .iter()
        .map(|&m| {
            let t = coeffs_dft(q, n, FilterMethod::Truncated { m })?;
            Ok(ConvergencePoint {
                parameter: m,
                error: t.max_distance(&reference, range),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(study(points))
}

/// Error of `c_{N,M,k}` against `c_{N_ref,M,k}` for the listed `N`, over
/// `|k| < N/2`.
pub fn dft_size_study(
    q: &QuaternionicOrder,
    m: usize,
    ns: &[usize],
    n_ref: usize,
) -> Result<ConvergenceStudy> {
    let method = FilterMethod::Truncated { m };
    let reference = coeffs_dft(q, n_ref, method)?;
    let points = ns
        .iter()
        .map(|&n| {
            let t = coeffs_dft(q, n, method)?;
            Ok(ConvergencePoint {
                parameter: n,
                error: t.max_distance(&reference, (n / 2 - 1) as i64),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(study(points))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bspline::integer_samples;
    use crate::quat::Preset;

    #[test]
    fn cubic_coefficients_are_geometric() {
        // 1/F_4 has c_k ∝ (√3 - 2)^{|k-2|} about the shift by 2
        let q = QuaternionicOrder::real(4.0).unwrap();
        let t = coeffs_dft(&q, 256, FilterMethod::Zeta).unwrap();
        let r = 3f64.sqrt() - 2.0;
        let c0 = t.get(-2).s.re;
        assert!((c0 - 3f64.sqrt()).abs() < 1e-12);
        for k in 1..8 {
            assert!((t.get(-2 + k).s.re - c0 * r.powi(k as i32)).abs() < 1e-12);
        }
    }

    #[test]
    fn convolution_gives_delta() {
        let q = Preset::Q2.order();
        let t = coeffs_dft(&q, 1024, FilterMethod::Truncated { m: 64 }).unwrap();
        let b = integer_samples(&q, 200).unwrap();
        for (m, v) in convolve_with_samples(&t, &b, 10) {
            let target = if m == 0 { 1.0 } else { 0.0 };
            assert!(
                (v - AxialElement::one(q.axis()) * target).norm() < 1e-3,
                "m = {m}"
            );
        }
    }

    #[test]
    fn fit_recovers_known_slope() {
        let xs = [1.0, 2.0, 3.0];
        let ys = [3.0, 1.0, -1.0];
        let (s, i, r) = least_squares(&xs, &ys);
        assert!((s + 2.0).abs() < 1e-15 && (i - 5.0).abs() < 1e-15 && r < 1e-15);
    }
}
