//! Quaternionic B-splines in the frequency and time domains.
//!
//! `B̂_q(ξ) = Ξ(ξ)^q` with `Ξ(ξ) = (1 - e^{-iξ})/(iξ)`, and in time
//!
//! ```text
//! B_q(t) = Γ(q)^{-1} Σ_{k≥0} (-1)^k binom(q, k) (t - k)_+^{q-1}
//! ```
//!
//! Only the terms with `k < t` are nonzero, so the time series is finite
//! for every `t`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{GridFunction, UniformGrid};
use crate::quat::{cpow, AxialElement, QuaternionicOrder, RealQuaternion};
use crate::special::{gamma_complex, inv_gamma_axial};

/// `Ξ(ξ) = (1 - e^{-iξ})/(iξ) = e^{-iξ/2} sin(ξ/2)/(ξ/2)`, `Ξ(0) = 1`.
///
/// Never lies on the closed negative real axis; vanishes at `ξ ∈ 2πZ∖{0}`.
pub fn xi(xi: f64) -> Complex64 {
    let h = 0.5 * xi;
    let sinc = if h == 0.0 { 1.0 } else { h.sin() / h };
    Complex64::from_polar(1.0, -h) * sinc
}

/// `(1 - e^{-iξ})/i = 2 sin(ξ/2) e^{-iξ/2}`.
pub(crate) fn xi_numerator(xi: f64) -> Complex64 {
    let h = 0.5 * xi;
    Complex64::from_polar(2.0 * h.sin(), -h)
}

/// `B̂_q(ξ) = Ξ(ξ)^q`.
pub fn bspline_hat(q: &QuaternionicOrder, xi_val: f64) -> Result<AxialElement> {
    q.require_sc_above(1.0, "bspline_hat")?;
    q.pow_of(xi(xi_val))
}

/// Complex B-spline `B̂_w(ξ) = Ξ(ξ)^w`.
pub fn bspline_hat_complex(w: Complex64, xi_val: f64) -> Result<Complex64> {
    cpow(xi(xi_val), w)
}

/// [`bspline_hat`] on every point of `grid`.
pub fn bspline_hat_grid(q: &QuaternionicOrder, grid: UniformGrid) -> Result<GridFunction> {
    q.require_sc_above(1.0, "bspline_hat")?;
    GridFunction::from_fn(grid, q.axis(), |x| q.pow_of(xi(x)))
}

/// `binom(q, k) = (q)_k / k!` through the complex Pochhammer symbol of the
/// shadow: `Re binom(w, k) + μ Im binom(w, k)`.
pub fn quat_binomial(q: &QuaternionicOrder, k: usize) -> RealQuaternion {
    let b = complex_binomial(q.w(), k);
    AxialElement::real(q.axis(), b.re, b.im).to_real_quaternion()
}

/// `binom(w, k)` for complex `w`.
pub fn complex_binomial(w: Complex64, k: usize) -> Complex64 {
    (0..k).fold(Complex64::new(1.0, 0.0), |acc, j| {
        acc * (w - j as f64) / (j + 1) as f64
    })
}

/// `B_q(t)` by the quaternionic series, computed in the axial subalgebra
/// of `q` (binomials by the product `q(q-1)...(q-k+1)/k!`).
///
/// The alternating series cancels heavily for large `t`; see
/// [`bspline_time_roundoff`].
pub fn bspline_time(q: &QuaternionicOrder, t: f64) -> Result<AxialElement> {
    time_series(q, t).map(|(b, _)| b)
}

/// Rounding-error estimate `ε Σ_k |term_k| / |Γ(q)|` for [`bspline_time`].
pub fn bspline_time_roundoff(q: &QuaternionicOrder, t: f64) -> Result<f64> {
    time_series(q, t).map(|(_, r)| r)
}

fn time_series(q: &QuaternionicOrder, t: f64) -> Result<(AxialElement, f64)> {
    q.require_sc_above(1.0, "bspline_time")?;
    let axis = q.axis();
    if !(t > 0.0) {
        return Ok((AxialElement::zero(axis), 0.0));
    }
    let exponent = q.shifted(-1.0);
    let qa = q.as_axial();
    let one = AxialElement::one(axis);
    let mut binom = one;
    let mut sum = AxialElement::zero(axis);
    let mut magnitude = 0.0;
    let mut k = 0usize;
    while (k as f64) < t {
        let term = binom * exponent.pow_of(Complex64::new(t - k as f64, 0.0))?;
        magnitude += term.norm();
        sum = if k.is_multiple_of(2) {
            sum + term
        } else {
            sum - term
        };
        binom = binom * (qa - one * k as f64) * (1.0 / (k + 1) as f64);
        k += 1;
    }
    let inv_gamma = inv_gamma_axial(q)?;
    Ok((inv_gamma * sum, f64::EPSILON * magnitude * inv_gamma.norm()))
}

/// Complex B-spline `B_w(t)`, `Re w > 1`.
pub fn bspline_time_complex(w: Complex64, t: f64) -> Result<Complex64> {
    if !(w.re > 1.0) {
        return Err(Error::domain("bspline_time_complex", "Re w must exceed 1"));
    }
    if !(t > 0.0) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let mut binom = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut k = 0usize;
    while (k as f64) < t {
        let term = binom * cpow(Complex64::new(t - k as f64, 0.0), w - 1.0)?;
        sum += if k.is_multiple_of(2) { term } else { -term };
        binom *= (w - k as f64) / (k + 1) as f64;
        k += 1;
    }
    Ok(sum / gamma_complex(w)?)
}

/// `B_q(t)` through the complex shadow: `Re B_w(t) + μ Im B_w(t)`.
pub fn bspline_time_shadow(q: &QuaternionicOrder, t: f64) -> Result<AxialElement> {
    q.require_sc_above(1.0, "bspline_time_shadow")?;
    let b = bspline_time_complex(q.w(), t)?;
    Ok(AxialElement::real(q.axis(), b.re, b.im))
}

/// Integer samples `b_k = B_q(k)`, `|k| <= K`, and the symbol
/// `Σ_k b_k z^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegerSymbol {
    order: QuaternionicOrder,
    half_range: usize,
    samples: Vec<AxialElement>,
    tail_estimate: f64,
}

/// `b_k = B_q(k)` for `|k| <= half_range`.
pub fn integer_samples(q: &QuaternionicOrder, half_range: usize) -> Result<IntegerSymbol> {
    q.require_sc_above(1.0, "integer_samples")?;
    let k_max = half_range as i64;
    let samples = (-k_max..=k_max)
        .map(|k| bspline_time(q, k as f64))
        .collect::<Result<Vec<_>>>()?;
    // envelope C t^{-a-1} through the last sample, integrated beyond K
    let last = samples.last().map(AxialElement::norm).unwrap_or(0.0);
    let tail_estimate = last * half_range as f64 / q.sc();
    Ok(IntegerSymbol {
        order: *q,
        half_range,
        samples,
        tail_estimate,
    })
}

/// Complex integer samples `B_w(k)`, `|k| <= half_range`.
pub fn integer_samples_complex(w: Complex64, half_range: usize) -> Result<Vec<Complex64>> {
    let k_max = half_range as i64;
    (-k_max..=k_max)
        .map(|k| bspline_time_complex(w, k as f64))
        .collect()
}

impl IntegerSymbol {
    pub fn order(&self) -> &QuaternionicOrder {
        &self.order
    }

    pub fn half_range(&self) -> usize {
        self.half_range
    }

    /// `B_q(k)`, zero outside the stored range.
    pub fn get(&self, k: i64) -> AxialElement {
        let idx = k + self.half_range as i64;
        if idx < 0 || idx as usize >= self.samples.len() {
            return AxialElement::zero(self.order.axis());
        }
        self.samples[idx as usize]
    }

    /// `(k, b_k)` pairs in increasing `k`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &AxialElement)> + '_ {
        let k0 = -(self.half_range as i64);
        self.samples
            .iter()
            .enumerate()
            .map(move |(i, b)| (k0 + i as i64, b))
    }

    /// Estimate of `Σ_{|k|>K} |b_k|` from the `|t|^{-Sc q - 1}` envelope.
    pub fn tail_estimate(&self) -> f64 {
        self.tail_estimate
    }

    pub fn sum(&self) -> AxialElement {
        self.samples
            .iter()
            .fold(AxialElement::zero(self.order.axis()), |acc, b| acc + *b)
    }

    /// `Σ_k b_k z^k`.
    pub fn eval(&self, z: Complex64) -> AxialElement {
        let k0 = -(self.half_range as i32);
        self.samples
            .iter()
            .enumerate()
            .fold(AxialElement::zero(self.order.axis()), |acc, (i, b)| {
                acc + *b * z.powi(k0 + i as i32)
            })
    }

    /// The symbol at `z = e^{-iξ}`, which by Poisson summation is
    /// `Σ_k B̂_q(ξ + 2πk)`.
    pub fn at_frequency(&self, xi_val: f64) -> AxialElement {
        self.eval(Complex64::from_polar(1.0, -xi_val))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::Preset;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn xi_values() {
        assert_eq!(xi(0.0), c(1.0, 0.0));
        assert!((xi(PI) - c(0.0, -2.0 / PI)).norm() < 1e-16);
        assert!(xi(2.0 * PI).norm() < 1e-16);
        for x in [-7.0, -1e-9, 1e-9, 0.3, 3.0, 11.0] {
            let direct = (c(1.0, 0.0) - Complex64::from_polar(1.0, -x)) / c(0.0, x);
            assert!(
                (xi(x) - direct).norm() < 1e-7 * direct.norm().max(1e-300),
                "x = {x}"
            );
            let num = xi_numerator(x) / x;
            assert!((num - xi(x)).norm() < 1e-15);
        }
    }

    #[test]
    fn hat_at_zero_and_at_periods() {
        let q = Preset::Q1.order();
        assert_eq!(bspline_hat(&q, 0.0).unwrap(), AxialElement::one(q.axis()));
        for k in [-3.0, -1.0, 1.0, 2.0] {
            assert!(bspline_hat(&q, 2.0 * PI * k).unwrap().norm() < 1e-60);
        }
    }

    #[test]
    fn hat_of_real_order_two() {
        let q = QuaternionicOrder::real(2.0).unwrap();
        let b = bspline_hat(&q, PI).unwrap();
        assert!((b.s - c(-4.0 / (PI * PI), 0.0)).norm() < 1e-15);
        assert_eq!(b.u, c(0.0, 0.0));
    }

    #[test]
    fn hat_matches_closed_form() {
        let q = Preset::Q1.order();
        let x = xi(1.0);
        let l = crate::quat::principal_ln(x);
        let xa = (q.sc() * l).exp();
        let b = bspline_hat(&q, 1.0).unwrap();
        assert!((b.s - xa * (q.vnorm() * l).cos()).norm() < 1e-15);
        assert!((b.u - xa * (q.vnorm() * l).sin()).norm() < 1e-15);
    }

    #[test]
    fn hat_requires_order_above_one() {
        assert!(bspline_hat(&QuaternionicOrder::real(1.0).unwrap(), 0.5).is_err());
        assert!(bspline_time(&QuaternionicOrder::real(0.8).unwrap(), 0.5).is_err());
    }

    #[test]
    fn linear_hat_function() {
        let q = QuaternionicOrder::real(2.0).unwrap();
        for (t, expect) in [
            (-0.5, 0.0),
            (0.0, 0.0),
            (0.5, 0.5),
            (1.0, 1.0),
            (1.25, 0.75),
            (2.0, 0.0),
            (3.5, 0.0),
        ] {
            let b = bspline_time(&q, t).unwrap();
            assert!((b.s.re - expect).abs() < 1e-14, "t = {t}");
        }
    }

    #[test]
    fn roundoff_grows_with_t() {
        let q = Preset::Q1.order();
        let near = bspline_time_roundoff(&q, 5.0).unwrap();
        let far = bspline_time_roundoff(&q, 60.0).unwrap();
        assert!(near < 1e-13 && far > 1e3 * near);
        // noise at t = 60 sits within a small multiple of the estimate
        assert!(bspline_time(&q, 60.0).unwrap().norm() < 100.0 * far);
    }

    #[test]
    fn binomials() {
        let q = Preset::Q1.order();
        assert_eq!(quat_binomial(&q, 0), RealQuaternion::ONE);
        assert!((quat_binomial(&q, 1) - q.quaternion()).norm() < 1e-15);
        // q(q-1)(q-2)/6 by Hamilton products
        let qq = q.quaternion();
        let one = RealQuaternion::ONE;
        let direct = qq * (qq - one) * (qq - one.scale(2.0)) / 6.0;
        assert!((quat_binomial(&q, 3) - direct).norm() < 1e-13);
    }

    #[test]
    fn time_routes_agree() {
        for q in [Preset::Q1.order(), Preset::Q2.order()] {
            for t in [0.3, 1.0, 1.7, 2.5, 6.1, 13.4] {
                let a = bspline_time(&q, t).unwrap();
                let b = bspline_time_shadow(&q, t).unwrap();
                assert!((a - b).norm() < 1e-10, "t = {t}");
                assert!(a.imag_residual() < 1e-12);
            }
        }
    }

    #[test]
    fn integer_samples_of_hat() {
        let s = integer_samples(&QuaternionicOrder::real(2.0).unwrap(), 5).unwrap();
        for (k, b) in s.iter() {
            let expect = if k == 1 { 1.0 } else { 0.0 };
            assert!((b.s.re - expect).abs() < 1e-14);
        }
        // F_2(ξ) = e^{-iξ}
        let f = s.at_frequency(0.7);
        assert!((f.s - Complex64::from_polar(1.0, -0.7)).norm() < 1e-14);
    }

    #[test]
    fn symbol_sums_to_one() {
        let s = integer_samples(&Preset::Q1.order(), 20).unwrap();
        assert!((s.sum() - AxialElement::one(s.order().axis())).norm() < 1e-8);
        assert!(s.tail_estimate() < 1e-7);
        let s = integer_samples(&Preset::Q2.order(), 60).unwrap();
        assert!((s.sum() - AxialElement::one(s.order().axis())).norm() < 2.0 * s.tail_estimate());
    }
}
