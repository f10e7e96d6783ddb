use std::f64::consts::PI;

use num_complex::Complex64;

use super::filter::{filter, FilterMethod};
use crate::bspline::xi;
use crate::error::{Error, Result};
use crate::quat::{AxialElement, QuaternionicOrder};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Below this `|1 - e^{-iξ}|` the first derivative uses its value on `2πZ`.
const SINGULAR: f64 = 1e-8;
/// Below this `|1 - e^{-iξ}|` the second derivative is summed term by term.
const SINGULAR_SECOND: f64 = 1e-3;
/// Truncation used for the term-by-term second derivative near `2πZ`.
const NEAR_ORIGIN_TERMS: usize = 2048;

/// `(Ξ, Ξ', Ξ'')` at `x`; power series for small `|x|`.
pub fn xi_derivatives(x: f64) -> (Complex64, Complex64, Complex64) {
    if x.abs() < 0.5 {
        // Ξ(x) = Σ (-ix)^n / (n+1)!
        let mut d0 = Complex64::new(0.0, 0.0);
        let mut d1 = Complex64::new(0.0, 0.0);
        let mut d2 = Complex64::new(0.0, 0.0);
        let mut coef = Complex64::new(1.0, 0.0); // (-i)^n / (n+1)!
        for n in 0..24 {
            let nf = n as f64;
            d0 += coef * x.powi(n);
            if n >= 1 {
                d1 += coef * nf * x.powi(n - 1);
            }
            if n >= 2 {
                d2 += coef * nf * (nf - 1.0) * x.powi(n - 2);
            }
            coef *= -I / (nf + 2.0);
        }
        return (d0, d1, d2);
    }
    let e = Complex64::from_polar(1.0, -x);
    let d0 = xi(x);
    let d1 = (e - d0) / x;
    let d2 = (-I * e - 2.0 * d1) / x;
    (d0, d1, d2)
}

/// `(B̂_q, B̂_q', B̂_q'')` at `ξ` by the chain rule. Where `Ξ = 0` the second
/// derivative needs `Sc q > 2`.
pub fn bspline_hat_derivatives(
    q: &QuaternionicOrder,
    xi_val: f64,
) -> Result<(AxialElement, AxialElement, AxialElement)> {
    q.require_sc_above(1.0, "bspline_hat_derivatives")?;
    let (x0, x1, x2) = xi_derivatives(xi_val);
    let qa = q.as_axial();
    let one = AxialElement::one(q.axis());
    let p0 = q.pow_of(x0)?;
    let p1 = q.shifted(-1.0).pow_of(x0)?;
    let p2 = q.shifted(-2.0).pow_of(x0).map_err(|_| {
        Error::domain(
            "bspline_hat_derivatives",
            "second derivative at a zero of Ξ needs Sc q > 2",
        )
    })?;
    let d1 = qa * p1 * x1;
    let d2 = qa * (qa - one) * p2 * (x1 * x1) + qa * p1 * x2;
    Ok((p0, d1, d2))
}

/// `(F_q^M, F_q^M', F_q^M'')`: exact derivatives of the truncated filter.
pub fn filter_derivatives_truncated(
    q: &QuaternionicOrder,
    xi_val: f64,
    m: usize,
) -> Result<(AxialElement, AxialElement, AxialElement)> {
    let zero = AxialElement::zero(q.axis());
    let mut acc = (zero, zero, zero);
    for k in (1..=m as i64).rev().flat_map(|k| [k, -k]).chain([0]) {
        let (b0, b1, b2) = bspline_hat_derivatives(q, xi_val + 2.0 * PI * k as f64)?;
        acc = (acc.0 + b0, acc.1 + b1, acc.2 + b2);
    }
    Ok(acc)
}

/// `F_q'(ξ) = iq (1 - e^{-iξ})^{-1} [e^{-iξ} F_q - F_{q+1}]`, and `-iq/2`
/// on `2πZ`.
pub fn filter_derivative(
    q: &QuaternionicOrder,
    xi_val: f64,
    method: FilterMethod,
) -> Result<AxialElement> {
    q.require_sc_above(1.0, "filter_derivative")?;
    let iq = q.as_axial() * I;
    let e = Complex64::from_polar(1.0, -xi_val);
    let one_minus_e = 1.0 - e;
    if one_minus_e.norm() < SINGULAR {
        return Ok(iq * -0.5);
    }
    let g = filter(q, xi_val, method)? * e - filter(&q.shifted(1.0), xi_val, method)?;
    Ok(iq * g * one_minus_e.inv())
}

/// `F_q''`, differentiating the closed form of [`filter_derivative`]:
///
/// ```text
/// F_q'' = iq [G' (1 - e) - i e G] / (1 - e)²,   e = e^{-iξ}
/// G = e F_q - F_{q+1},   G' = -i e F_q + e F_q' - F_{q+1}'
/// ```
///
/// Within `1e-3` of `2πZ`, where the quotient loses accuracy, the filter is
/// differentiated term by term; at `2πZ` itself `F_q'' = -q/12 - q²/4`,
/// which needs `Sc q > 2`.
pub fn filter_second_derivative(
    q: &QuaternionicOrder,
    xi_val: f64,
    method: FilterMethod,
) -> Result<AxialElement> {
    q.require_sc_above(1.0, "filter_second_derivative")?;
    let e = Complex64::from_polar(1.0, -xi_val);
    let one_minus_e = 1.0 - e;
    if one_minus_e.norm() < SINGULAR_SECOND {
        let k = (xi_val / (2.0 * PI)).round();
        let local = xi_val - 2.0 * PI * k;
        if local == 0.0 {
            q.require_sc_above(2.0, "filter_second_derivative")?;
            let qa = q.as_axial();
            return Ok(qa * (-1.0 / 12.0) - qa * qa * 0.25);
        }
        let m = match method {
            FilterMethod::Truncated { m } => m,
            FilterMethod::Zeta => NEAR_ORIGIN_TERMS,
        };
        return filter_derivatives_truncated(q, local, m).map(|d| d.2);
    }
    let q1 = q.shifted(1.0);
    let f0 = filter(q, xi_val, method)?;
    let f1 = filter(&q1, xi_val, method)?;
    let d0 = filter_derivative(q, xi_val, method)?;
    let d1 = filter_derivative(&q1, xi_val, method)?;
    let g = f0 * e - f1;
    let g_prime = f0 * (-I * e) + d0 * e - d1;
    let num = g_prime * one_minus_e - g * (I * e);
    Ok(q.as_axial() * I * num * (one_minus_e * one_minus_e).inv())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fundamental::filter::filter_truncated;
    use crate::quat::Preset;

    fn fd(f: impl Fn(f64) -> AxialElement, x: f64, h: f64) -> AxialElement {
        (f(x + h) - f(x - h)) * (0.5 / h)
    }

    #[test]
    fn xi_derivatives_agree_across_the_switch() {
        for x in [0.499_999, 0.500_001, -0.5] {
            let (a0, a1, a2) = xi_derivatives(x);
            let e = Complex64::from_polar(1.0, -x);
            let b1 = (e - a0) / x;
            let b2 = (-I * e - 2.0 * b1) / x;
            assert!((a0 - xi(x)).norm() < 1e-15);
            assert!((a1 - b1).norm() < 1e-14);
            assert!((a2 - b2).norm() < 1e-13);
        }
        let (_, d1, d2) = xi_derivatives(0.0);
        assert!((d1 - Complex64::new(0.0, -0.5)).norm() < 1e-16);
        assert!((d2 - Complex64::new(-1.0 / 3.0, 0.0)).norm() < 1e-16);
    }

    #[test]
    fn derivative_matches_finite_differences() {
        for q in [Preset::Q1.order(), Preset::Q2.order()] {
            let m = FilterMethod::Truncated { m: 64 };
            for x in [0.3, 1.7, PI, 4.4, 6.0] {
                let d = filter_derivative(&q, x, m).unwrap();
                let fdv = fd(|t| filter_truncated(&q, t, 64).unwrap(), x, 1e-5);
                assert!((d - fdv).norm() < 1e-5, "x = {x}");
            }
        }
    }

    #[test]
    fn derivative_on_the_lattice() {
        let q = Preset::Q1.order();
        let d = filter_derivative(&q, 0.0, FilterMethod::Zeta).unwrap();
        assert!((d - q.as_axial() * Complex64::new(0.0, -0.5)).norm() < 1e-15);
        let near = filter_derivative(&q, 1e-6, FilterMethod::Zeta).unwrap();
        assert!((near - d).norm() < 1e-4);
    }

    #[test]
    fn second_derivative_matches_finite_differences() {
        for q in [Preset::Q1.order(), Preset::Q2.order()] {
            let m = FilterMethod::Zeta;
            for x in [0.3, 1.7, PI, 5.9] {
                let d = filter_second_derivative(&q, x, m).unwrap();
                let fdv = fd(|t| filter_derivative(&q, t, m).unwrap(), x, 1e-5);
                assert!((d - fdv).norm() < 1e-5 * d.norm().max(1.0), "x = {x}");
            }
        }
    }

    #[test]
    fn second_derivative_at_origin() {
        let q = Preset::Q1.order();
        let at0 = filter_second_derivative(&q, 0.0, FilterMethod::Zeta).unwrap();
        let qa = q.as_axial();
        assert!((at0 - (qa * (-1.0 / 12.0) - qa * qa * 0.25)).norm() < 1e-12);
        let near = filter_second_derivative(&q, 1e-5, FilterMethod::Zeta).unwrap();
        assert!((near - at0).norm() < 1e-3);
        let fdv = fd(
            |t| filter_derivative(&q, t, FilterMethod::Zeta).unwrap(),
            0.0,
            1e-4,
        );
        assert!((fdv - at0).norm() < 1e-5);
        let q2 = QuaternionicOrder::real(1.5).unwrap();
        assert!(filter_second_derivative(&q2, 0.0, FilterMethod::Zeta).is_err());
    }

    #[test]
    fn truncated_derivatives_agree_with_closed_forms() {
        let q = Preset::Q2.order();
        for x in [0.7, 2.9] {
            let (_, d1, d2) = filter_derivatives_truncated(&q, x, 64).unwrap();
            let c1 = filter_derivative(&q, x, FilterMethod::Truncated { m: 64 }).unwrap();
            let c2 = filter_second_derivative(&q, x, FilterMethod::Zeta).unwrap();
            assert!((d1 - c1).norm() < 1e-3);
            assert!((d2 - c2).norm() < 1e-2);
        }
    }
}
