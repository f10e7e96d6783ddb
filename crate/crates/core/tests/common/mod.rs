//! Independent reference computations. Nothing here calls the routines under
//! test except for plain data types.

#![allow(dead_code)]

use std::f64::consts::PI;

use num_complex::Complex64;
use qspline::{AxialElement, QuaternionicOrder};

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `Γ(z) = ∫ exp(z x - e^x) dx` (substituting `t = e^x`) by the trapezoid
/// rule, which converges geometrically for this analytic integrand.
pub fn gamma_quadrature(z: Complex64) -> Complex64 {
    assert!(z.re > 0.0);
    let lo = -(45.0 / z.re).max(45.0);
    let hi = 6.5;
    let h = 2e-3;
    let n = ((hi - lo) / h).ceil() as usize;
    let mut sum = c(0.0, 0.0);
    for i in 0..=n {
        let x = lo + i as f64 * h;
        let w = if i == 0 || i == n { 0.5 } else { 1.0 };
        sum += w * (z * x - x.exp()).exp();
    }
    sum * h
}

/// `Γ(q) = ∫ e^{ax - e^x} [cos(bx) + μ sin(bx)] dx` as `(scalar, μ-part)`.
pub fn gamma_quat_quadrature(a: f64, b: f64) -> (f64, f64) {
    let lo = -(45.0 / a).max(45.0);
    let hi = 6.5;
    let h = 2e-3;
    let n = ((hi - lo) / h).ceil() as usize;
    let (mut s, mut u) = (0.0, 0.0);
    for i in 0..=n {
        let x = lo + i as f64 * h;
        let w = if i == 0 || i == n { 0.5 } else { 1.0 };
        let e = (a * x - x.exp()).exp();
        s += w * e * (b * x).cos();
        u += w * e * (b * x).sin();
    }
    (s * h, u * h)
}

/// `Σ_{k<n} (a+k)^{-s}` plus the integral tail and its first two
/// trapezoid corrections.
pub fn hurwitz_brute(s: Complex64, a: f64, n: usize) -> Complex64 {
    let mut sum = c(0.0, 0.0);
    for k in (0..n).rev() {
        sum += (-s * (a + k as f64).ln()).exp();
    }
    let x = a + n as f64;
    let xs = (-s * x.ln()).exp();
    sum + xs * x / (s - 1.0) + 0.5 * xs + s * xs / (12.0 * x)
}

/// `Σ_{k<n} (a+k)^{-q}` summed in real quaternion form
/// `(a+k)^{-σ} [cos(b log(a+k)) - μ sin(b log(a+k))]`, tail through the
/// shadows.
pub fn hurwitz_quat_brute(q: &QuaternionicOrder, a: f64, n: usize) -> (Complex64, Complex64) {
    let (sigma, b) = (q.sc(), q.vnorm());
    let (mut s, mut u) = (0.0, 0.0);
    for k in (0..n).rev() {
        let l = (a + k as f64).ln();
        let m = (-sigma * l).exp();
        s += m * (b * l).cos();
        u -= m * (b * l).sin();
    }
    let w = c(sigma, b);
    let tail = |s: Complex64| {
        let x = a + n as f64;
        let xs = (-s * x.ln()).exp();
        xs * x / (s - 1.0) + 0.5 * xs + s * xs / (12.0 * x)
    };
    // tail(w̄) on χ+, tail(w) on χ-
    let (tp, tm) = (tail(w.conj()), tail(w));
    (
        c(s, 0.0) + 0.5 * (tp + tm),
        c(u, 0.0) + 0.5 * c(0.0, 1.0) * (tp - tm),
    )
}

/// `e^{iπq} = e^{iπa} [cosh(πb) + i μ sinh(πb)]` as `(s, u)`.
pub fn exp_i_pi_q(q: &QuaternionicOrder) -> (Complex64, Complex64) {
    let e = c(0.0, PI * q.sc()).exp();
    let b = PI * q.vnorm();
    (e * b.cosh(), e * c(0.0, b.sinh()))
}

/// Product in the axial algebra, written out.
pub fn axial_mul(x: (Complex64, Complex64), y: (Complex64, Complex64)) -> (Complex64, Complex64) {
    (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0)
}

/// `∫_0^T B(t) e^{-iξt} dt` by the trapezoid rule with `h = 1/p`.
pub fn fourier_quadrature(values: &[(f64, AxialElement)], xi: f64) -> (Complex64, Complex64) {
    let h = values[1].0 - values[0].0;
    let n = values.len();
    let (mut s, mut u) = (c(0.0, 0.0), c(0.0, 0.0));
    for (i, (t, b)) in values.iter().enumerate() {
        let w = if i == 0 || i + 1 == n { 0.5 } else { 1.0 };
        let e = Complex64::from_polar(w * h, -xi * t);
        s += b.s * e;
        u += b.u * e;
    }
    (s, u)
}

/// Classical centred B-spline of integer order `n` at `t`, from the
/// truncated-power formula with integer exponents (no cancellation issue
/// at small `t`).
pub fn cardinal_bspline(n: u32, t: f64) -> f64 {
    let mut s = 0.0;
    let mut binom = 1.0;
    for k in 0..=n {
        let x = t - k as f64;
        if x > 0.0 {
            s += if k % 2 == 0 { binom } else { -binom } * x.powi(n as i32 - 1);
        }
        binom *= (n - k) as f64 / (k + 1) as f64;
    }
    s / (1..n).map(|i| i as f64).product::<f64>()
}
