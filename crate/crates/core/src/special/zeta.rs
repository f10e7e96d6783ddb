use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quat::{AxialElement, QuaternionicOrder};

/// Number of terms summed directly before the Euler–Maclaurin tail.
pub const ZETA_HEAD: usize = 32;

// B_{2j} / (2j)!, j = 1..=8
const BERNOULLI_OVER_FACTORIAL: [f64; 8] = [
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40_320.0,
    5.0 / 66.0 / 3_628_800.0,
    -691.0 / 2730.0 / 479_001_600.0,
    7.0 / 6.0 / 87_178_291_200.0,
    -3617.0 / 510.0 / 20_922_789_888_000.0,
];

fn real_pow(base: f64, s: Complex64) -> Complex64 {
    // base > 0
    (-s * base.ln()).exp()
}

/// Hurwitz zeta `ζ(s, a) = Σ_{k≥0} (a+k)^{-s}` for `Re s > 1`, `a > 0`.
///
/// Head of [`ZETA_HEAD`] terms, integral tail, and eight Bernoulli
/// corrections.
pub fn hurwitz_zeta_complex(s: Complex64, a: f64) -> Result<Complex64> {
    if !(s.re > 1.0) || !s.is_finite() {
        return Err(Error::domain(
            "hurwitz_zeta",
            format!("Re s = {} must exceed 1", s.re),
        ));
    }
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::domain(
            "hurwitz_zeta",
            format!("a = {a} must be positive"),
        ));
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..ZETA_HEAD {
        sum += real_pow(a + k as f64, s);
    }
    let x = a + ZETA_HEAD as f64;
    let x_s = real_pow(x, s);
    sum += x_s * x / (s - 1.0) + 0.5 * x_s;

    // rising factorial s (s+1) ... (s+2j-2), times x^{-s-2j+1}
    let mut rising = s;
    let mut term = x_s / x;
    let x2 = x * x;
    for (j, b) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        sum += *b * rising * term;
        let j = j as f64;
        rising *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
        term /= x2;
    }
    Ok(sum)
}

/// Quaternionic Hurwitz zeta `ζ(q, a) = Σ_{k≥0} (a+k)^{-q}`.
///
/// Diagonal in the χ± coordinates: `ζ(q, a) = χ+ ζ(w̄, a) + χ- ζ(w, a)`.
pub fn hurwitz_zeta_quat(q: &QuaternionicOrder, a: f64) -> Result<AxialElement> {
    q.require_sc_above(1.0, "hurwitz_zeta_quat")?;
    let w = q.w();
    let plus = hurwitz_zeta_complex(w.conj(), a)?;
    let minus = hurwitz_zeta_complex(w, a)?;
    Ok(AxialElement::from_chi(q.axis(), plus, minus))
}

/// `ζ(w, α) + e^{iπw} ζ(w, 1-α)`, the complex bilateral sum
/// `Σ_{k∈Z} (k+α)^{-w}` with negative bases taken at `arg = -π`.
pub fn zeta_denominator_complex(w: Complex64, alpha: f64) -> Result<Complex64> {
    check_alpha(alpha)?;
    let phase = (Complex64::new(0.0, PI) * w).exp();
    Ok(hurwitz_zeta_complex(w, alpha)? + phase * hurwitz_zeta_complex(w, 1.0 - alpha)?)
}

/// `D(q, α) = ζ(q, α) + e^{iπq} ζ(q, 1-α)` for `0 < α < 1`.
///
/// This is the bilateral sum `Σ_{k∈Z} (k+α)^{-q}` in which the terms with
/// `k + α < 0` use `arg = -π`; with that factor
/// `((1-e^{-iξ})/i)^q (2π)^{-q} D(q, ξ/2π)` is exactly the periodized
/// filter `Σ_k B̂_q(ξ + 2πk)`. `e^{iπq}` is the principal value.
pub fn zeta_denominator(q: &QuaternionicOrder, alpha: f64) -> Result<AxialElement> {
    check_alpha(alpha)?;
    let head = hurwitz_zeta_quat(q, alpha)?;
    let tail = hurwitz_zeta_quat(q, 1.0 - alpha)?;
    Ok(head + q.exp_scaled(Complex64::new(0.0, PI)) * tail)
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(
            "zeta_denominator",
            format!("alpha = {alpha} not in (0, 1)"),
        ))
    }
}
