use std::f64::consts::PI;

use num_complex::Complex64;

use crate::bspline::{xi, xi_numerator};
use crate::error::{Error, Result};
use crate::quat::{cpow, AxialElement, QuaternionicOrder};
use crate::special::{hurwitz_zeta_complex, hurwitz_zeta_quat};

const TWO_PI: f64 = 2.0 * PI;

/// How the periodization `F_q(ξ) = Σ_k B̂_q(ξ + 2πk)` is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FilterMethod {
    /// `Σ_{|k|≤m}`, error at most [`tail_bound`].
    Truncated { m: usize },
    /// Closed form through Hurwitz zeta values; exact up to rounding.
    #[default]
    Zeta,
}

/// `2 / (π^a (a-1) M^{a-1})`, `a = Sc q`: bound on `|F_q - F_q^M|`.
pub fn tail_bound(q: &QuaternionicOrder, m: usize) -> f64 {
    let a = q.sc();
    2.0 / (PI.powf(a) * (a - 1.0) * (m as f64).powf(a - 1.0))
}

fn check_truncation(q: &QuaternionicOrder, m: usize) -> Result<()> {
    q.require_sc_above(1.0, "filter")?;
    if m == 0 {
        return Err(Error::domain("filter_truncated", "M must be at least 1"));
    }
    Ok(())
}

/// `Ξ(ξ + 2πk)` for `|k| <= m`, ordered from the outermost pair inwards
/// so that sums accumulate small terms first.
fn shifted_xi(xi_val: f64, m: usize) -> impl Iterator<Item = Complex64> {
    let num = xi_numerator(xi_val);
    let at = move |k: i64| {
        let d = xi_val + TWO_PI * k as f64;
        if d == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            num / d
        }
    };
    (1..=m as i64)
        .rev()
        .flat_map(move |k| [at(k), at(-k)])
        .chain(std::iter::once(at(0)))
}

/// `F_q^M(ξ) = Σ_{|k|≤M} B̂_q(ξ + 2πk)`.
pub fn filter_truncated(q: &QuaternionicOrder, xi_val: f64, m: usize) -> Result<AxialElement> {
    check_truncation(q, m)?;
    let mut sum = AxialElement::zero(q.axis());
    for z in shifted_xi(xi_val, m) {
        sum = sum + q.pow_of(z)?;
    }
    Ok(sum)
}

/// `Σ_{|k|≤M} B̂_w(ξ + 2πk)` for complex `w`.
pub fn filter_truncated_complex(w: Complex64, xi_val: f64, m: usize) -> Result<Complex64> {
    shifted_xi(xi_val, m).map(|z| cpow(z, w)).sum()
}

/// `F_q(ξ)` through Hurwitz zeta values.
///
/// With `α = ξ/2π` reduced to `[0, 1)` and `c = (1 - e^{-iξ})/i`,
///
/// ```text
/// F_q(ξ) = Ξ(ξ)^q + Ξ(ξ-2π)^q + c^q (2π)^{-q} [ζ(q, 1+α) + e^{iπq} ζ(q, 2-α)]
/// ```
///
/// which is `c^q (2π)^{-q} [ζ(q, α) + e^{iπq} ζ(q, 1-α)]` with the two
/// dominant terms split off, so it stays finite as `ξ → 0, 2π`.
pub fn filter_zeta_form(q: &QuaternionicOrder, xi_val: f64) -> Result<AxialElement> {
    q.require_sc_above(1.0, "filter_zeta_form")?;
    let (x, alpha) = reduce(xi_val)?;
    let c = xi_numerator(x);
    let near = q.pow_of(xi(x))? + q.pow_of(xi(x - TWO_PI))?;
    if c == Complex64::new(0.0, 0.0) {
        return Ok(near);
    }
    let phase = q.exp_scaled(Complex64::new(0.0, PI));
    let d = hurwitz_zeta_quat(q, 1.0 + alpha)? + phase * hurwitz_zeta_quat(q, 2.0 - alpha)?;
    Ok(near + q.pow_of(c)? * q.pow_neg_of(TWO_PI.into())? * d)
}

/// Complex counterpart of [`filter_zeta_form`].
pub fn filter_zeta_form_complex(w: Complex64, xi_val: f64) -> Result<Complex64> {
    if !(w.re > 1.0) {
        return Err(Error::domain(
            "filter_zeta_form_complex",
            "Re w must exceed 1",
        ));
    }
    let (x, alpha) = reduce(xi_val)?;
    let c = xi_numerator(x);
    let near = cpow(xi(x), w)? + cpow(xi(x - TWO_PI), w)?;
    if c == Complex64::new(0.0, 0.0) {
        return Ok(near);
    }
    let phase = (Complex64::new(0.0, PI) * w).exp();
    let d = hurwitz_zeta_complex(w, 1.0 + alpha)? + phase * hurwitz_zeta_complex(w, 2.0 - alpha)?;
    Ok(near + cpow(c, w)? * cpow(TWO_PI.into(), -w)? * d)
}

fn reduce(xi_val: f64) -> Result<(f64, f64)> {
    if !xi_val.is_finite() {
        return Err(Error::domain("filter", "non-finite frequency"));
    }
    let x = xi_val.rem_euclid(TWO_PI);
    let x = if x >= TWO_PI { 0.0 } else { x };
    Ok((x, x / TWO_PI))
}

/// `F_q(ξ)` by the chosen method.
pub fn filter(q: &QuaternionicOrder, xi_val: f64, method: FilterMethod) -> Result<AxialElement> {
    match method {
        FilterMethod::Truncated { m } => filter_truncated(q, xi_val, m),
        FilterMethod::Zeta => filter_zeta_form(q, xi_val),
    }
}

/// `F_w(ξ)` by the chosen method.
pub fn filter_complex(w: Complex64, xi_val: f64, method: FilterMethod) -> Result<Complex64> {
    match method {
        FilterMethod::Truncated { m } => {
            if !(w.re > 1.0) || m == 0 {
                return Err(Error::domain("filter_complex", "need Re w > 1 and M >= 1"));
            }
            filter_truncated_complex(w, xi_val, m)
        }
        FilterMethod::Zeta => filter_zeta_form_complex(w, xi_val),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::Preset;

    #[test]
    fn value_at_zero_is_one() {
        for q in [Preset::Q1.order(), Preset::Q2.order()] {
            let one = AxialElement::one(q.axis());
            assert!((filter_truncated(&q, 0.0, 64).unwrap() - one).norm() < 1e-15);
            assert!((filter_zeta_form(&q, 0.0).unwrap() - one).norm() < 1e-15);
            assert!((filter_zeta_form(&q, TWO_PI).unwrap() - one).norm() < 1e-15);
        }
    }

    #[test]
    fn periodic_in_the_limit() {
        let q = Preset::Q1.order();
        let a = filter_zeta_form(&q, 1.3).unwrap();
        let b = filter_zeta_form(&q, 1.3 - 3.0 * TWO_PI).unwrap();
        assert!((a - b).norm() < 1e-12);
    }

    #[test]
    fn zeta_form_matches_long_truncation() {
        let q = Preset::Q1.order();
        let z = filter_zeta_form(&q, PI).unwrap();
        let t = filter_truncated(&q, PI, 10_000).unwrap();
        assert!((z - t).norm() < 1e-6);
    }

    #[test]
    fn zeta_form_near_the_origin() {
        let q = Preset::Q2.order();
        for x in [1e-3, 1e-9, TWO_PI - 1e-7] {
            let z = filter_zeta_form(&q, x).unwrap();
            let t = filter_truncated(&q, x, 4000).unwrap();
            assert!((z - t).norm() < 2.0 * tail_bound(&q, 4000), "x = {x}");
        }
    }

    #[test]
    fn classical_order_two() {
        // F_2(ξ) = e^{-iξ}: the hat function has b_1 = 1 only
        let q = QuaternionicOrder::real(2.0).unwrap();
        for x in [0.4, PI, 5.0] {
            let z = filter_zeta_form(&q, x).unwrap();
            assert!((z.s - Complex64::from_polar(1.0, -x)).norm() < 1e-13);
        }
    }

    #[test]
    fn complex_shadow_is_chi_minus() {
        let q = Preset::Q2.order();
        let f = filter_zeta_form(&q, 2.0).unwrap();
        let (plus, minus) = f.chi();
        assert!((minus - filter_zeta_form_complex(q.w(), 2.0).unwrap()).norm() < 1e-13);
        assert!((plus - filter_zeta_form_complex(q.w().conj(), 2.0).unwrap()).norm() < 1e-13);
    }

    #[test]
    fn tail_bound_covers_truncation() {
        let q = Preset::Q2.order();
        for m in [8, 32, 128] {
            let t = filter_truncated(&q, 2.2, m).unwrap();
            let z = filter_zeta_form(&q, 2.2).unwrap();
            assert!((t - z).norm() <= tail_bound(&q, m));
        }
    }
}
