use num_complex::Complex64;

use super::axial::{AxialElement, Axis};
use super::order::QuaternionicOrder;
use super::real::RealQuaternion;
use crate::error::{Error, Result};

/// Principal logarithm with `-π < arg z <= π`.
///
/// Negative reals map to `arg = +π` regardless of the sign of a zero
/// imaginary part.
pub fn principal_ln(z: Complex64) -> Complex64 {
    // -0.0 + 0.0 == +0.0, so atan2 never returns -π here.
    let im = z.im + 0.0;
    Complex64::new(z.norm().ln(), im.atan2(z.re))
}

/// Complex power `z^w = exp(w log z)` on the principal branch; `0^w = 0`
/// for `Re w > 0`.
pub fn cpow(z: Complex64, w: Complex64) -> Result<Complex64> {
    if z == Complex64::new(0.0, 0.0) {
        return if w.re > 0.0 {
            Ok(Complex64::new(0.0, 0.0))
        } else {
            Err(Error::ZeroBase)
        };
    }
    Ok((w * principal_ln(z)).exp())
}

/// `z^{a + bμ} = z^a [cos(b log z) + μ sin(b log z)]`.
pub fn axial_power(z: Complex64, a: f64, b: f64, axis: Axis) -> Result<AxialElement> {
    if z == Complex64::new(0.0, 0.0) {
        return if a > 0.0 {
            Ok(AxialElement::zero(axis))
        } else {
            Err(Error::ZeroBase)
        };
    }
    let ln = principal_ln(z);
    let za = (a * ln).exp();
    let phase = b * ln;
    Ok(AxialElement::new(axis, za * phase.cos(), za * phase.sin()))
}

/// Quaternionic power `z^q` for a real quaternion exponent, on the axis of
/// `Ve q` (the canonical axis when `Ve q = 0`).
pub fn power_zq(z: Complex64, q: &RealQuaternion) -> Result<AxialElement> {
    let axis = Axis::new(q.v).unwrap_or(Axis::CANONICAL);
    axial_power(z, q.a, q.vector_norm(), axis)
}

impl QuaternionicOrder {
    /// `z^q`.
    pub fn pow_of(&self, z: Complex64) -> Result<AxialElement> {
        axial_power(z, self.sc(), self.vnorm(), self.axis())
    }

    /// `z^{-q}`, kept on the axis of `q`.
    pub fn pow_neg_of(&self, z: Complex64) -> Result<AxialElement> {
        axial_power(z, -self.sc(), -self.vnorm(), self.axis())
    }

    /// `e^{λ q}` in the axial subalgebra of `q`.
    pub fn exp_scaled(&self, lambda: Complex64) -> AxialElement {
        let ea = (lambda * self.sc()).exp();
        let phase = lambda * self.vnorm();
        AxialElement::new(self.axis(), ea * phase.cos(), ea * phase.sin())
    }
}
