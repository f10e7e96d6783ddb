use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::complex::ComplexQuaternion;
use super::real::RealQuaternion;
use crate::error::{Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Component tolerance for deciding that two axes coincide.
pub const AXIS_TOLERANCE: f64 = 1e-12;

/// Unit pure quaternion `μ`, `μ² = -1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis([f64; 3]);

impl Axis {
    /// `e1`, used when the vector part of an order vanishes.
    pub const CANONICAL: Axis = Axis([1.0, 0.0, 0.0]);

    /// Normalizes `v`; `None` if `v` is zero or not finite.
    pub fn new(v: [f64; 3]) -> Option<Self> {
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if n == 0.0 || !n.is_finite() {
            return None;
        }
        Some(Axis([v[0] / n, v[1] / n, v[2] / n]))
    }

    pub fn components(&self) -> [f64; 3] {
        self.0
    }

    pub fn as_quaternion(&self) -> RealQuaternion {
        RealQuaternion::pure(self.0)
    }

    pub fn approx_eq(&self, other: &Axis) -> bool {
        self.0
            .iter()
            .zip(&other.0)
            .all(|(x, y)| (x - y).abs() <= AXIS_TOLERANCE)
    }

    /// Projector `χ±(μ) = (1 ± iμ)/2`.
    pub fn chi(&self, sign: ChiSign) -> ComplexQuaternion {
        let h = match sign {
            ChiSign::Plus => 0.5 * I,
            ChiSign::Minus => -0.5 * I,
        };
        ComplexQuaternion::new(
            Complex64::new(0.5, 0.0),
            h * self.0[0],
            h * self.0[1],
            h * self.0[2],
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChiSign {
    Plus,
    Minus,
}

/// Element `s + μ u` of the commutative subalgebra of `H_C` spanned by
/// `1` and a fixed axis `μ`, with `s, u ∈ C`.
///
/// The map `s + μ u ↦ (s - i u, s + i u)` is an algebra isomorphism onto
/// `C ⊕ C` with componentwise product; the two entries are the coefficients
/// of the idempotents `χ+` and `χ-`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxialElement {
    pub axis: Axis,
    pub s: Complex64,
    pub u: Complex64,
}

impl AxialElement {
    pub fn new(axis: Axis, s: Complex64, u: Complex64) -> Self {
        Self { axis, s, u }
    }

    pub fn scalar(axis: Axis, s: Complex64) -> Self {
        Self::new(axis, s, Complex64::new(0.0, 0.0))
    }

    pub fn zero(axis: Axis) -> Self {
        Self::scalar(axis, Complex64::new(0.0, 0.0))
    }

    pub fn one(axis: Axis) -> Self {
        Self::scalar(axis, Complex64::new(1.0, 0.0))
    }

    /// Real quaternion `a + b μ`.
    pub fn real(axis: Axis, a: f64, b: f64) -> Self {
        Self::new(axis, a.into(), b.into())
    }

    /// Builds `χ+ plus + χ- minus`.
    pub fn from_chi(axis: Axis, plus: Complex64, minus: Complex64) -> Self {
        Self::new(axis, 0.5 * (plus + minus), 0.5 * I * (plus - minus))
    }

    /// Coordinates `(plus, minus)` with `self = χ+ plus + χ- minus`.
    pub fn chi(&self) -> (Complex64, Complex64) {
        (self.s - I * self.u, self.s + I * self.u)
    }

    /// Modulus of the embedded complex quaternion, `sqrt(|s|² + |u|²)`.
    pub fn norm(&self) -> f64 {
        (self.s.norm_sqr() + self.u.norm_sqr()).sqrt()
    }

    pub fn to_complex_quaternion(&self) -> ComplexQuaternion {
        let m = self.axis.0;
        ComplexQuaternion::new(self.s, self.u * m[0], self.u * m[1], self.u * m[2])
    }

    /// Drops the imaginary parts of both slots: `Re s + μ Re u`.
    pub fn to_real_quaternion(&self) -> RealQuaternion {
        let m = self.axis.0;
        let u = self.u.re;
        RealQuaternion::new(self.s.re, [u * m[0], u * m[1], u * m[2]])
    }

    /// Largest imaginary part across both slots; zero for real quaternions.
    pub fn imag_residual(&self) -> f64 {
        self.s.im.abs().max(self.u.im.abs())
    }

    pub fn scale(&self, k: Complex64) -> Self {
        Self::new(self.axis, self.s * k, self.u * k)
    }

    /// `s² + u²`, the quadratic form that decides invertibility.
    pub fn quadratic_form(&self) -> Complex64 {
        self.s * self.s + self.u * self.u
    }

    /// `conj(s) - μ conj(u)`, the restriction of `star` to the subalgebra.
    pub fn star(&self) -> Self {
        Self::new(self.axis, self.s.conj(), -self.u.conj())
    }

    /// Inverse through the χ± coordinates; fails when either coordinate is
    /// below `1e-14` in modulus.
    pub fn inverse(&self) -> Result<Self> {
        let (p, m) = self.chi();
        if p.norm() < 1e-14 || m.norm() < 1e-14 {
            return Err(Error::NonInvertible(p * m));
        }
        Ok(Self::from_chi(self.axis, p.inv(), m.inv()))
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        self.same_axis(o)?;
        Ok(Self::new(
            self.axis,
            self.s * o.s - self.u * o.u,
            self.s * o.u + self.u * o.s,
        ))
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        self.same_axis(o)?;
        Ok(Self::new(self.axis, self.s + o.s, self.u + o.u))
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        self.checked_mul(&o.inverse()?)
    }

    fn same_axis(&self, o: &Self) -> Result<()> {
        if self.axis == o.axis || self.axis.approx_eq(&o.axis) {
            Ok(())
        } else {
            Err(Error::AxisMismatch)
        }
    }

    pub fn is_finite(&self) -> bool {
        self.s.is_finite() && self.u.is_finite()
    }
}

impl Add for AxialElement {
    type Output = Self;
    /// Panics on axis mismatch; use [`AxialElement::checked_add`] otherwise.
    fn add(self, o: Self) -> Self {
        self.checked_add(&o)
            .expect("axial operands on different axes")
    }
}

impl Sub for AxialElement {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for AxialElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.axis, -self.s, -self.u)
    }
}

impl Mul for AxialElement {
    type Output = Self;
    /// Panics on axis mismatch; use [`AxialElement::checked_mul`] otherwise.
    fn mul(self, o: Self) -> Self {
        self.checked_mul(&o)
            .expect("axial operands on different axes")
    }
}

impl Mul<Complex64> for AxialElement {
    type Output = Self;
    fn mul(self, k: Complex64) -> Self {
        self.scale(k)
    }
}

impl Mul<f64> for AxialElement {
    type Output = Self;
    fn mul(self, k: f64) -> Self {
        self.scale(k.into())
    }
}
