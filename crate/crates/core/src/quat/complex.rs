use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::real::RealQuaternion;
use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Complex quaternion `z0 + z1 e1 + z2 e2 + z3 e3` with `zi ∈ C`.
///
/// The imaginary unit `i` of the coefficients commutes with the `ek`, so the
/// algebra contains zero divisors such as `1 + i e1`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexQuaternion {
    pub z: [Complex64; 4],
}

impl ComplexQuaternion {
    pub const ZERO: Self = Self { z: [ZERO; 4] };
    pub const ONE: Self = Self {
        z: [Complex64::new(1.0, 0.0), ZERO, ZERO, ZERO],
    };

    pub const fn new(z0: Complex64, z1: Complex64, z2: Complex64, z3: Complex64) -> Self {
        Self {
            z: [z0, z1, z2, z3],
        }
    }

    pub fn scalar(z0: Complex64) -> Self {
        Self::new(z0, ZERO, ZERO, ZERO)
    }

    pub fn scalar_part(&self) -> Complex64 {
        self.z[0]
    }

    /// `Σ |zi|²`.
    pub fn norm_sqr(&self) -> f64 {
        self.z.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, k: Complex64) -> Self {
        Self {
            z: self.z.map(|c| c * k),
        }
    }

    /// Clifford conjugate `z0 - Σ zi ei`, coefficients untouched.
    pub fn tilde(&self) -> Self {
        Self::new(self.z[0], -self.z[1], -self.z[2], -self.z[3])
    }

    /// `q*`: complex-conjugated coefficients on Clifford-conjugated units.
    /// Anti-involution: `(pq)* = q* p*`.
    pub fn star(&self) -> Self {
        Self::new(
            self.z[0].conj(),
            -self.z[1].conj(),
            -self.z[2].conj(),
            -self.z[3].conj(),
        )
    }

    /// `q q~ = z0² + Σ zi²`, a complex scalar.
    pub fn quadratic_form(&self) -> Complex64 {
        self.z.iter().map(|c| c * c).sum()
    }

    /// `q~ / (z0² + Σ zi²)`; fails on zero divisors.
    pub fn inverse(&self) -> Result<Self> {
        let d = self.quadratic_form();
        if d == ZERO {
            return Err(Error::NonInvertible(d));
        }
        Ok(self.tilde().scale(1.0 / d))
    }

    /// `e^{λ q}` for real `q`, closed form `e^{λa}(cos(λ|v|) + μ sin(λ|v|))`.
    pub fn exp_scaled(lambda: Complex64, q: &RealQuaternion) -> Self {
        let r = q.vector_norm();
        let ea = (lambda * q.a).exp();
        if r == 0.0 {
            return Self::scalar(ea);
        }
        let s = ea * (lambda * r).cos();
        let u = ea * (lambda * r).sin() / r;
        Self::new(s, u * q.v[0], u * q.v[1], u * q.v[2])
    }

    pub fn is_finite(&self) -> bool {
        self.z.iter().all(|c| c.is_finite())
    }
}

impl From<RealQuaternion> for ComplexQuaternion {
    fn from(q: RealQuaternion) -> Self {
        Self::new(q.a.into(), q.v[0].into(), q.v[1].into(), q.v[2].into())
    }
}

impl Add for ComplexQuaternion {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self {
            z: [
                self.z[0] + o.z[0],
                self.z[1] + o.z[1],
                self.z[2] + o.z[2],
                self.z[3] + o.z[3],
            ],
        }
    }
}

impl Sub for ComplexQuaternion {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for ComplexQuaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            z: self.z.map(|c| -c),
        }
    }
}

impl Mul for ComplexQuaternion {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let [a0, a1, a2, a3] = self.z;
        let [b0, b1, b2, b3] = o.z;
        Self::new(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 + a2 * b0 + a3 * b1 - a1 * b3,
            a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
        )
    }
}

impl Mul<Complex64> for ComplexQuaternion {
    type Output = Self;
    fn mul(self, k: Complex64) -> Self {
        self.scale(k)
    }
}
