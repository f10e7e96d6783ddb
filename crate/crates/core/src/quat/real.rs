use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Real quaternion `a + v1 e1 + v2 e2 + v3 e3`.
///
/// Units follow `e1 e2 = e3`, `e2 e3 = e1`, `e3 e1 = e2`, `ek² = -1`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RealQuaternion {
    pub a: f64,
    pub v: [f64; 3],
}

impl RealQuaternion {
    pub const ZERO: Self = Self::new(0.0, [0.0; 3]);
    pub const ONE: Self = Self::new(1.0, [0.0; 3]);
    pub const E1: Self = Self::new(0.0, [1.0, 0.0, 0.0]);
    pub const E2: Self = Self::new(0.0, [0.0, 1.0, 0.0]);
    pub const E3: Self = Self::new(0.0, [0.0, 0.0, 1.0]);

    pub const fn new(a: f64, v: [f64; 3]) -> Self {
        Self { a, v }
    }

    pub const fn scalar(a: f64) -> Self {
        Self::new(a, [0.0; 3])
    }

    pub const fn pure(v: [f64; 3]) -> Self {
        Self::new(0.0, v)
    }

    /// `Sc q`.
    pub fn sc(&self) -> f64 {
        self.a
    }

    /// `Ve q` as a pure quaternion.
    pub fn ve(&self) -> Self {
        Self::pure(self.v)
    }

    pub fn vector_norm(&self) -> f64 {
        dot(&self.v, &self.v).sqrt()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.a * self.a + dot(&self.v, &self.v)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a, [-self.v[0], -self.v[1], -self.v[2]])
    }

    pub fn scale(&self, k: f64) -> Self {
        Self::new(k * self.a, [k * self.v[0], k * self.v[1], k * self.v[2]])
    }

    /// `conj(q) / |q|²`.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm_sqr();
        if n == 0.0 {
            return Err(Error::NonInvertible(n.into()));
        }
        Ok(self.conj().scale(1.0 / n))
    }

    /// `e^q = e^a (cos|v| + v/|v| sin|v|)`.
    pub fn exp(&self) -> Self {
        let r = self.vector_norm();
        let ea = self.a.exp();
        if r == 0.0 {
            return Self::scalar(ea);
        }
        let k = ea * r.sin() / r;
        Self::new(ea * r.cos(), [k * self.v[0], k * self.v[1], k * self.v[2]])
    }

    pub fn components(&self) -> [f64; 4] {
        [self.a, self.v[0], self.v[1], self.v[2]]
    }

    pub fn is_finite(&self) -> bool {
        self.components().iter().all(|c| c.is_finite())
    }
}

pub(crate) fn dot(x: &[f64; 3], y: &[f64; 3]) -> f64 {
    x[0] * y[0] + x[1] * y[1] + x[2] * y[2]
}

pub(crate) fn cross(x: &[f64; 3], y: &[f64; 3]) -> [f64; 3] {
    [
        x[1] * y[2] - x[2] * y[1],
        x[2] * y[0] - x[0] * y[2],
        x[0] * y[1] - x[1] * y[0],
    ]
}

impl Add for RealQuaternion {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(
            self.a + o.a,
            [self.v[0] + o.v[0], self.v[1] + o.v[1], self.v[2] + o.v[2]],
        )
    }
}

impl Sub for RealQuaternion {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for RealQuaternion {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl Mul for RealQuaternion {
    type Output = Self;
    /// Hamilton product: `(a + v)(b + w) = ab - <v,w> + a w + b v + v ∧ w`.
    fn mul(self, o: Self) -> Self {
        let c = cross(&self.v, &o.v);
        Self::new(
            self.a * o.a - dot(&self.v, &o.v),
            [
                self.a * o.v[0] + o.a * self.v[0] + c[0],
                self.a * o.v[1] + o.a * self.v[1] + c[1],
                self.a * o.v[2] + o.a * self.v[2] + c[2],
            ],
        )
    }
}

impl Mul<f64> for RealQuaternion {
    type Output = Self;
    fn mul(self, k: f64) -> Self {
        self.scale(k)
    }
}

impl Div<f64> for RealQuaternion {
    type Output = Self;
    fn div(self, k: f64) -> Self {
        self.scale(1.0 / k)
    }
}

/// Writes `"a,v1,v2,v3"`, the form accepted by `FromStr`.
impl fmt::Display for RealQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.v[0], self.v[1], self.v[2])
    }
}

/// Parses `"a,v1,v2,v3"`.
impl FromStr for RealQuaternion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(Error::Parse(s.to_string()));
        }
        let mut c = [0.0; 4];
        for (slot, p) in c.iter_mut().zip(&parts) {
            *slot = p.parse().map_err(|_| Error::Parse(s.to_string()))?;
        }
        let q = Self::new(c[0], [c[1], c[2], c[3]]);
        if !q.is_finite() {
            return Err(Error::Parse(s.to_string()));
        }
        Ok(q)
    }
}
