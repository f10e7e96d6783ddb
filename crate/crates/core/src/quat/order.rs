use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use super::axial::{AxialElement, Axis};
use super::real::RealQuaternion;
use crate::error::{Error, Result};

/// Order `q = a + v` of a quaternionic B-spline together with its complex
/// shadow `w = a + i|v|` and axis `μ = v/|v|`.
///
/// Domain restrictions (`Sc q > 1` for splines, `> 0` for Gamma) are checked
/// by the operations that need them, not here.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuaternionicOrder {
    q: RealQuaternion,
    axis: Axis,
    degenerate: bool,
}

/// The two orders used throughout the figures and reported constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Q1,
    Q2,
}

impl Preset {
    pub fn order(self) -> QuaternionicOrder {
        let r2 = std::f64::consts::SQRT_2;
        let q = match self {
            Preset::Q1 => RealQuaternion::new(6.2, [1.0 / (2.0 * r2), -0.25, 0.25]),
            Preset::Q2 => {
                RealQuaternion::new(2.5, [1.0 / (4.0 * r2), 0.125, -(13f64).sqrt() / 8.0])
            }
        };
        QuaternionicOrder::new(q).expect("preset orders are finite")
    }

    pub fn name(self) -> &'static str {
        match self {
            Preset::Q1 => "q1",
            Preset::Q2 => "q2",
        }
    }
}

impl FromStr for Preset {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "q1" => Ok(Preset::Q1),
            "q2" => Ok(Preset::Q2),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

impl QuaternionicOrder {
    pub fn new(q: RealQuaternion) -> Result<Self> {
        if !q.is_finite() {
            return Err(Error::domain(
                "QuaternionicOrder::new",
                "non-finite component",
            ));
        }
        let (axis, degenerate) = match Axis::new(q.v) {
            Some(axis) => (axis, false),
            None => (Axis::CANONICAL, true),
        };
        Ok(Self {
            q,
            axis,
            degenerate,
        })
    }

    pub fn real(a: f64) -> Result<Self> {
        Self::new(RealQuaternion::scalar(a))
    }

    pub fn quaternion(&self) -> RealQuaternion {
        self.q
    }

    /// `Sc q`.
    pub fn sc(&self) -> f64 {
        self.q.a
    }

    /// `|Ve q|`.
    pub fn vnorm(&self) -> f64 {
        self.q.vector_norm()
    }

    /// Complex shadow `w = a + i|v|`.
    pub fn w(&self) -> Complex64 {
        Complex64::new(self.q.a, self.vnorm())
    }

    pub fn axis(&self) -> Axis {
        self.axis
    }

    /// `|v| = 0`: every axial quantity has vanishing vector slot.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// `q` as `a + |v| μ` in its own axial subalgebra.
    pub fn as_axial(&self) -> AxialElement {
        AxialElement::real(self.axis, self.q.a, self.vnorm())
    }

    /// `q + n` on the same axis.
    pub fn shifted(&self, n: f64) -> Self {
        Self {
            q: RealQuaternion::new(self.q.a + n, self.q.v),
            ..*self
        }
    }

    pub(crate) fn require_sc_above(&self, bound: f64, function: &'static str) -> Result<()> {
        if self.q.a > bound {
            Ok(())
        } else {
            Err(Error::domain(
                function,
                format!("Sc q = {} must exceed {}", self.q.a, bound),
            ))
        }
    }
}

impl FromStr for QuaternionicOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::new(s.parse()?)
    }
}

impl fmt::Display for QuaternionicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.q.fmt(f)
    }
}
