//! Quaternion arithmetic over `R` and `C`, the quaternionic power, and the
//! axial subalgebras every spline quantity lives in.

mod axial;
mod complex;
mod order;
mod power;
mod real;

pub use axial::{AxialElement, Axis, ChiSign, AXIS_TOLERANCE};
pub use complex::ComplexQuaternion;
pub use order::{Preset, QuaternionicOrder};
pub use power::{axial_power, cpow, power_zq, principal_ln};
pub use real::RealQuaternion;

/// `χ±(μ)` for the axis of `v`.
pub fn chi(sign: ChiSign, axis: Axis) -> ComplexQuaternion {
    axis.chi(sign)
}
