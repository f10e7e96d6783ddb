//! Quaternionic B-splines `B_q`, the interpolation filter `F_q`, the
//! fundamental cardinal spline `L_q` and the associated sampling series.
//!
//! Every spline quantity of order `q = a + v` takes values in the
//! commutative subalgebra spanned by `1` and `μ = v/|v|`, represented by
//! [`AxialElement`]. In the χ± coordinates of that algebra all computations
//! split into two complex-order problems for `w̄` and `w = a + i|v|`.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bspline;
pub mod error;
pub mod fundamental;
pub mod grid;
pub mod quat;
pub mod sampling;
pub mod special;

pub use error::{Error, Result};
pub use grid::{GridFunction, UniformGrid};
pub use quat::{
    AxialElement, Axis, ChiSign, ComplexQuaternion, Preset, QuaternionicOrder, RealQuaternion,
};
