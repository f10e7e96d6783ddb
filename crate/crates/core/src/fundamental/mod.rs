//! The interpolation filter `F_q`, the fundamental cardinal spline `L_q`,
//! interpolation coefficients and decay checks.

mod coeffs;
mod decay;
mod derivative;
mod filter;
mod lq;
mod scan;

pub(crate) use scan::refine_extremum;

pub use coeffs::*;
pub use decay::*;
pub use derivative::*;
pub use filter::*;
pub use lq::*;
pub use scan::*;
