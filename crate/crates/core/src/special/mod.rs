//! Gamma and Hurwitz zeta functions of complex and quaternionic argument.

mod gamma;
mod zeta;

pub use gamma::{gamma_axial, gamma_complex, gamma_quat, inv_gamma_axial};
pub use zeta::{
    hurwitz_zeta_complex, hurwitz_zeta_quat, zeta_denominator, zeta_denominator_complex, ZETA_HEAD,
};
