use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// z² + Σ wᵢ² vanishes: the complex quaternion is a zero divisor.
    #[error("complex quaternion is not invertible (z0^2 + sum zi^2 = {0})")]
    NonInvertible(num_complex::Complex64),

    #[error("zero base raised to an exponent with non-positive scalar part")]
    ZeroBase,

    #[error("argument outside the domain of {function}: {reason}")]
    Domain {
        function: &'static str,
        reason: String,
    },

    #[error("axial operands live on different axes")]
    AxisMismatch,

    /// The interpolation filter (or a χ± coordinate of it) is too close to zero.
    #[error("interpolation filter vanishes or is not resolvable: min modulus {min_modulus:.3e} <= threshold {threshold:.3e}")]
    ZeroFilter { min_modulus: f64, threshold: f64 },

    #[error("grid functions do not share the same grid")]
    GridMismatch,

    #[error("invalid quaternion literal {0:?}; expected \"a,v1,v2,v3\"")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(function: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            function,
            reason: reason.into(),
        }
    }
}
