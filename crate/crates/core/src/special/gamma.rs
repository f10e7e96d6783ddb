use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quat::{AxialElement, QuaternionicOrder, RealQuaternion};

// Lanczos approximation, g = 7, nine terms.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_P: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// `Γ(z)` for `Re z > 0`.
pub fn gamma_complex(z: Complex64) -> Result<Complex64> {
    if !(z.re > 0.0) || !z.is_finite() {
        return Err(Error::domain(
            "gamma_complex",
            format!("Re z = {} must be positive", z.re),
        ));
    }
    Ok(lanczos(z))
}

fn lanczos(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // reflection
        return PI / ((PI * z).sin() * lanczos(1.0 - z));
    }
    let z = z - 1.0;
    let mut acc = Complex64::new(LANCZOS_P[0], 0.0);
    for (i, p) in LANCZOS_P.iter().enumerate().skip(1) {
        acc += p / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * (t.ln() * (z + 0.5) - t).exp() * acc
}

/// Quaternionic Gamma function `Γ(q) = Re Γ(w) + μ Im Γ(w)`, `w = a + i|v|`.
pub fn gamma_quat(q: &QuaternionicOrder) -> Result<RealQuaternion> {
    Ok(gamma_axial(q)?.to_real_quaternion())
}

/// [`gamma_quat`] in the axial subalgebra of `q`.
pub fn gamma_axial(q: &QuaternionicOrder) -> Result<AxialElement> {
    q.require_sc_above(0.0, "gamma_quat")?;
    let g = gamma_complex(q.w())?;
    Ok(AxialElement::real(q.axis(), g.re, g.im))
}

/// `1/Γ(q) = (Re Γ(w) - μ Im Γ(w)) / |Γ(w)|²`.
pub fn inv_gamma_axial(q: &QuaternionicOrder) -> Result<AxialElement> {
    q.require_sc_above(0.0, "inv_gamma_quat")?;
    let g = gamma_complex(q.w())?;
    let n = g.norm_sqr();
    Ok(AxialElement::real(q.axis(), g.re / n, -g.im / n))
}
