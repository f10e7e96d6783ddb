//! Inputs shared by the benchmarks.

use qspline::{Preset, QuaternionicOrder};

/// The two preset orders with their names.
pub fn orders() -> [(&'static str, QuaternionicOrder); 2] {
    [Preset::Q1, Preset::Q2].map(|p| (p.name(), p.order()))
}

/// `n` interior frequencies in `(0, 2π)`.
pub fn frequencies(n: usize) -> Vec<f64> {
    (1..=n)
        .map(|j| 2.0 * std::f64::consts::PI * j as f64 / (n + 1) as f64)
        .collect()
}
