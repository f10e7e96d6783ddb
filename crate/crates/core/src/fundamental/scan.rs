use std::f64::consts::PI;

use super::derivative::filter_derivative;
use super::filter::{filter_truncated, tail_bound, FilterMethod};
use crate::bspline::bspline_time_roundoff;
use crate::bspline::integer_samples_complex;
use crate::error::{Error, Result};
use crate::grid::UniformGrid;
use crate::quat::{AxialElement, QuaternionicOrder};

/// Default number of scan points on `[0, 2π)`.
pub const SCAN_POINTS: usize = 4096;
/// Each refinement pass samples the bracketing cell this many times finer.
pub const REFINE_FACTOR: usize = 10;
const REFINE_PASSES: usize = 6;

/// `F_q^M` sampled on `[0, 2π)` together with its refined minimum modulus.
#[derive(Debug, Clone, PartialEq)]
pub struct FilterProfile {
    pub order: QuaternionicOrder,
    pub m: usize,
    pub grid: UniformGrid,
    pub values: Vec<AxialElement>,
    pub min_modulus: f64,
    pub argmin: f64,
    pub tail_bound: f64,
}

/// Maximizes (or minimizes, through `sign = -1`) `f` on `[0, 2π)`: a coarse
/// scan of `n` points, then passes that resample the bracketing cell
/// [`REFINE_FACTOR`] times finer.
pub(crate) fn refine_extremum<F>(n: usize, sign: f64, mut f: F) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> Result<f64>,
{
    let step = 2.0 * PI / n as f64;
    let mut best = (0.0, sign * f(0.0)?);
    for i in 1..n {
        let x = i as f64 * step;
        let v = sign * f(x)?;
        if v > best.1 {
            best = (x, v);
        }
    }
    let mut h = step;
    for _ in 0..REFINE_PASSES {
        let centre = best.0;
        let fine = h / REFINE_FACTOR as f64;
        for j in -(REFINE_FACTOR as i64)..=REFINE_FACTOR as i64 {
            let x = centre + j as f64 * fine;
            let v = sign * f(x)?;
            if v > best.1 {
                best = (x, v);
            }
        }
        h = fine;
    }
    Ok((best.0, sign * best.1))
}

/// Samples `F_q^M` on `n` points of `[0, 2π)` and refines the minimum of
/// `|F_q^M|`.
pub fn filter_profile(q: &QuaternionicOrder, m: usize, n: usize) -> Result<FilterProfile> {
    if n < 8 {
        return Err(Error::domain(
            "filter_profile",
            "need at least 8 scan points",
        ));
    }
    let grid = UniformGrid::new(0.0, 2.0 * PI / n as f64, n)?;
    let values = grid
        .points()
        .map(|x| filter_truncated(q, x, m))
        .collect::<Result<Vec<_>>>()?;
    let (argmin, min_modulus) =
        refine_extremum(n, -1.0, |x| Ok(filter_truncated(q, x, m)?.norm()))?;
    Ok(FilterProfile {
        order: *q,
        m,
        grid,
        values,
        min_modulus,
        argmin,
        tail_bound: tail_bound(q, m),
    })
}

/// `sup |(F_q')_s|` and `sup |(F_q')_v|` over a period.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivativeSup {
    pub scalar: f64,
    pub vector: f64,
}

impl DerivativeSup {
    pub fn total(&self) -> f64 {
        self.scalar + self.vector
    }
}

/// Sup norms of the scalar and vector parts of `F_q'` (closed form on the
/// truncated filters), scanned on `n` points and refined.
pub fn derivative_sup(q: &QuaternionicOrder, m: usize, n: usize) -> Result<DerivativeSup> {
    let method = FilterMethod::Truncated { m };
    let (_, scalar) = refine_extremum(n, 1.0, |x| Ok(filter_derivative(q, x, method)?.s.norm()))?;
    let (_, vector) = refine_extremum(n, 1.0, |x| Ok(filter_derivative(q, x, method)?.u.norm()))?;
    Ok(DerivativeSup { scalar, vector })
}

/// The constants that govern invertibility and DFT accuracy of `1/F_q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FilterConstants {
    pub min_modulus: f64,
    pub derivative: DerivativeSup,
    /// `S_q = (sup|(F')_s| + sup|(F')_v|) / inf|F|²`.
    pub epstein: f64,
    pub tail_bound: f64,
}

/// `inf |F_q^M|`, the derivative sup norms and `S_q` from `n`-point scans.
pub fn filter_constants(q: &QuaternionicOrder, m: usize, n: usize) -> Result<FilterConstants> {
    let (_, min_modulus) = refine_extremum(n, -1.0, |x| Ok(filter_truncated(q, x, m)?.norm()))?;
    let tb = tail_bound(q, m);
    if min_modulus <= tb {
        return Err(Error::ZeroFilter {
            min_modulus,
            threshold: tb,
        });
    }
    let derivative = derivative_sup(q, m, n)?;
    Ok(FilterConstants {
        min_modulus,
        derivative,
        epstein: derivative.total() / (min_modulus * min_modulus),
        tail_bound: tb,
    })
}

/// `S_q` at truncation `m` with an `n`-point scan.
pub fn epstein_constant(q: &QuaternionicOrder, m: usize, n: usize) -> Result<f64> {
    filter_constants(q, m, n).map(|c| c.epstein)
}

/// Outcome of [`zero_free_check`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroFreeVerdict {
    pub min_modulus: f64,
    pub tail_bound: f64,
    /// `min_modulus > 2 * tail_bound` (the margin equals the tail bound).
    pub pass: bool,
    /// `min |P_w(z) P_w̄(z)|` on the unit circle, `P_w(z) = Σ_ℓ B_w(ℓ) z^ℓ`.
    pub product_min: f64,
    /// Number of integer samples used in `P_w`.
    pub product_terms: usize,
    /// `product_min` clears the rounding and truncation error of `P_w P_w̄`.
    pub product_pass: bool,
}

impl ZeroFreeVerdict {
    /// Both criteria agree.
    pub fn consistent(&self) -> bool {
        self.pass == self.product_pass
    }
}

/// Largest `K <= 400` for which the time series still evaluates `B_q(K)`
/// to better than `1e-11`.
pub fn stable_sample_range(q: &QuaternionicOrder) -> Result<usize> {
    let mut k = 1;
    while k < 400 && bspline_time_roundoff(q, (k + 1) as f64)? < 1e-11 {
        k += 1;
    }
    Ok(k)
}

/// Numerical zero-free test for `F_q`.
///
/// Passes when `min |F_q^M| > tail_bound + margin` with margin equal to the
/// tail bound. Independently evaluates the product of the two complex
/// symbols built from integer samples of `B_w` and `B_w̄`.
pub fn zero_free_check(q: &QuaternionicOrder, m: usize, n: usize) -> Result<ZeroFreeVerdict> {
    let profile = filter_profile(q, m, n)?;
    let pass = profile.min_modulus > 2.0 * profile.tail_bound;

    let k = stable_sample_range(q)?;
    let w = q.w();
    let bw = integer_samples_complex(w, k)?;
    let bwc = integer_samples_complex(w.conj(), k)?;
    let k0 = -(k as i32);
    let symbol = |b: &[num_complex::Complex64], z: num_complex::Complex64| {
        b.iter()
            .enumerate()
            .map(|(i, v)| v * z.powi(k0 + i as i32))
            .sum::<num_complex::Complex64>()
    };
    let (_, product_min) = refine_extremum(n, -1.0, |x| {
        let z = num_complex::Complex64::from_polar(1.0, -x);
        Ok((symbol(&bw, z) * symbol(&bwc, z)).norm())
    })?;
    // envelope |b_k| ~ k^{-a-1} past the last sample
    let last = bw.last().map(|b| b.norm()).unwrap_or(0.0);
    let trunc = 4.0 * last * k as f64 / q.sc() + 1e-9;
    Ok(ZeroFreeVerdict {
        min_modulus: profile.min_modulus,
        tail_bound: profile.tail_bound,
        pass,
        product_min,
        product_terms: 2 * k + 1,
        product_pass: product_min > trunc,
    })
}
