//! The shift-invariant space `V_q`, sampling reconstruction through `L_q`,
//! frame bounds and the `H_C`-valued `L²` pairing.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::bspline::{bspline_hat, bspline_time, IntegerSymbol};
use crate::error::{Error, Result};
use crate::fundamental::{filter, refine_extremum, FilterMethod, LqGrid};
use crate::grid::{GridFunction, UniformGrid};
use crate::quat::{AxialElement, Axis, ComplexQuaternion, QuaternionicOrder};

/// A finitely supported sequence `x_k`, `k = first, first + 1, ...`.
#[derive(Debug, Clone, PartialEq)]
pub struct Sequence {
    pub axis: Axis,
    pub first: i64,
    pub values: Vec<AxialElement>,
}

impl Sequence {
    pub fn new(axis: Axis, first: i64, values: Vec<AxialElement>) -> Self {
        Self {
            axis,
            first,
            values,
        }
    }

    /// `x_k`, zero outside the support.
    pub fn get(&self, k: i64) -> AxialElement {
        let i = k - self.first;
        if i < 0 || i as usize >= self.values.len() {
            return AxialElement::zero(self.axis);
        }
        self.values[i as usize]
    }

    pub fn last(&self) -> i64 {
        self.first + self.values.len() as i64 - 1
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &AxialElement)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(move |(i, v)| (self.first + i as i64, v))
    }

    /// Discrete convolution `(self * other)_m = Σ_k self_k other_{m-k}`.
    pub fn convolve(&self, other: &Sequence) -> Sequence {
        let n = self.values.len() + other.values.len() - 1;
        let mut out = vec![AxialElement::zero(self.axis); n];
        for (i, a) in self.values.iter().enumerate() {
            for (j, b) in other.values.iter().enumerate() {
                out[i + j] = out[i + j] + *a * *b;
            }
        }
        Sequence::new(self.axis, self.first + other.first, out)
    }

    /// Restriction to `lo <= k <= hi`.
    pub fn window(&self, lo: i64, hi: i64) -> Sequence {
        Sequence::new(self.axis, lo, (lo..=hi).map(|k| self.get(k)).collect())
    }

    pub fn from_symbol(symbol: &IntegerSymbol) -> Sequence {
        let k = symbol.half_range() as i64;
        Sequence::new(
            symbol.order().axis(),
            -k,
            symbol.iter().map(|(_, b)| *b).collect(),
        )
    }
}

/// `f = Σ_k d_k B_q(· - k)` with finitely many `d_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct SplineSignal {
    pub order: QuaternionicOrder,
    pub coeffs: Sequence,
}

impl SplineSignal {
    /// Coefficients `d_k` for `k = -K, ..., K`.
    pub fn new(order: QuaternionicOrder, coeffs: Vec<AxialElement>) -> Result<Self> {
        if coeffs.len().is_multiple_of(2) {
            return Err(Error::domain(
                "SplineSignal::new",
                "need 2K + 1 coefficients",
            ));
        }
        if coeffs.iter().any(|d| !d.axis.approx_eq(&order.axis())) {
            return Err(Error::AxisMismatch);
        }
        let k = (coeffs.len() / 2) as i64;
        Ok(Self {
            order,
            coeffs: Sequence::new(order.axis(), -k, coeffs),
        })
    }

    pub fn half_range(&self) -> i64 {
        -self.coeffs.first
    }

    /// `f(t)` evaluated directly.
    pub fn eval(&self, t: f64) -> Result<AxialElement> {
        let mut acc = AxialElement::zero(self.order.axis());
        for (k, d) in self.coeffs.iter() {
            acc = acc + *d * bspline_time(&self.order, t - k as f64)?;
        }
        Ok(acc)
    }

    /// `f(m) = (d * b)_m` for `lo <= m <= hi` from integer samples of `B_q`.
    pub fn integer_samples(&self, symbol: &IntegerSymbol, lo: i64, hi: i64) -> Sequence {
        self.coeffs
            .convolve(&Sequence::from_symbol(symbol))
            .window(lo, hi)
    }
}

/// `f` on `grid`. When the grid has an integer number of steps per unit and
/// lands on the integers, `B_q` is tabulated once and shifted.
pub fn synthesize(signal: &SplineSignal, grid: UniformGrid) -> Result<GridFunction> {
    let q = &signal.order;
    q.require_sc_above(1.0, "synthesize")?;
    let axis = q.axis();
    let aligned = grid
        .steps_per_unit()
        .filter(|&p| ((grid.start * p as f64) - (grid.start * p as f64).round()).abs() < 1e-9);
    let Some(p) = aligned else {
        return GridFunction::from_fn(grid, axis, |t| signal.eval(t));
    };
    // B_q(t - k) for t = start + iΔ: index i - k p into a table starting at
    // start - last k
    let p = p as i64;
    let (k_lo, k_hi) = (signal.coeffs.first, signal.coeffs.last());
    let table_start = grid.start - k_hi as f64;
    let len = grid.n + ((k_hi - k_lo) * p) as usize;
    let table = (0..len)
        .map(|j| bspline_time(q, table_start + j as f64 * grid.step))
        .collect::<Result<Vec<_>>>()?;
    let values = (0..grid.n)
        .map(|i| {
            signal
                .coeffs
                .iter()
                .fold(AxialElement::zero(axis), |acc, (k, d)| {
                    let j = i as i64 + (k_hi - k) * p;
                    acc + *d * table[j as usize]
                })
        })
        .collect();
    GridFunction::new(grid, axis, values)
}

/// `Σ_{|k| <= n_terms} f(k) L_q(t - k)` on `grid`, which must share the
/// step of the `L_q` grid and sit on its lattice. `L_q` is taken as zero
/// outside its computed range.
pub fn reconstruct(
    samples: &Sequence,
    lq: &LqGrid,
    grid: UniformGrid,
    n_terms: i64,
) -> Result<GridFunction> {
    let l = &lq.function;
    let lg = *l.grid();
    if (grid.step - lg.step).abs() > 1e-12 * lg.step {
        return Err(Error::GridMismatch);
    }
    let p = lg.steps_per_unit().ok_or(Error::GridMismatch)? as i64;
    let offset = lg.index_of(grid.start).ok_or(Error::GridMismatch)? as i64;
    let axis = l.axis();
    let lv = l.values();
    let values = (0..grid.n as i64)
        .map(|i| {
            (-n_terms..=n_terms).fold(AxialElement::zero(axis), |acc, k| {
                let j = offset + i - k * p;
                if j < 0 || j as usize >= lv.len() {
                    return acc;
                }
                acc + samples.get(k) * lv[j as usize]
            })
        })
        .collect();
    GridFunction::new(grid, axis, values)
}

/// Relative `L²` distance `‖f - g‖ / ‖g‖` by the trapezoid rule.
pub fn relative_l2_error(f: &GridFunction, reference: &GridFunction) -> Result<f64> {
    let diff = l2_pairing_sq(f, reference, true)?;
    let norm = l2_pairing_sq(reference, reference, false)?;
    Ok((diff / norm).sqrt())
}

fn l2_pairing_sq(f: &GridFunction, g: &GridFunction, difference: bool) -> Result<f64> {
    if !f.grid().same_as(g.grid()) {
        return Err(Error::GridMismatch);
    }
    let n = f.len();
    let mut acc = 0.0;
    for (i, (a, b)) in f.values().iter().zip(g.values()).enumerate() {
        let v = if difference {
            (a.to_complex_quaternion() - b.to_complex_quaternion()).norm_sqr()
        } else {
            a.to_complex_quaternion().norm_sqr()
        };
        let w = if i == 0 || i + 1 == n { 0.5 } else { 1.0 };
        acc += w * v;
    }
    Ok(acc * f.grid().step)
}

/// `∫ f(x) g(x)* dx` by the trapezoid rule, and its real scalar part, the
/// real inner product.
pub fn l2_pairing(f: &GridFunction, g: &GridFunction) -> Result<(ComplexQuaternion, f64)> {
    if !f.grid().same_as(g.grid()) {
        return Err(Error::GridMismatch);
    }
    let n = f.len();
    let mut acc = ComplexQuaternion::ZERO;
    for (i, (a, b)) in f.values().iter().zip(g.values()).enumerate() {
        let w = if i == 0 || i + 1 == n { 0.5 } else { 1.0 };
        let term = a.to_complex_quaternion() * b.to_complex_quaternion().star();
        acc = acc + term.scale(Complex64::new(w * f.grid().step, 0.0));
    }
    Ok((acc, acc.scalar_part().re))
}

/// Riesz-type bounds of the `B_q` and `L_q` shift systems.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameBounds {
    /// `inf Σ|B̂_q(ξ+2πk)|² / sup |F_q|²`.
    pub lower: f64,
    /// `sup Σ|B̂_q(ξ+2πk)|² / inf |F_q|²`.
    pub upper: f64,
    pub gram_min: f64,
    pub gram_max: f64,
    pub filter_min: f64,
    pub filter_max: f64,
    /// `(2/π)^{Sc q} / sup(Σ|B̂_q(ξ+2πk)|)²`.
    pub lower_estimate: f64,
    /// Coarse scan spacing on `[-π, π]`; extrema are refined below it.
    pub resolution: f64,
}

/// Scans `[-π, π]` with `n` points (then refines) for the periodized sums,
/// with `|k| <= m` terms in `Σ|B̂|²` and `Σ|B̂|`.
pub fn frame_bounds(q: &QuaternionicOrder, n: usize, m: usize) -> Result<FrameBounds> {
    q.require_sc_above(1.0, "frame_bounds")?;
    let periodized = |x: f64, power: i32| -> Result<f64> {
        let mut s = 0.0;
        for k in (1..=m as i64).rev().flat_map(|k| [k, -k]).chain([0]) {
            s += bspline_hat(q, x + 2.0 * PI * k as f64)?.norm().powi(power);
        }
        Ok(s)
    };
    // scans run on [0, 2π); shift to [-π, π)
    let shift = |x: f64| x - PI;
    let (_, gram_min) = refine_extremum(n, -1.0, |x| periodized(shift(x), 2))?;
    let (_, gram_max) = refine_extremum(n, 1.0, |x| periodized(shift(x), 2))?;
    let (_, abs_max) = refine_extremum(n, 1.0, |x| periodized(shift(x), 1))?;
    let f = |x: f64| Ok(filter(q, shift(x), FilterMethod::Zeta)?.norm());
    let (_, filter_min) = refine_extremum(n, -1.0, f)?;
    let (_, filter_max) = refine_extremum(n, 1.0, f)?;
    if filter_min < 1e-12 {
        return Err(Error::ZeroFilter {
            min_modulus: filter_min,
            threshold: 1e-12,
        });
    }
    Ok(FrameBounds {
        lower: gram_min / (filter_max * filter_max),
        upper: gram_max / (filter_min * filter_min),
        gram_min,
        gram_max,
        filter_min,
        filter_max,
        lower_estimate: (2.0 / PI).powf(q.sc()) / (abs_max * abs_max),
        resolution: 2.0 * PI / n as f64,
    })
}
