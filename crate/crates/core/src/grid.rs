use crate::error::{Error, Result};
use crate::quat::{AxialElement, Axis, RealQuaternion};

/// `n` equispaced points `start + i * step`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformGrid {
    pub start: f64,
    pub step: f64,
    pub n: usize,
}

impl UniformGrid {
    pub fn new(start: f64, step: f64, n: usize) -> Result<Self> {
        if !(step > 0.0) || !start.is_finite() || !step.is_finite() || n == 0 {
            return Err(Error::domain("UniformGrid::new", "need step > 0, n > 0"));
        }
        Ok(Self { start, step, n })
    }

    /// `[-half_span, half_span]` with `steps_per_unit` points per unit length;
    /// integers fall on grid points.
    pub fn symmetric(half_span: usize, steps_per_unit: usize) -> Result<Self> {
        let p = steps_per_unit as f64;
        Self::new(
            -(half_span as f64),
            1.0 / p,
            2 * half_span * steps_per_unit + 1,
        )
    }

    /// `n` points covering `[start, end]` inclusive.
    pub fn linspace(start: f64, end: f64, n: usize) -> Result<Self> {
        if n < 2 || !(end > start) {
            return Err(Error::domain(
                "UniformGrid::linspace",
                "need n >= 2, end > start",
            ));
        }
        Self::new(start, (end - start) / (n - 1) as f64, n)
    }

    pub fn point(&self, i: usize) -> f64 {
        self.start + i as f64 * self.step
    }

    pub fn end(&self) -> f64 {
        self.point(self.n - 1)
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(move |i| self.point(i))
    }

    /// Index of the grid point within `1e-9 * step` of `x`.
    pub fn index_of(&self, x: f64) -> Option<usize> {
        let r = (x - self.start) / self.step;
        let i = r.round();
        if i < 0.0 || i >= self.n as f64 || (r - i).abs() > 1e-9 {
            return None;
        }
        Some(i as usize)
    }

    /// Number of grid steps per unit length, when that is an integer.
    pub fn steps_per_unit(&self) -> Option<usize> {
        let p = 1.0 / self.step;
        let r = p.round();
        ((p - r).abs() < 1e-9 * p && r >= 1.0).then_some(r as usize)
    }

    pub fn same_as(&self, other: &UniformGrid) -> bool {
        self.n == other.n
            && (self.start - other.start).abs() <= 1e-12 * self.step
            && (self.step - other.step).abs() <= 1e-12 * self.step
    }
}

/// Samples of an axial-valued function on a uniform grid; all values share
/// one axis.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    grid: UniformGrid,
    axis: Axis,
    values: Vec<AxialElement>,
}

impl GridFunction {
    pub fn new(grid: UniformGrid, axis: Axis, values: Vec<AxialElement>) -> Result<Self> {
        if values.len() != grid.n {
            return Err(Error::GridMismatch);
        }
        if values.iter().any(|v| !v.axis.approx_eq(&axis)) {
            return Err(Error::AxisMismatch);
        }
        Ok(Self { grid, axis, values })
    }

    pub fn from_fn<F>(grid: UniformGrid, axis: Axis, mut f: F) -> Result<Self>
    where
        F: FnMut(f64) -> Result<AxialElement>,
    {
        let values = grid.points().map(&mut f).collect::<Result<Vec<_>>>()?;
        Self::new(grid, axis, values)
    }

    pub fn grid(&self) -> &UniformGrid {
        &self.grid
    }

    pub fn axis(&self) -> Axis {
        self.axis
    }

    pub fn values(&self) -> &[AxialElement] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at the grid point `x`, if `x` is one.
    pub fn at(&self, x: f64) -> Option<AxialElement> {
        self.grid.index_of(x).map(|i| self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, &AxialElement)> + '_ {
        self.grid.points().zip(&self.values)
    }

    pub fn to_real_quaternions(&self) -> Vec<RealQuaternion> {
        self.values
            .iter()
            .map(AxialElement::to_real_quaternion)
            .collect()
    }

    pub fn max_norm(&self) -> f64 {
        self.values
            .iter()
            .map(AxialElement::norm)
            .fold(0.0, f64::max)
    }

    /// Largest imaginary part across all samples.
    pub fn imag_residual(&self) -> f64 {
        self.values
            .iter()
            .map(AxialElement::imag_residual)
            .fold(0.0, f64::max)
    }

    /// Pointwise sup of `|self - other|` on a shared grid.
    pub fn max_distance(&self, other: &GridFunction) -> Result<f64> {
        if !self.grid.same_as(&other.grid) {
            return Err(Error::GridMismatch);
        }
        self.values
            .iter()
            .zip(&other.values)
            .map(|(x, y)| Ok(x.checked_add(&-*y)?.norm()))
            .try_fold(0.0, |m, d: Result<f64>| Ok(f64::max(m, d?)))
    }

    /// Restriction to the points with `lo <= x <= hi`.
    pub fn window(&self, lo: f64, hi: f64) -> Option<GridFunction> {
        let first = self.grid.points().position(|x| x >= lo - 1e-12)?;
        let count = self
            .grid
            .points()
            .skip(first)
            .take_while(|&x| x <= hi + 1e-12)
            .count();
        if count == 0 {
            return None;
        }
        let grid = UniformGrid::new(self.grid.point(first), self.grid.step, count).ok()?;
        Some(Self {
            grid,
            axis: self.axis,
            values: self.values[first..first + count].to_vec(),
        })
    }
}
