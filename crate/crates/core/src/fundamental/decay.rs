use super::coeffs::{least_squares, CoeffTable};
use crate::grid::GridFunction;
use crate::quat::QuaternionicOrder;

/// Power-law fit `|f(x)| ≈ C |x|^{exponent}`.
#[derive(Debug, Clone, PartialEq)]
pub struct DecayReport {
    pub exponent: f64,
    pub constant: f64,
    /// Largest absolute residual of the fit in `ln` units.
    pub max_residual: f64,
    /// The fitted exponent must not exceed this.
    pub bound: f64,
    pub pass: bool,
    /// Abscissae actually used by the fit.
    pub range: (f64, f64),
    pub samples: usize,
}

fn report(xs: &[f64], ys: &[f64], bound: f64) -> Option<DecayReport> {
    if xs.len() < 3 {
        return None;
    }
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let (exponent, intercept, max_residual) = least_squares(&lx, &ly);
    Some(DecayReport {
        exponent,
        constant: intercept.exp(),
        max_residual,
        bound,
        pass: exponent <= bound,
        range: (xs[0], xs[xs.len() - 1]),
        samples: xs.len(),
    })
}

/// Fits the envelope of `|L_q|` on `lo <= |x| <= hi`.
///
/// `L_q` oscillates through zeros, so the fit uses, for each unit cell
/// `[n, n+1)`, the largest `|L_q|` over both `x` and `-x`. The exponent
/// must be at most `-⌊Sc q⌋ + 0.5`.
pub fn decay_check_range(
    l: &GridFunction,
    q: &QuaternionicOrder,
    lo: f64,
    hi: f64,
) -> Option<DecayReport> {
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let mut cell = lo.floor();
    while cell + 1.0 <= hi + 1e-12 {
        let mut best: Option<(f64, f64)> = None;
        for (x, v) in l.iter() {
            let ax = x.abs();
            if ax >= cell && ax < cell + 1.0 {
                let m = v.norm();
                if best.is_none_or(|b| m > b.1) {
                    best = Some((ax, m));
                }
            }
        }
        if let Some((x, m)) = best.filter(|b| b.1 > 0.0) {
            xs.push(x);
            ys.push(m);
        }
        cell += 1.0;
    }
    report(&xs, &ys, -q.sc().floor() + 0.5)
}

/// [`decay_check_range`] on `5 <= |x| <= 20`.
pub fn decay_check(l: &GridFunction, q: &QuaternionicOrder) -> Option<DecayReport> {
    decay_check_range(l, q, 5.0, 20.0)
}

/// Fits `|c_k|` against `|k|` for `k_min <= |k|`, stopping before the
/// first `k` where `max(|c_k|, |c_{-k}|)` falls below `floor`. The exponent
/// must be at most `-⌊Sc q⌋ - 0.5`.
pub fn coefficient_decay(table: &CoeffTable, k_min: i64, floor: f64) -> Option<DecayReport> {
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let h = (table.n / 2) as i64;
    // the coefficient sequence is centred where 1/F peaks; measure |k| from there
    let centre = table
        .iter()
        .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
        .map(|(k, _)| k)
        .unwrap_or(0);
    for d in k_min.. {
        if centre + d >= h || centre - d < -h {
            break;
        }
        let m = table
            .get(centre + d)
            .norm()
            .max(table.get(centre - d).norm());
        if m < floor {
            break;
        }
        xs.push(d as f64);
        ys.push(m);
    }
    report(&xs, &ys, -table.order.sc().floor() - 0.5)
}
