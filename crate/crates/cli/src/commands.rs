use std::f64::consts::PI;
use std::path::PathBuf;

use num_complex::Complex64;
use qspline::bspline::{bspline_hat, bspline_time, bspline_time_shadow, integer_samples};
use qspline::fundamental::{
    coeffs_dft, filter, filter_constants, filter_derivative, filter_truncated, filter_zeta_form,
    lq_grid, lq_grid_shadow, stable_sample_range, tail_bound, zero_free_check, LqConfig, LqGrid,
    SCAN_POINTS,
};
use qspline::quat::chi;
use qspline::sampling::{
    reconstruct as reconstruct_series, relative_l2_error, synthesize, SplineSignal,
};
use qspline::{AxialElement, ChiSign, ComplexQuaternion, GridFunction, Preset, UniformGrid};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{Command, Settings};
use crate::error::CliError;
use crate::output::*;

/// Preset reference values: `min |F|` and `sup|(F')_s| + sup|(F')_v|`.
const REFERENCE: [(Preset, f64, f64); 2] =
    [(Preset::Q1, 0.1568, 3.7889), (Preset::Q2, 0.7799, 2.1753)];
const MIN_TOL: f64 = 0.002;
const SUP_TOL: f64 = 0.01;
const INTERP_TOL: f64 = 1e-3;
const RECON_TOL: f64 = 1e-2;
const SCAN_M: usize = 64;

pub fn run(cmd: &Command) -> Result<(), CliError> {
    let s = Settings::resolve(cmd.args())?;
    match cmd {
        Command::Bspline(_) => report(bspline(&s)?),
        Command::Filter(_) => report(filter_cmd(&s)?),
        Command::Fundamental(_) => fundamental(&s),
        Command::Coeffs(_) => report(coeffs(&s)?),
        Command::Reconstruct(_) => reconstruct(&s),
        Command::Verify(_) => verify(&s),
        Command::Figures(_) => figures(&s),
    }
}

fn report(paths: Vec<PathBuf>) -> Result<(), CliError> {
    for p in paths {
        println!("wrote {}", p.display());
    }
    Ok(())
}

fn time_grid(s: &Settings) -> Result<UniformGrid, CliError> {
    Ok(UniformGrid::symmetric(s.xmax, s.grid_n)?)
}

fn lq_config(s: &Settings) -> LqConfig {
    LqConfig {
        fft_size: s.fft_size,
        filter: s.method,
        ..LqConfig::default()
    }
}

fn abs_parts(xs: &[(f64, AxialElement)]) -> Vec<Series> {
    vec![
        Series {
            label: "|s|",
            points: xs.iter().map(|(x, v)| (*x, v.s.norm())).collect(),
        },
        Series {
            label: "|u|",
            points: xs.iter().map(|(x, v)| (*x, v.u.norm())).collect(),
        },
    ]
}

pub fn bspline(s: &Settings) -> Result<Vec<PathBuf>, CliError> {
    ensure_dir(&s.out)?;
    let q = &s.order;
    let grid = time_grid(s)?;
    let f = GridFunction::from_fn(grid, q.axis(), |t| bspline_time(q, t))?;
    let hat = grid
        .points()
        .map(|x| bspline_hat(q, x).map(|v| (x, v)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut paths = vec![
        write_grid_csv(&s.out.join("bspline.csv"), &f)?,
        write_axial_csv(&s.out.join("bspline_hat.csv"), hat.iter().copied())?,
    ];
    if s.plots {
        let title = format!("B_q, q = {}", s.order);
        paths.push(plot_lines(
            &s.out.join("bspline.svg"),
            &title,
            "t",
            &channels(&f),
        )?);
        let title = format!("|B̂_q| parts, q = {}", s.order);
        paths.push(plot_lines(
            &s.out.join("bspline_hat.svg"),
            &title,
            "ξ",
            &abs_parts(&hat),
        )?);
    }
    Ok(paths)
}

pub fn filter_cmd(s: &Settings) -> Result<Vec<PathBuf>, CliError> {
    ensure_dir(&s.out)?;
    let q = &s.order;
    let k = filter_constants(q, s.trunc_m.unwrap_or(SCAN_M), SCAN_POINTS)?;
    println!(
        "{}: min |F| = {}, sup|(F')_s| + sup|(F')_v| = {}, tail bound = {:e}",
        s.label,
        k.min_modulus,
        k.derivative.total(),
        k.tail_bound
    );
    let grid = time_grid(s)?;
    let values = grid
        .points()
        .map(|x| filter(q, x, s.method).map(|v| (x, v)))
        .collect::<Result<Vec<_>, _>>()?;
    let deriv = grid
        .points()
        .map(|x| filter_derivative(q, x, s.method).map(|v| (x, v)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut paths = vec![
        write_axial_csv(&s.out.join("filter.csv"), values.iter().copied())?,
        write_axial_csv(&s.out.join("filter_derivative.csv"), deriv.iter().copied())?,
    ];
    if s.plots {
        let title = format!("|F_q| parts, q = {}", s.order);
        paths.push(plot_lines(
            &s.out.join("filter.svg"),
            &title,
            "ξ",
            &abs_parts(&values),
        )?);
    }
    Ok(paths)
}

fn decimate(f: &GridFunction, grid_n: usize) -> Result<GridFunction, CliError> {
    let spu = f
        .grid()
        .steps_per_unit()
        .ok_or_else(|| CliError::Usage("L_q grid is not aligned with the integers".into()))?;
    if spu % grid_n != 0 {
        return Err(CliError::Usage(format!(
            "grid-n must divide {spu}, the L_q samples per unit"
        )));
    }
    let stride = spu / grid_n;
    let g = f.grid();
    let grid = UniformGrid::new(g.start, g.step * stride as f64, (g.n - 1) / stride + 1)?;
    let values = f.values().iter().step_by(stride).copied().collect();
    Ok(GridFunction::new(grid, f.axis(), values)?)
}

/// `|L(0) - 1|` and `max_{1<=|m|<=20} |L(m)|`.
fn interpolation_errors(l: &LqGrid) -> (f64, f64) {
    let one = AxialElement::one(l.function.axis());
    let at = |m| l.at_integer(m).map_or(f64::INFINITY, |v| v.norm());
    let zero = l.at_integer(0).map_or(f64::INFINITY, |v| (v - one).norm());
    let off = (1..=20).flat_map(|m| [at(m), at(-m)]).fold(0.0, f64::max);
    (zero, off)
}

/// The gate tolerance, widened to the aliasing estimate when that is larger.
fn interpolation_tolerance(l: &LqGrid) -> f64 {
    INTERP_TOL.max(2.0 * l.alias_estimate)
}

fn fundamental_files(s: &Settings) -> Result<(Vec<PathBuf>, Option<String>), CliError> {
    ensure_dir(&s.out)?;
    let l = lq_grid(&s.order, &lq_config(s))?;
    let x = s.xmax as f64;
    let window = l
        .function
        .window(-x, x)
        .ok_or_else(|| CliError::Usage(format!("xmax = {x} exceeds the L_q grid")))?;
    let f = decimate(&window, s.grid_n)?;
    let (zero, off) = interpolation_errors(&l);
    let tol = interpolation_tolerance(&l);
    println!(
        "{}: |L(0) - 1| = {zero:e}, max 1<=|m|<=20 |L(m)| = {off:e} (tolerance {tol:e})",
        s.label
    );
    let mut paths = vec![write_grid_csv(&s.out.join("fundamental.csv"), &f)?];
    if s.plots {
        let title = format!("L_q, q = {}", s.order);
        paths.push(plot_lines(
            &s.out.join("fundamental.svg"),
            &title,
            "t",
            &channels(&f),
        )?);
        let phase = Series {
            label: "scalar vs e1",
            points: f
                .to_real_quaternions()
                .iter()
                .map(|q| (q.a, q.v[0]))
                .collect(),
        };
        let title = format!("L_q phase curve, q = {}", s.order);
        paths.push(plot_lines(
            &s.out.join("phase.svg"),
            &title,
            "scalar",
            &[phase],
        )?);
    }
    let gate = (zero > tol || off > tol)
        .then(|| format!("{}: L_q(m) deviates from δ_m by more than {tol:e}", s.label));
    Ok((paths, gate))
}

fn fundamental(s: &Settings) -> Result<(), CliError> {
    let (paths, gate) = fundamental_files(s)?;
    report(paths)?;
    gate.map_or(Ok(()), |g| Err(CliError::Gate(g)))
}

pub fn coeffs(s: &Settings) -> Result<Vec<PathBuf>, CliError> {
    ensure_dir(&s.out)?;
    let t = coeffs_dft(&s.order, s.dft_n, s.method)?;
    println!(
        "{}: N = {}, min |F| = {}, error bound = {:e}",
        s.label, t.n, t.filter_min, t.error_bound
    );
    let rows: Vec<_> = t
        .iter()
        .map(|(k, v)| (k as f64, v.to_real_quaternion()))
        .collect();
    let mut paths = vec![write_real_csv(
        &s.out.join("coeffs.csv"),
        rows.iter().copied(),
    )?];
    if s.plots {
        let series = Series {
            label: "log10 |c_k|",
            points: t
                .iter()
                .map(|(k, v)| (k as f64, v.norm().max(1e-300).log10()))
                .collect(),
        };
        let title = format!("log10 |c_k|, q = {}", s.order);
        paths.push(plot_lines(
            &s.out.join("coeffs.svg"),
            &title,
            "k",
            &[series],
        )?);
    }
    Ok(paths)
}

const SIGNAL_HALF_RANGE: usize = 16;

fn reconstruct(s: &Settings) -> Result<(), CliError> {
    ensure_dir(&s.out)?;
    let q = s.order;
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    let d = (0..2 * SIGNAL_HALF_RANGE + 1)
        .map(|_| AxialElement::real(q.axis(), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let signal = SplineSignal::new(q, d)?;
    let l = lq_grid(&q, &lq_config(s))?;
    let spu = l.function.grid().steps_per_unit().unwrap_or(0);
    if spu == 0 || spu % s.grid_n != 0 {
        return Err(CliError::Usage(format!(
            "grid-n must divide {spu}, the L_q samples per unit"
        )));
    }
    let grid = UniformGrid::symmetric(s.xmax, spu)?;
    let b = integer_samples(&q, stable_sample_range(&q)?)?;
    let f = synthesize(&signal, grid)?;
    let reach = s.xmax as i64 + s.terms;
    let samples = signal.integer_samples(&b, -reach, reach);
    let r = reconstruct_series(&samples, &l, grid, s.terms)?;
    let err = relative_l2_error(&r, &f)?;
    println!(
        "{}: relative L2 error with {} terms = {err:e}",
        s.label, s.terms
    );
    let (f, r) = (decimate(&f, s.grid_n)?, decimate(&r, s.grid_n)?);
    let mut paths = vec![
        write_grid_csv(&s.out.join("signal.csv"), &f)?,
        write_grid_csv(&s.out.join("reconstruction.csv"), &r)?,
    ];
    if s.plots {
        let pick = |g: &GridFunction, label| Series {
            label,
            points: g
                .iter()
                .map(|(t, v)| (t, v.to_real_quaternion().a))
                .collect(),
        };
        let title = format!("scalar part, q = {}", s.order);
        let series = [pick(&f, "signal"), pick(&r, "reconstruction")];
        paths.push(plot_lines(
            &s.out.join("reconstruction.svg"),
            &title,
            "t",
            &series,
        )?);
    }
    report(paths)?;
    if err > RECON_TOL {
        return Err(CliError::Gate(format!(
            "reconstruction error {err:e} exceeds {RECON_TOL:e}"
        )));
    }
    Ok(())
}

struct Check {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn check(name: &'static str, pass: bool, detail: String) -> Check {
    Check { name, pass, detail }
}

/// Classical cardinal B-spline by the Cox–de Boor recursion.
fn cardinal(n: u32, t: f64) -> f64 {
    if n == 1 {
        return if (0.0..1.0).contains(&t) { 1.0 } else { 0.0 };
    }
    let m = n as f64;
    (t * cardinal(n - 1, t) + (m - t) * cardinal(n - 1, t - 1.0)) / (m - 1.0)
}

fn verify_checks(s: &Settings) -> Result<Vec<Check>, CliError> {
    let q = &s.order;
    let m = s.trunc_m.unwrap_or(SCAN_M);
    let mut out = Vec::new();

    let k = filter_constants(q, m, SCAN_POINTS)?;
    let sup = k.derivative.total();
    match REFERENCE.iter().find(|r| Some(r.0) == s.preset()) {
        Some(&(_, min_ref, sup_ref)) => {
            let ok = (k.min_modulus - min_ref).abs() <= MIN_TOL;
            out.push(check(
                "min |F|",
                ok,
                format!("{:.6} (reference {min_ref} ± {MIN_TOL})", k.min_modulus),
            ));
            let ok = (sup - sup_ref).abs() <= SUP_TOL;
            out.push(check(
                "sup |F'|",
                ok,
                format!("{sup:.4} (reference {sup_ref} ± {SUP_TOL})"),
            ));
        }
        None => {
            out.push(check(
                "min |F|",
                k.min_modulus > k.tail_bound,
                format!("{:.6}", k.min_modulus),
            ));
            out.push(check("sup |F'|", sup.is_finite(), format!("{sup:.4}")));
        }
    }

    let v = zero_free_check(q, m, SCAN_POINTS)?;
    out.push(check(
        "zero-free",
        v.pass && v.consistent(),
        format!(
            "min |F| {:.4e} vs tail {:.1e}; min |P_w P_w̄| {:.4e} ({} samples)",
            v.min_modulus, v.tail_bound, v.product_min, v.product_terms
        ),
    ));

    let config = lq_config(s);
    let l = lq_grid(q, &config)?;
    let (zero, off) = interpolation_errors(&l);
    let tol = interpolation_tolerance(&l);
    out.push(check(
        "interpolation",
        zero <= tol && off <= tol,
        format!("|L(0)-1| {zero:.2e}, max |L(m)| {off:.2e}, tolerance {tol:.1e}"),
    ));

    let mut route: f64 = 0.0;
    for j in 1..=64 {
        let x = 2.0 * PI * j as f64 / 65.0;
        let a = filter_truncated(q, x, 10_000)?;
        let b = filter_zeta_form(q, x)?;
        route = route.max((a - b).norm() / b.norm());
    }
    let route_tol = 1e-6f64.max(2.0 * tail_bound(q, 10_000) / k.min_modulus);
    out.push(check(
        "route equivalence",
        route <= route_tol,
        format!("relative {route:.2e}, tolerance {route_tol:.1e}"),
    ));

    let mut structure: f64 = 0.0;
    for i in 0..=160 {
        let t = i as f64 / 8.0;
        structure = structure.max((bspline_time(q, t)? - bspline_time_shadow(q, t)?).norm());
    }
    let shadow = lq_grid_shadow(q, &config)?;
    let lq_gap = l.function.max_distance(&shadow)?;
    out.push(check(
        "structure",
        structure <= 1e-8 && lq_gap <= 1e-8,
        format!("B_q {structure:.2e}, L_q {lq_gap:.2e}"),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    let (p, n) = (chi(ChiSign::Plus, q.axis()), chi(ChiSign::Minus, q.axis()));
    let one = ComplexQuaternion::ONE;
    let mut algebra_fail = usize::from(
        (p * p - p).norm() > 1e-12
            || (n * n - n).norm() > 1e-12
            || (p * n).norm() > 1e-12
            || (p + n - one).norm() > 1e-12,
    );
    let draws = 1000;
    for _ in 0..draws {
        let t = rng.gen_range(0.01..20.0);
        let lhs = q.pow_of(Complex64::new(-t, 0.0))?;
        let rhs = q.exp_scaled(Complex64::new(0.0, PI)) * q.pow_of(Complex64::new(t, 0.0))?;
        algebra_fail += usize::from((lhs - rhs).norm() > 1e-12 * lhs.norm().max(1.0));
        let z = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let e = ComplexQuaternion::exp_scaled(z, &q.quaternion());
        let f = ComplexQuaternion::exp_scaled(-z, &q.quaternion());
        algebra_fail += usize::from((e * f - one).norm() > 1e-12 * (1.0 + e.norm() * f.norm()));
        algebra_fail += usize::from((e.star().star() - e).norm() > 1e-12 * e.norm().max(1.0));
    }
    out.push(check(
        "algebra",
        algebra_fail == 0,
        format!("{algebra_fail} failures in {draws} seeded draws"),
    ));

    let a = q.sc();
    if q.is_degenerate() && a.fract() == 0.0 && (2.0..=12.0).contains(&a) {
        let order = a as u32;
        let mut gap: f64 = 0.0;
        for i in 0..=(order as usize * 16) {
            let t = i as f64 / 16.0;
            gap = gap.max((bspline_time(q, t)?.s.re - cardinal(order, t)).abs());
        }
        out.push(check(
            "classical B-spline",
            gap <= 1e-10,
            format!("max deviation {gap:.2e}"),
        ));
        if order == 2 {
            let hat = l
                .function
                .iter()
                .filter(|(t, _)| t.abs() <= 5.0)
                .map(|(t, v)| (v.s.re - (1.0 - t.abs()).max(0.0)).abs())
                .fold(0.0, f64::max);
            out.push(check(
                "classical L_2 = hat",
                hat <= tol,
                format!("max deviation {hat:.2e}"),
            ));
        }
    }
    Ok(out)
}

fn verify(s: &Settings) -> Result<(), CliError> {
    let runs: Vec<Settings> = if s.explicit_order {
        vec![s.clone()]
    } else {
        [Preset::Q1, Preset::Q2].map(|p| s.with_preset(p)).to_vec()
    };
    let mut failed = Vec::new();
    for r in &runs {
        println!("order {} = {}", r.label, r.order);
        for c in verify_checks(r)? {
            println!(
                "  {} {}: {}",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            );
            if !c.pass {
                failed.push(format!("{} {}", r.label, c.name));
            }
        }
    }
    if failed.is_empty() {
        println!("all checks passed");
        Ok(())
    } else {
        Err(CliError::Gate(failed.join(", ")))
    }
}

fn figures(s: &Settings) -> Result<(), CliError> {
    let runs: Vec<Settings> = if s.explicit_order {
        vec![s.clone()]
    } else {
        [Preset::Q1, Preset::Q2].map(|p| s.with_preset(p)).to_vec()
    };
    let mut gates = Vec::new();
    for r in runs {
        let r = Settings { plots: true, ..r };
        report(bspline(&r)?)?;
        report(filter_cmd(&r)?)?;
        let (paths, gate) = fundamental_files(&r)?;
        report(paths)?;
        gates.extend(gate);
        report(coeffs(&r)?)?;
    }
    if gates.is_empty() {
        Ok(())
    } else {
        Err(CliError::Gate(gates.join("; ")))
    }
}
