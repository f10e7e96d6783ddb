use std::fs;
use std::path::{Path, PathBuf};

use plotters::prelude::*;
use qspline::{AxialElement, GridFunction, RealQuaternion};

use crate::error::CliError;

pub const TIME_HEADER: [&str; 5] = ["t", "scalar", "e1", "e2", "e3"];
pub const FREQ_HEADER: [&str; 5] = ["xi", "s_re", "s_im", "u_re", "u_im"];

pub fn ensure_dir(dir: &Path) -> Result<(), CliError> {
    fs::create_dir_all(dir)?;
    Ok(())
}

/// Rows of `(x, q)` under the `t,scalar,e1,e2,e3` header. Floats use the
/// shortest representation that parses back to the same bits.
pub fn write_real_csv<I>(path: &Path, rows: I) -> Result<PathBuf, CliError>
where
    I: IntoIterator<Item = (f64, RealQuaternion)>,
{
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(TIME_HEADER)?;
    for (t, q) in rows {
        let c = q.components();
        w.write_record([t, c[0], c[1], c[2], c[3]].map(|x| format!("{x}")))?;
    }
    w.flush()?;
    Ok(path.to_path_buf())
}

pub fn write_grid_csv(path: &Path, f: &GridFunction) -> Result<PathBuf, CliError> {
    let qs = f.to_real_quaternions();
    write_real_csv(path, f.grid().points().zip(qs))
}

/// Rows of `(ξ, s + μu)` under the `xi,s_re,s_im,u_re,u_im` header.
pub fn write_axial_csv<I>(path: &Path, rows: I) -> Result<PathBuf, CliError>
where
    I: IntoIterator<Item = (f64, AxialElement)>,
{
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(FREQ_HEADER)?;
    for (x, v) in rows {
        w.write_record([x, v.s.re, v.s.im, v.u.re, v.u.im].map(|x| format!("{x}")))?;
    }
    w.flush()?;
    Ok(path.to_path_buf())
}

pub struct Series {
    pub label: &'static str,
    pub points: Vec<(f64, f64)>,
}

const PALETTE: [RGBColor; 4] = [BLUE, RED, GREEN, MAGENTA];

fn bounds(series: &[Series]) -> ((f64, f64), (f64, f64)) {
    let mut x = (f64::INFINITY, f64::NEG_INFINITY);
    let mut y = (f64::INFINITY, f64::NEG_INFINITY);
    for (px, py) in series
        .iter()
        .flat_map(|s| s.points.iter())
        .filter(|(a, b)| a.is_finite() && b.is_finite())
    {
        x = (x.0.min(*px), x.1.max(*px));
        y = (y.0.min(*py), y.1.max(*py));
    }
    if !(x.0 < x.1) {
        x = (x.0 - 1.0, x.0 + 1.0);
    }
    let pad = if y.1 > y.0 { 0.05 * (y.1 - y.0) } else { 1.0 };
    (x, (y.0 - pad, y.1 + pad))
}

pub fn plot_lines(
    path: &Path,
    title: &str,
    x_label: &str,
    series: &[Series],
) -> Result<PathBuf, CliError> {
    let plot_err = |e: &dyn std::fmt::Display| CliError::Plot(e.to_string());
    let root = SVGBackend::new(path, (900, 560)).into_drawing_area();
    root.fill(&WHITE).map_err(|e| plot_err(&e))?;
    let ((x0, x1), (y0, y1)) = bounds(series);
    let mut chart = ChartBuilder::on(&root)
        .caption(title, ("sans-serif", 22))
        .margin(12)
        .x_label_area_size(40)
        .y_label_area_size(60)
        .build_cartesian_2d(x0..x1, y0..y1)
        .map_err(|e| plot_err(&e))?;
    chart
        .configure_mesh()
        .x_desc(x_label)
        .draw()
        .map_err(|e| plot_err(&e))?;
    for (s, color) in series.iter().zip(PALETTE.iter().cycle()) {
        chart
            .draw_series(LineSeries::new(s.points.iter().copied(), color))
            .map_err(|e| plot_err(&e))?
            .label(s.label)
            .legend(move |(x, y)| PathElement::new(vec![(x, y), (x + 16, y)], color));
    }
    if series.len() > 1 {
        chart
            .configure_series_labels()
            .background_style(WHITE.mix(0.8))
            .border_style(BLACK)
            .draw()
            .map_err(|e| plot_err(&e))?;
    }
    root.present().map_err(|e| plot_err(&e))?;
    Ok(path.to_path_buf())
}

/// The four real channels of a grid function as plot series.
pub fn channels(f: &GridFunction) -> Vec<Series> {
    let qs = f.to_real_quaternions();
    let labels = ["scalar", "e1", "e2", "e3"];
    (0..4)
        .map(|c| Series {
            label: labels[c],
            points: f
                .grid()
                .points()
                .zip(&qs)
                .map(|(t, q)| (t, q.components()[c]))
                .collect(),
        })
        .collect()
}
