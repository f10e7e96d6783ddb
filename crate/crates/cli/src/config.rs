use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use qspline::fundamental::FilterMethod;
use qspline::{Preset, QuaternionicOrder};

use crate::error::CliError;

pub const DEFAULT_GRID_N: usize = 32;
pub const DEFAULT_XMAX: usize = 10;
pub const DEFAULT_FFT_SIZE: usize = 1 << 16;
pub const DEFAULT_DFT_N: usize = 1024;
pub const DEFAULT_TERMS: i64 = 64;
pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_OUT: &str = "out";

#[derive(Debug, Parser)]
#[command(
    name = "qspline",
    version,
    about = "Quaternionic B-splines, fundamental cardinal splines and sampling series"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write B_q on a time grid and its Fourier transform.
    Bspline(Args),
    /// Write the interpolation filter F_q and its derivative; report min |F_q|.
    Filter(Args),
    /// Write the fundamental cardinal spline L_q and check L_q(m) = δ_m.
    Fundamental(Args),
    /// Write the interpolation coefficients c_k and their error bound.
    Coeffs(Args),
    /// Reconstruct a random spline signal from its integer samples.
    Reconstruct(Args),
    /// Run the numerical checks and print the filter constants.
    Verify(Args),
    /// Write every CSV and plot for the order (both presets if none is given).
    Figures(Args),
}

impl Command {
    pub fn args(&self) -> &Args {
        match self {
            Command::Bspline(a)
            | Command::Filter(a)
            | Command::Fundamental(a)
            | Command::Coeffs(a)
            | Command::Reconstruct(a)
            | Command::Verify(a)
            | Command::Figures(a) => a,
        }
    }
}

#[derive(Debug, Clone, Default, clap::Args)]
pub struct Args {
    /// Order as "a,v1,v2,v3" (Sc q > 1) [default: preset q1]
    #[arg(long, allow_hyphen_values = true, conflicts_with = "preset")]
    pub q: Option<String>,
    /// Named order: q1 or q2
    #[arg(long)]
    pub preset: Option<String>,
    /// Output samples per unit length [default: 32]
    #[arg(long)]
    pub grid_n: Option<usize>,
    /// Half-width of the output window, in whole units [default: 10]
    #[arg(long)]
    pub xmax: Option<usize>,
    /// FFT length for L_q [default: 65536]
    #[arg(long)]
    pub fft_size: Option<usize>,
    /// Truncate the filter sum at |k| <= M instead of using the zeta form
    #[arg(long)]
    pub trunc_m: Option<usize>,
    /// DFT length for the coefficients c_k [default: 1024]
    #[arg(long)]
    pub dft_n: Option<usize>,
    /// Number of terms on each side of the sampling series [default: 64]
    #[arg(long)]
    pub terms: Option<i64>,
    /// Output directory [default: out]
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write SVG plots
    #[arg(long)]
    pub plots: bool,
    /// Seed for randomized signals and checks [default: 1]
    #[arg(long)]
    pub seed: Option<u64>,
    /// File of `key = value` lines using the flag names; flags override it
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone)]
pub struct Settings {
    pub order: QuaternionicOrder,
    /// Label used in messages and file names.
    pub label: String,
    /// Whether the order was given explicitly (flag or file).
    pub explicit_order: bool,
    pub grid_n: usize,
    pub xmax: usize,
    pub fft_size: usize,
    pub method: FilterMethod,
    pub trunc_m: Option<usize>,
    pub dft_n: usize,
    pub terms: i64,
    pub out: PathBuf,
    pub plots: bool,
    pub seed: u64,
}

const KEYS: [&str; 12] = [
    "q", "preset", "grid-n", "xmax", "fft-size", "trunc-m", "dft-n", "terms", "out", "plots",
    "seed", "config",
];

pub fn parse_config_file(path: &Path) -> Result<HashMap<String, String>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
    let mut map = HashMap::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| {
            CliError::Usage(format!(
                "{}:{}: expected key = value",
                path.display(),
                n + 1
            ))
        })?;
        let k = k.trim().replace('_', "-");
        if !KEYS.contains(&k.as_str()) || k == "config" {
            return Err(CliError::Usage(format!(
                "{}:{}: unknown key {k:?}",
                path.display(),
                n + 1
            )));
        }
        map.insert(k, v.trim().trim_matches('"').to_string());
    }
    Ok(map)
}

fn from_file<T: std::str::FromStr>(
    file: &HashMap<String, String>,
    key: &str,
) -> Result<Option<T>, CliError> {
    file.get(key)
        .map(|v| {
            v.parse()
                .map_err(|_| CliError::Usage(format!("invalid value for {key}: {v:?}")))
        })
        .transpose()
}

fn parse_order(
    q: Option<&str>,
    preset: Option<&str>,
) -> Result<Option<(QuaternionicOrder, String)>, CliError> {
    match (q, preset) {
        (Some(_), Some(_)) => Err(CliError::Usage("give either q or preset, not both".into())),
        (Some(q), None) => {
            let order: QuaternionicOrder =
                q.parse().map_err(|e| CliError::Usage(format!("{e}")))?;
            Ok(Some((order, "q".into())))
        }
        (None, Some(p)) => {
            let p: Preset = p
                .parse()
                .map_err(|_| CliError::Usage(format!("unknown preset {p:?}; expected q1 or q2")))?;
            Ok(Some((p.order(), p.name().into())))
        }
        (None, None) => Ok(None),
    }
}

impl Settings {
    pub fn resolve(args: &Args) -> Result<Self, CliError> {
        let file = match &args.config {
            Some(p) => parse_config_file(p)?,
            None => HashMap::new(),
        };
        let from_flags = parse_order(args.q.as_deref(), args.preset.as_deref())?;
        let from_cfg = parse_order(
            file.get("q").map(String::as_str),
            file.get("preset").map(String::as_str),
        )?;
        let explicit_order = from_flags.is_some() || from_cfg.is_some();
        let (order, label) = from_flags
            .or(from_cfg)
            .unwrap_or((Preset::Q1.order(), "q1".into()));
        if order.sc() <= 1.0 {
            return Err(CliError::Usage(format!("order {order} needs Sc q > 1")));
        }

        let grid_n = args
            .grid_n
            .or(from_file(&file, "grid-n")?)
            .unwrap_or(DEFAULT_GRID_N);
        let xmax = args
            .xmax
            .or(from_file(&file, "xmax")?)
            .unwrap_or(DEFAULT_XMAX);
        let fft_size = args
            .fft_size
            .or(from_file(&file, "fft-size")?)
            .unwrap_or(DEFAULT_FFT_SIZE);
        let trunc_m = args.trunc_m.or(from_file(&file, "trunc-m")?);
        let dft_n = args
            .dft_n
            .or(from_file(&file, "dft-n")?)
            .unwrap_or(DEFAULT_DFT_N);
        let terms = args
            .terms
            .or(from_file(&file, "terms")?)
            .unwrap_or(DEFAULT_TERMS);
        let out = args
            .out
            .clone()
            .or(from_file(&file, "out")?)
            .unwrap_or_else(|| DEFAULT_OUT.into());
        let plots = args.plots || from_file(&file, "plots")?.unwrap_or(false);
        let seed = args
            .seed
            .or(from_file(&file, "seed")?)
            .unwrap_or(DEFAULT_SEED);

        if grid_n == 0 || xmax == 0 || dft_n < 2 || terms < 1 {
            return Err(CliError::Usage(
                "grid-n, xmax, dft-n and terms must be positive".into(),
            ));
        }
        if trunc_m == Some(0) {
            return Err(CliError::Usage("trunc-m must be positive".into()));
        }
        let method = trunc_m.map_or(FilterMethod::Zeta, |m| FilterMethod::Truncated { m });
        Ok(Self {
            order,
            label,
            explicit_order,
            grid_n,
            xmax,
            fft_size,
            method,
            trunc_m,
            dft_n,
            terms,
            out,
            plots,
            seed,
        })
    }

    pub fn with_preset(&self, p: Preset) -> Self {
        Self {
            order: p.order(),
            label: p.name().into(),
            explicit_order: true,
            out: self.out.join(p.name()),
            ..self.clone()
        }
    }

    /// The preset this order coincides with, if any.
    pub fn preset(&self) -> Option<Preset> {
        [Preset::Q1, Preset::Q2].into_iter().find(|p| {
            let a = p.order().quaternion();
            let b = self.order.quaternion();
            (a - b).norm() < 1e-12
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file() {
        let dir = std::env::temp_dir().join(format!("qspline-cfg-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("run.cfg");
        fs::write(
            &path,
            "# sample\npreset = q2\ngrid_n = 8\nxmax = 4\nplots = true\n",
        )
        .unwrap();
        let args = Args {
            xmax: Some(6),
            config: Some(path),
            ..Args::default()
        };
        let s = Settings::resolve(&args).unwrap();
        assert_eq!(s.label, "q2");
        assert_eq!((s.grid_n, s.xmax, s.plots), (8, 6, true));
        assert_eq!(s.preset(), Some(Preset::Q2));
    }

    #[test]
    fn rejects_unknown_keys_and_low_orders() {
        let dir = std::env::temp_dir().join(format!("qspline-cfg-bad-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("bad.cfg");
        fs::write(&path, "colour = red\n").unwrap();
        assert!(parse_config_file(&path).is_err());
        let args = Args {
            q: Some("0.5,0,0,0".into()),
            ..Args::default()
        };
        assert!(matches!(Settings::resolve(&args), Err(CliError::Usage(_))));
    }

    #[test]
    fn default_is_q1_zeta() {
        let s = Settings::resolve(&Args::default()).unwrap();
        assert!(!s.explicit_order);
        assert_eq!(s.preset(), Some(Preset::Q1));
        assert_eq!(s.method, FilterMethod::Zeta);
    }
}
