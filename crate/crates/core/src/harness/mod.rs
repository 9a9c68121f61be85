//! Experiment harness: configuration, method dispatch, figure reproduction and
//! CSV/SVG output. The `runge-lab` binary is a thin front end over this module.

mod figures;
mod methods;
mod output;

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

pub use figures::{figure_title, run_figure, run_figure_with, FigureOptions, EXCLUDED_FIGURES, SUPPORTED_FIGURES};
pub use methods::{method_spec, methods, sample_nodes, validate_params, MethodSpec, ParamKind, ParamSpec};
pub use output::{
    emit_csv, emit_svg, format_f64, padded_range, render_svg, report_path, write_atomic, REPORT_HEADER,
};

use crate::domain::{Interval, TargetFunction};
use crate::error::{Error, Result};
use crate::metrics::{error_report, ErrorReport, DEFAULT_GRID_SIZE};

/// Environment variable overriding the default output directory.
pub const OUT_ENV: &str = "RUNGE_LAB_OUT";
pub const DEFAULT_OUT_DIR: &str = "runge-lab-out";

/// Output directory used when none is given explicitly.
pub fn default_output_dir() -> PathBuf {
    std::env::var_os(OUT_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(DEFAULT_OUT_DIR))
}

/// A method parameter as written on the command line or in a config file.
#[derive(Debug, Clone, PartialEq)]
pub enum ParamValue {
    Number(f64),
    Text(String),
}

impl ParamValue {
    pub fn parse(s: &str) -> Self {
        let s = s.trim();
        match s.parse::<f64>() {
            Ok(v) => ParamValue::Number(v),
            Err(_) => ParamValue::Text(s.to_string()),
        }
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Number(v) => write!(f, "{}", format_f64(*v)),
            ParamValue::Text(s) => f.write_str(s),
        }
    }
}

/// Everything needed to run one experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    /// Reproduce a figure instead of running `method`.
    pub figure_id: Option<u32>,
    pub method: String,
    /// Target function name, see [`TargetFunction::by_name`].
    pub function: String,
    pub interval: Interval,
    pub n_samples: usize,
    /// Polynomial degree for fitting methods; `n_samples − 1` when unset.
    pub degree: Option<usize>,
    pub method_params: BTreeMap<String, ParamValue>,
    pub grid_size: usize,
    /// Where [`run_experiment`] writes its files; nothing is written when unset.
    pub output_dir: Option<PathBuf>,
    pub emit_svg: bool,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            figure_id: None,
            method: "lagrange".into(),
            function: "runge".into(),
            interval: Interval::unit(),
            n_samples: 11,
            degree: None,
            method_params: BTreeMap::new(),
            grid_size: DEFAULT_GRID_SIZE,
            output_dir: None,
            emit_svg: false,
        }
    }
}

impl ExperimentConfig {
    pub fn for_method(method: &str) -> Self {
        Self {
            method: method.into(),
            ..Self::default()
        }
    }

    /// Add a `key=value` method parameter.
    pub fn with_param(mut self, key: &str, value: &str) -> Self {
        self.method_params.insert(key.to_string(), ParamValue::parse(value));
        self
    }

    /// Parse a `key=value` pair into [`Self::method_params`].
    pub fn set_param_pair(&mut self, pair: &str) -> Result<()> {
        let (k, v) = pair
            .split_once('=')
            .ok_or_else(|| Error::usage(format!("parameter '{pair}' is not of the form key=value")))?;
        let k = k.trim();
        if k.is_empty() {
            return Err(Error::usage(format!("parameter '{pair}' has an empty key")));
        }
        self.method_params.insert(k.to_string(), ParamValue::parse(v));
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(id) = self.figure_id {
            figures::check_figure_id(id)?;
        }
        if self.grid_size < 2 {
            return Err(Error::usage(format!("grid_size must be >= 2, got {}", self.grid_size)));
        }
        if self.n_samples == 0 {
            return Err(Error::usage("n_samples must be >= 1"));
        }
        TargetFunction::by_name(&self.function)?;
        if self.figure_id.is_none() {
            validate_params(&self.method, &self.method_params)?;
        }
        Ok(())
    }

    /// Parse the flat `key = value` format, one pair per line, `#` starting a
    /// comment. Method parameters are written `param.<key> = <value>`.
    pub fn from_kv_text(text: &str) -> Result<Self> {
        let mut cfg = Self::default();
        let (mut lo, mut hi) = (cfg.interval.lo(), cfg.interval.hi());
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = |msg: String| Error::usage(format!("config line {}: {msg}", lineno + 1));
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| at(format!("expected key = value, got '{line}'")))?;
            let (key, value) = (key.trim(), value.trim());
            let int = |v: &str| v.parse::<usize>().map_err(|_| at(format!("'{key}' expects an integer, got '{v}'")));
            let real = |v: &str| v.parse::<f64>().map_err(|_| at(format!("'{key}' expects a number, got '{v}'")));
            match key {
                "figure" | "figure_id" => cfg.figure_id = Some(int(value)? as u32),
                "method" => cfg.method = value.to_string(),
                "function" => cfg.function = value.to_string(),
                "lo" => lo = real(value)?,
                "hi" => hi = real(value)?,
                "interval" => {
                    let (a, b) = value
                        .split_once(',')
                        .ok_or_else(|| at(format!("interval expects lo,hi, got '{value}'")))?;
                    lo = real(a.trim())?;
                    hi = real(b.trim())?;
                }
                "n_samples" => cfg.n_samples = int(value)?,
                "degree" => cfg.degree = Some(int(value)?),
                "grid_size" => cfg.grid_size = int(value)?,
                "output_dir" | "out" => cfg.output_dir = Some(PathBuf::from(value)),
                "svg" | "emit_svg" => {
                    cfg.emit_svg = match value {
                        "true" | "1" => true,
                        "false" | "0" => false,
                        _ => return Err(at(format!("'{key}' expects true or false, got '{value}'"))),
                    }
                }
                _ => match key.strip_prefix("param.") {
                    Some(p) if !p.is_empty() => {
                        cfg.method_params.insert(p.to_string(), ParamValue::parse(value));
                    }
                    _ => return Err(at(format!("unknown key '{key}'"))),
                },
            }
        }
        cfg.interval = Interval::new(lo, hi).map_err(|e| Error::usage(e.to_string()))?;
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_kv_text(&text)
    }
}

/// A labelled series sampled on the evaluation grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub label: String,
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
}

/// Points drawn as markers (sample nodes, breakpoints, ...).
#[derive(Debug, Clone, PartialEq)]
pub struct MarkerSet {
    pub label: String,
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
}

/// Curves, markers and error reports produced by one run.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportBundle {
    pub title: String,
    pub config_echo: ExperimentConfig,
    pub curves: Vec<Curve>,
    pub markers: Vec<MarkerSet>,
    pub reports: Vec<ErrorReport>,
    /// Non-fatal remarks: chosen parameters, failed sweep entries.
    pub notes: Vec<String>,
}

impl ReportBundle {
    pub fn new(title: impl Into<String>, config: ExperimentConfig) -> Self {
        Self {
            title: title.into(),
            config_echo: config,
            curves: Vec::new(),
            markers: Vec::new(),
            reports: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Append a curve; labels must be unique and lengths must agree.
    pub fn push_curve(&mut self, label: impl Into<String>, xs: Vec<f64>, ys: Vec<f64>) -> Result<()> {
        let label = label.into();
        if xs.len() != ys.len() {
            return Err(Error::arg(format!("curve '{label}' has {} xs but {} ys", xs.len(), ys.len())));
        }
        if self.curves.iter().any(|c| c.label == label) {
            return Err(Error::arg(format!("duplicate curve label '{label}'")));
        }
        self.curves.push(Curve { label, xs, ys });
        Ok(())
    }

    pub fn curve(&self, label: &str) -> Option<&Curve> {
        self.curves.iter().find(|c| c.label == label)
    }

    pub fn report(&self, method: &str) -> Option<&ErrorReport> {
        self.reports.iter().find(|r| r.method == method)
    }

    fn grid_len(&self) -> usize {
        self.curves.first().map_or(0, |c| c.xs.len())
    }

    /// CSV output needs every curve on the same abscissae.
    fn check_shared_grid(&self) -> Result<()> {
        if let Some(first) = self.curves.first() {
            for c in &self.curves[1..] {
                if c.xs != first.xs {
                    return Err(Error::arg(format!(
                        "curve '{}' is not sampled on the same grid as '{}'",
                        c.label, first.label
                    )));
                }
            }
        }
        Ok(())
    }

    /// Write `<dir>/<stem>.csv` (plus its report) and optionally `<stem>.svg`.
    pub fn write_to(&self, dir: &Path, stem: &str, svg: bool) -> Result<Vec<PathBuf>> {
        let csv = dir.join(format!("{stem}.csv"));
        emit_csv(self, &csv)?;
        let mut written = vec![report_path(&csv), csv];
        written.reverse();
        if svg {
            let p = dir.join(format!("{stem}.svg"));
            emit_svg(self, &p)?;
            written.push(p);
        }
        Ok(written)
    }
}

/// Run one configured experiment (or the configured figure) and write its
/// files when `output_dir` is set.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ReportBundle> {
    cfg.validate()?;
    let (bundle, stem) = match cfg.figure_id {
        Some(id) => {
            let opts = FigureOptions {
                grid_size: cfg.grid_size,
                n_samples: None,
            };
            (run_figure_with(id, &opts)?, format!("figure{id}"))
        }
        None => (run_single(cfg)?, cfg.method.clone()),
    };
    if let Some(dir) = &cfg.output_dir {
        bundle.write_to(dir, &stem, cfg.emit_svg)?;
    }
    Ok(bundle)
}

fn run_single(cfg: &ExperimentConfig) -> Result<ReportBundle> {
    let f = TargetFunction::by_name(&cfg.function)?;
    let fitted = methods::fit_method(cfg, &f)?;
    let grid = cfg.interval.linspace(cfg.grid_size);
    let mut bundle = ReportBundle::new(format!("{} on {} over {}", fitted.label, f.name(), cfg.interval), cfg.clone());
    bundle.push_curve(f.name(), grid.clone(), f.eval_many(&grid))?;
    let ys = crate::approximant::evaluate(&fitted.approximant, &grid)?;
    bundle.push_curve(fitted.label.clone(), grid, ys)?;
    bundle
        .reports
        .push(error_report(fitted.label, &fitted.approximant, &f, cfg.interval, cfg.grid_size)?);
    bundle.markers = fitted.markers;
    bundle.notes = fitted.notes;
    Ok(bundle)
}

/// Run `cfg.method` once per entry of `grid`, which sets `n_samples`. Failing
/// entries become notes; the remaining entries still produce curves.
pub fn run_sweep(cfg: &ExperimentConfig, grid: &[usize]) -> Result<ReportBundle> {
    if grid.is_empty() {
        return Err(Error::usage("sweep grid is empty"));
    }
    cfg.validate()?;
    let f = TargetFunction::by_name(&cfg.function)?;
    let xs = cfg.interval.linspace(cfg.grid_size);
    let mut bundle = ReportBundle::new(format!("{} sweep on {}", cfg.method, f.name()), cfg.clone());
    bundle.push_curve(f.name(), xs.clone(), f.eval_many(&xs))?;
    for &n in grid {
        let entry = ExperimentConfig {
            n_samples: n,
            ..cfg.clone()
        };
        let outcome = methods::fit_method(&entry, &f).and_then(|fitted| {
            let label = format!("{} n={n}", cfg.method);
            let ys = crate::approximant::evaluate(&fitted.approximant, &xs)?;
            let report = error_report(label.clone(), &fitted.approximant, &f, cfg.interval, cfg.grid_size)?;
            Ok((label, ys, report))
        });
        match outcome {
            Ok((label, ys, report)) => {
                bundle.push_curve(label, xs.clone(), ys)?;
                bundle.reports.push(report);
            }
            Err(e) => bundle.notes.push(format!("n={n}: {e}")),
        }
    }
    if let Some(dir) = &cfg.output_dir {
        bundle.write_to(dir, &format!("{}-sweep", cfg.method), cfg.emit_svg)?;
    }
    Ok(bundle)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn param_values_parse() {
        assert_eq!(ParamValue::parse("0.5"), ParamValue::Number(0.5));
        assert_eq!(ParamValue::parse(" cheb "), ParamValue::Text("cheb".into()));
        assert_eq!(ParamValue::Number(1e-3).to_string(), "1e-3");
    }

    #[test]
    fn kv_text_round() {
        let cfg = ExperimentConfig::from_kv_text(
            "# comment\nmethod = ridge\nparam.alpha = 0.1  # trailing\nn_samples=15\ninterval = -2, 2\nsvg = true\n",
        )
        .unwrap();
        assert_eq!(cfg.method, "ridge");
        assert_eq!(cfg.method_params["alpha"], ParamValue::Number(0.1));
        assert_eq!(cfg.n_samples, 15);
        assert_eq!(cfg.interval, Interval::new(-2.0, 2.0).unwrap());
        assert!(cfg.emit_svg);
        cfg.validate().unwrap();
    }

    #[test]
    fn kv_text_errors_name_the_line() {
        let e = ExperimentConfig::from_kv_text("method = ridge\nbogus = 1\n").unwrap_err();
        assert!(matches!(&e, Error::Usage(m) if m.contains("line 2")), "{e}");
        assert!(ExperimentConfig::from_kv_text("n_samples = many").is_err());
        assert!(ExperimentConfig::from_kv_text("lo = 1\nhi = 0").is_err());
    }

    #[test]
    fn bundle_rejects_duplicate_labels() {
        let mut b = ReportBundle::new("t", ExperimentConfig::default());
        b.push_curve("a", vec![0.0], vec![1.0]).unwrap();
        assert!(b.push_curve("a", vec![0.0], vec![1.0]).is_err());
        assert!(b.push_curve("b", vec![0.0], vec![]).is_err());
    }
}
