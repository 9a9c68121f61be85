//! Dense-grid error measurement, the Chebyshev interpolation error bound and
//! parameter sweeps.

use crate::approximant::Approximant;
use crate::domain::{Interval, TargetFunction};
use crate::error::{Error, Result};

pub const DEFAULT_GRID_SIZE: usize = 1001;
/// Share of the interval width, per side, counted as the endpoint band.
pub const ENDPOINT_BAND: f64 = 0.1;

/// Error summary of one approximant against its target on an equispaced grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorReport {
    pub method: String,
    pub n_params: usize,
    pub max_abs: f64,
    pub rms: f64,
    pub argmax_x: f64,
    /// Largest error within the outer 10% of the interval on either side.
    pub endpoint_max_abs: f64,
}

pub fn error_report(
    method: impl Into<String>,
    approx: &Approximant,
    f: &TargetFunction,
    interval: Interval,
    grid_size: usize,
) -> Result<ErrorReport> {
    if grid_size < 2 {
        return Err(Error::arg(format!("error grid needs at least 2 points, got {grid_size}")));
    }
    let band = ENDPOINT_BAND * interval.width();
    // slack so grid points landing on the band edge up to rounding are counted
    let slack = 1e-12 * interval.width();
    let (mut max_abs, mut argmax_x, mut endpoint, mut sq) = (0.0f64, interval.lo(), 0.0f64, 0.0);
    for x in interval.linspace(grid_size) {
        let e = (f.eval(x) - approx.eval(x)?).abs();
        // NaN errors must surface, not vanish in `max`
        if e > max_abs || e.is_nan() && !max_abs.is_nan() {
            max_abs = e;
            argmax_x = x;
        }
        if x <= interval.lo() + band + slack || x >= interval.hi() - band - slack {
            endpoint = if e.is_nan() { e } else { endpoint.max(e) };
        }
        sq += e * e;
    }
    Ok(ErrorReport {
        method: method.into(),
        n_params: approx.n_params(),
        max_abs,
        rms: (sq / grid_size as f64).sqrt(),
        argmax_x,
        endpoint_max_abs: endpoint,
    })
}

/// `M / (2ⁿ (n + 1))`: the bound on `‖f − Iₙ‖∞` for interpolation at the
/// `n + 1` Chebyshev roots on `[-1, 1]`, given `M` bounding `|f⁽ⁿ⁺¹⁾|`.
pub fn chebyshev_bound(n: u32, m: f64) -> f64 {
    m / (2f64.powi(n as i32) * (n as f64 + 1.0))
}

/// One entry of a [`convergence_study`].
#[derive(Debug)]
pub struct StudyEntry {
    pub param: usize,
    pub outcome: Result<ErrorReport>,
}

/// Build and score `build(p)` for each `p` in `param_grid`, in order, on the
/// same evaluation grid. A failing entry is kept as an error; the study goes on.
pub fn convergence_study(
    method: &str,
    build: impl Fn(usize) -> Result<Approximant>,
    f: &TargetFunction,
    param_grid: &[usize],
    interval: Interval,
    grid_size: usize,
) -> Result<Vec<StudyEntry>> {
    if param_grid.is_empty() {
        return Err(Error::arg("convergence study needs a non-empty parameter grid"));
    }
    Ok(param_grid
        .iter()
        .map(|&p| StudyEntry {
            param: p,
            outcome: build(p).and_then(|a| error_report(format!("{method}[{p}]"), &a, f, interval, grid_size)),
        })
        .collect())
}
