use crate::approximant::{Approximant, Piecewise};
use crate::domain::{Interval, SampleSet, TargetFunction};
use crate::error::{Error, Result};
use crate::nodes::{chebyshev_lobatto, equispaced};

use super::{cubic_spline, lagrange_interpolate};

/// How one band of a three-interval fit is interpolated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BandStrategy {
    /// Barycentric interpolant on equispaced local nodes.
    LagrangeEquispaced,
    /// Barycentric interpolant on local Chebyshev–Lobatto nodes.
    LagrangeCheb,
    /// Natural cubic spline on equispaced local nodes.
    SplineLocal,
}

impl BandStrategy {
    pub fn name(&self) -> &'static str {
        match self {
            BandStrategy::LagrangeEquispaced => "lagrange-equispaced",
            BandStrategy::LagrangeCheb => "lagrange-cheb",
            BandStrategy::SplineLocal => "spline-local",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "lagrange-equispaced" | "equispaced" => Ok(BandStrategy::LagrangeEquispaced),
            "lagrange-cheb" | "cheb" | "chebyshev" => Ok(BandStrategy::LagrangeCheb),
            "spline-local" | "spline" => Ok(BandStrategy::SplineLocal),
            other => Err(Error::usage(format!(
                "unknown band strategy '{other}' (expected lagrange-equispaced, lagrange-cheb or spline-local)"
            ))),
        }
    }
}

/// Settings for [`tisi_fit`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TisiConfig {
    /// Width of each end band.
    pub epsilon: f64,
    pub left: BandStrategy,
    pub center: BandStrategy,
    pub right: BandStrategy,
    pub nodes_per_interval: usize,
}

impl TisiConfig {
    /// Equispaced Lagrange in all three bands.
    pub fn base() -> Self {
        Self {
            epsilon: 0.2,
            left: BandStrategy::LagrangeEquispaced,
            center: BandStrategy::LagrangeEquispaced,
            right: BandStrategy::LagrangeEquispaced,
            nodes_per_interval: 11,
        }
    }

    /// Chebyshev nodes in the center band.
    pub fn improved() -> Self {
        Self {
            center: BandStrategy::LagrangeCheb,
            ..Self::base()
        }
    }

    /// Distinct nodes used overall (adjacent bands share their boundary node).
    pub fn total_nodes(&self) -> usize {
        3 * self.nodes_per_interval - 2
    }
}

impl Default for TisiConfig {
    fn default() -> Self {
        Self::improved()
    }
}

/// Three-interval fit: `[lo, lo+ε]`, `[lo+ε, hi−ε]`, `[hi−ε, hi]`, each band
/// interpolated on its own freshly sampled nodes. Every strategy places nodes
/// on both band ends, so neighbouring pieces agree at the breakpoints.
pub fn tisi_fit(f: &TargetFunction, interval: Interval, cfg: &TisiConfig) -> Result<Approximant> {
    let (lo, hi) = (interval.lo(), interval.hi());
    if !(cfg.epsilon > 0.0) || cfg.epsilon >= interval.width() / 2.0 {
        return Err(Error::arg(format!(
            "three-interval epsilon must lie in (0, {}), got {}",
            interval.width() / 2.0,
            cfg.epsilon
        )));
    }
    if cfg.nodes_per_interval < 2 {
        return Err(Error::arg("three-interval fit needs at least 2 nodes per band"));
    }
    let breaks = vec![lo, lo + cfg.epsilon, hi - cfg.epsilon, hi];
    let strategies = [cfg.left, cfg.center, cfg.right];
    let mut pieces = Vec::with_capacity(3);
    for (k, strategy) in strategies.iter().enumerate() {
        let band = Interval::new(breaks[k], breaks[k + 1])?;
        pieces.push(fit_band(f, band, *strategy, cfg.nodes_per_interval)?);
    }
    Ok(Piecewise::new(breaks, pieces)?.into())
}

fn fit_band(f: &TargetFunction, band: Interval, strategy: BandStrategy, n: usize) -> Result<Approximant> {
    match strategy {
        BandStrategy::LagrangeEquispaced => lagrange_interpolate(&SampleSet::from_fn(equispaced(n, band)?, f)?),
        BandStrategy::LagrangeCheb => {
            lagrange_interpolate(&SampleSet::from_fn(chebyshev_lobatto(n - 1, band)?, f)?)
        }
        BandStrategy::SplineLocal => cubic_spline(&SampleSet::from_fn(equispaced(n, band)?, f)?),
    }
}
