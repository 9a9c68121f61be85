//! Split the interval into two thin end bands and a wide center, and
//! interpolate each on its own nodes.
//!
//! cargo run --example three_interval

use runge_lab::approximant::Approximant;
use runge_lab::domain::{Interval, SampleSet, TargetFunction};
use runge_lab::error::Result;
use runge_lab::interpolants::{lagrange_interpolate, tisi_fit, BandStrategy, TisiConfig};
use runge_lab::metrics::{error_report, DEFAULT_GRID_SIZE};
use runge_lab::nodes::equispaced;

fn main() -> Result<()> {
    let f = TargetFunction::runge();
    let iv = Interval::unit();
    let err = |a: &Approximant| error_report("", a, &f, iv, DEFAULT_GRID_SIZE).map(|r| r.max_abs);

    let base = TisiConfig::base();
    let global = lagrange_interpolate(&SampleSet::from_fn(equispaced(base.total_nodes(), iv)?, &f)?)?;
    println!("global equispaced, {} nodes: {:.4e}", base.total_nodes(), err(&global)?);

    let variants = [
        ("base", base),
        ("improved", TisiConfig::improved()),
        ("spline center", TisiConfig { center: BandStrategy::SplineLocal, ..base }),
        ("all Chebyshev", TisiConfig {
            left: BandStrategy::LagrangeCheb,
            center: BandStrategy::LagrangeCheb,
            right: BandStrategy::LagrangeCheb,
            ..base
        }),
    ];
    for (name, cfg) in variants {
        for epsilon in [0.1, 0.2, 0.3] {
            let fit = tisi_fit(&f, iv, &TisiConfig { epsilon, ..cfg })?;
            println!("{name:<14} ε = {epsilon}: {:.4e}", err(&fit)?);
        }
    }
    Ok(())
}
