//! Equispaced interpolation of 1/(1+25x²) gets worse as nodes are added.
//!
//! cargo run --example runge_divergence

use runge_lab::domain::{Interval, SampleSet, TargetFunction};
use runge_lab::error::Result;
use runge_lab::interpolants::lagrange_interpolate;
use runge_lab::metrics::{convergence_study, DEFAULT_GRID_SIZE};
use runge_lab::nodes::equispaced;

fn main() -> Result<()> {
    let f = TargetFunction::runge();
    let iv = Interval::unit();
    let build = |n: usize| lagrange_interpolate(&SampleSet::from_fn(equispaced(n, iv)?, &f)?);
    let study = convergence_study("equispaced", build, &f, &[5, 10, 15, 20, 25], iv, DEFAULT_GRID_SIZE)?;

    println!("{:>5}  {:>12}  {:>12}  {:>8}", "nodes", "max error", "near ends", "argmax");
    for entry in study {
        let r = entry.outcome?;
        println!("{:>5}  {:>12.4e}  {:>12.4e}  {:>8.3}", entry.param, r.max_abs, r.endpoint_max_abs, r.argmax_x);
    }
    Ok(())
}
