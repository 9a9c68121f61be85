//! Two standard cures: cluster nodes toward the ends, or go piecewise.
//!
//! cargo run --example chebyshev_and_spline

use runge_lab::approximant::Approximant;
use runge_lab::domain::{Interval, SampleSet, TargetFunction};
use runge_lab::error::Result;
use runge_lab::interpolants::{chebyshev_interpolate, cubic_spline, lagrange_interpolate};
use runge_lab::metrics::{chebyshev_bound, error_report, DEFAULT_GRID_SIZE};
use runge_lab::nodes::equispaced;

fn main() -> Result<()> {
    let f = TargetFunction::runge();
    let iv = Interval::unit();
    println!("{:>5}  {:>12}  {:>12}  {:>12}", "nodes", "equispaced", "Chebyshev", "spline");
    for n in [6, 11, 16, 21, 41] {
        let s = SampleSet::from_fn(equispaced(n, iv)?, &f)?;
        let eq = lagrange_interpolate(&s)?;
        let ch = chebyshev_interpolate(&f, n - 1, iv)?;
        let sp = cubic_spline(&s)?;
        let err = |a: &Approximant| error_report("", a, &f, iv, DEFAULT_GRID_SIZE).map(|r| r.max_abs);
        println!("{n:>5}  {:>12.4e}  {:>12.4e}  {:>12.4e}", err(&eq)?, err(&ch)?, err(&sp)?);
    }

    // the classical bound for a function whose derivatives are bounded by 1
    println!("\nChebyshev bound M/(2ⁿ(n+1)) with M = 1:");
    for n in [5, 10, 20] {
        println!("  n = {n:>2}: {:.3e}", chebyshev_bound(n, 1.0));
    }
    Ok(())
}
