//! Degree-10 least squares on 11 equispaced samples with and without
//! coefficient penalties.
//!
//! cargo run --example regularization

use runge_lab::domain::{Interval, SampleSet, TargetFunction};
use runge_lab::error::Result;
use runge_lab::interpolants::{fit_regularized, Penalty};
use runge_lab::metrics::{error_report, DEFAULT_GRID_SIZE};
use runge_lab::nodes::equispaced;

fn main() -> Result<()> {
    let f = TargetFunction::runge();
    let iv = Interval::unit();
    let s = SampleSet::from_fn(equispaced(11, iv)?, &f)?;

    for alpha in [1e-4, 1e-3, 1e-2] {
        println!("alpha = {alpha:e}");
        let penalties = [
            Penalty::None,
            Penalty::Ridge(alpha),
            Penalty::Lasso(alpha),
            Penalty::ElasticNet { alpha, rho: 0.5 },
        ];
        for penalty in penalties {
            let fit = fit_regularized(&s, 10, penalty)?;
            let coeffs = fit.as_basis().expect("monomial fit").coeffs();
            let norm = coeffs.iter().map(|c| c * c).sum::<f64>().sqrt();
            let zeros = coeffs.iter().filter(|c| **c == 0.0).count();
            let r = error_report(penalty.name(), &fit, &f, iv, DEFAULT_GRID_SIZE)?;
            println!(
                "  {:<12} max error {:>10.4e}  ‖c‖ {:>10.3e}  zero coefficients {zeros}",
                penalty.name(),
                r.max_abs,
                norm
            );
        }
    }
    Ok(())
}
