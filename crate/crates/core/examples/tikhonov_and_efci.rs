//! Smoothing penalties on an over-parameterized fit: Tikhonov shrinks every
//! coefficient, EFCI only damps curvature near the ends.
//!
//! cargo run --example tikhonov_and_efci

use runge_lab::approximant::Approximant;
use runge_lab::domain::{Interval, SampleSet, TargetFunction};
use runge_lab::error::Result;
use runge_lab::interpolants::{efci_fit, fit_regularized, tikhonov_fit, EfciConfig, Penalty, TikhonovOperator};
use runge_lab::metrics::{error_report, DEFAULT_GRID_SIZE};
use runge_lab::nodes::equispaced;

fn main() -> Result<()> {
    let f = TargetFunction::runge();
    let iv = Interval::unit();
    let s = SampleSet::from_fn(equispaced(11, iv)?, &f)?;
    let err = |a: &Approximant| error_report("", a, &f, iv, DEFAULT_GRID_SIZE).map(|r| r.max_abs);

    println!("degree 12 on 11 samples");
    println!("  unregularized            {:.4e}", err(&fit_regularized(&s, 12, Penalty::None)?)?);
    for lambda in [1e-3, 1e-2, 1e-1] {
        for op in [TikhonovOperator::Identity, TikhonovOperator::SecondDifference] {
            let fit = tikhonov_fit(&s, 12, lambda, op)?;
            println!("  {:<18} λ={lambda:<5} {:.4e}", format!("{op:?}"), err(&fit)?);
        }
    }

    println!("\nEFCI, degree 10, ε = 0.1, weight 10");
    for m in [2, 4, 6, 8, 10] {
        let fit = efci_fit(&s, &f, &EfciConfig::new(10, m))?;
        println!("  m = {m:>2}  objective {:.4e}  max error {:.4e}", fit.objective, err(&fit.approximant)?);
    }
    let best = efci_fit(&s, &f, &EfciConfig { search: true, ..EfciConfig::default() })?;
    println!("  search picks m = {} at {:?}", best.m, best.efc_positions);
    Ok(())
}
