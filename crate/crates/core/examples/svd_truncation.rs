//! How the basis decides what a singular-value cutoff throws away.
//!
//! cargo run --example svd_truncation

use runge_lab::approximant::Basis;
use runge_lab::domain::{Interval, SampleSet, TargetFunction};
use runge_lab::error::Result;
use runge_lab::interpolants::svd_truncated_fit_with_rank;
use runge_lab::linalg::{design_matrix, svd};
use runge_lab::metrics::{error_report, DEFAULT_GRID_SIZE};
use runge_lab::nodes::equispaced;

fn main() -> Result<()> {
    let f = TargetFunction::runge();
    let iv = Interval::unit();
    let s = SampleSet::from_fn(equispaced(11, iv)?, &f)?;

    for basis in [Basis::Monomial, Basis::ChebyshevT, Basis::Legendre] {
        let sv = svd(&design_matrix(s.nodes(), 10, basis))?;
        println!("{} basis, condition number {:.4e}", basis.name(), sv.condition_number());
        for threshold in [1e-2, 1e-5, 1e-10, 1e-15] {
            let fit = svd_truncated_fit_with_rank(&s, 10, threshold, basis)?;
            let r = error_report("", &fit.approximant, &f, iv, DEFAULT_GRID_SIZE)?;
            println!("  threshold {threshold:e}: rank {:>2}, max error {:.4e}", fit.kept_rank, r.max_abs);
        }
    }
    Ok(())
}
