//! When only equispaced data exist: interpolate a Chebyshev-like subset, or
//! fit all the data while passing exactly through that subset.
//!
//! cargo run --example mock_chebyshev

use runge_lab::approximant::Approximant;
use runge_lab::domain::{Interval, SampleSet, TargetFunction};
use runge_lab::error::Result;
use runge_lab::interpolants::{
    constrained_mock_chebyshev_lstsq, default_ls_degree, lagrange_interpolate, mock_chebyshev_interpolate,
};
use runge_lab::metrics::{error_report, DEFAULT_GRID_SIZE};
use runge_lab::nodes::{equispaced, mock_chebyshev_subset};

fn main() -> Result<()> {
    let f = TargetFunction::runge();
    let iv = Interval::unit();
    let err = |a: &Approximant| error_report("", a, &f, iv, DEFAULT_GRID_SIZE).map(|r| r.max_abs);

    for (size, m) in [(20, 10), (21, 10), (41, 12)] {
        let full = SampleSet::from_fn(equispaced(size, iv)?, &f)?;
        let sel = mock_chebyshev_subset(full.nodes(), m)?;
        let ls_degree = default_ls_degree(full.len(), sel.len());
        println!("{size} equispaced points, {} Lobatto targets -> indices {:?}", m + 1, sel.indices);
        println!("  all points          {:.4e}", err(&lagrange_interpolate(&full)?)?);
        println!("  subset              {:.4e}", err(&mock_chebyshev_interpolate(&full, m)?)?);
        // the fit is posed in the monomial basis, which runs out of
        // numerical rank at high degree
        match constrained_mock_chebyshev_lstsq(&full, m, ls_degree) {
            Ok(fit) => println!("  constrained deg {ls_degree:<3} {:.4e}", err(&fit)?),
            Err(e) => println!("  constrained deg {ls_degree:<3} failed: {e}"),
        }
    }
    Ok(())
}
