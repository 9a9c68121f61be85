use std::f64::consts::PI;

use crate::approximant::{Approximant, Barycentric};
use crate::domain::{Interval, SampleSet, TargetFunction};
use crate::error::{Error, Result};
use crate::nodes::chebyshev_roots;

/// The polynomial interpolant of `samples`, in barycentric form.
pub fn lagrange_interpolate(samples: &SampleSet) -> Result<Approximant> {
    if samples.len() < 2 {
        return Err(Error::arg(format!(
            "Lagrange interpolation needs at least 2 samples, got {}",
            samples.len()
        )));
    }
    Ok(Barycentric::new(samples.nodes().clone(), samples.ys().to_vec())?.into())
}

/// Interpolate `f` at the `n + 1` Chebyshev roots on `interval`, using the
/// closed-form weights `(-1)^k sin((2k+1)π/(2n+2))`.
pub fn chebyshev_interpolate(f: &TargetFunction, n: usize, interval: Interval) -> Result<Approximant> {
    let nodes = chebyshev_roots(n, interval)?;
    let ys = f.eval_many(nodes.xs());
    // nodes are stored increasing, i.e. k = n..0 in the cosine ordering
    let denom = 2.0 * (n as f64 + 1.0);
    let weights = (0..=n)
        .rev()
        .map(|k| {
            let s = ((2 * k + 1) as f64 * PI / denom).sin();
            if k % 2 == 0 {
                s
            } else {
                -s
            }
        })
        .collect();
    Ok(Barycentric::with_weights(nodes, ys, weights)?.into())
}
