use crate::approximant::{Approximant, Basis, BasisPoly, Piecewise};
use crate::domain::{Interval, SampleSet};
use crate::error::{Error, Result};
use crate::linalg::solve_tridiagonal;

/// Second-derivative values ("moments") of the natural cubic spline through
/// `samples`, zero at both ends.
pub fn spline_moments(samples: &SampleSet) -> Result<Vec<f64>> {
    let n = samples.len();
    if n < 3 {
        return Err(Error::arg(format!("cubic spline needs at least 3 samples, got {n}")));
    }
    let (xs, ys) = (samples.xs(), samples.ys());
    let h: Vec<f64> = xs.windows(2).map(|w| w[1] - w[0]).collect();
    let slope: Vec<f64> = (0..n - 1).map(|i| (ys[i + 1] - ys[i]) / h[i]).collect();

    // interior rows i = 1..n-2:
    //   h[i-1] M[i-1] + 2 (h[i-1] + h[i]) M[i] + h[i] M[i+1] = 6 (slope[i] - slope[i-1])
    let k = n - 2;
    let diag: Vec<f64> = (1..=k).map(|i| 2.0 * (h[i - 1] + h[i])).collect();
    let off: Vec<f64> = (2..=k).map(|i| h[i - 1]).collect();
    let rhs: Vec<f64> = (1..=k).map(|i| 6.0 * (slope[i] - slope[i - 1])).collect();
    let interior = solve_tridiagonal(&off, &diag, &off, &rhs)?;

    let mut moments = Vec::with_capacity(n);
    moments.push(0.0);
    moments.extend(interior);
    moments.push(0.0);
    Ok(moments)
}

/// Natural cubic spline through `samples`.
///
/// Each piece is stored as a cubic Chebyshev series on its own knot interval.
pub fn cubic_spline(samples: &SampleSet) -> Result<Approximant> {
    let m = spline_moments(samples)?;
    let (xs, ys) = (samples.xs(), samples.ys());
    let mut pieces = Vec::with_capacity(xs.len() - 1);
    for i in 0..xs.len() - 1 {
        let h = xs[i + 1] - xs[i];
        // S(x) = a + b dx + c dx² + d dx³ with dx = x - x_i
        let a = ys[i];
        let b = (ys[i + 1] - ys[i]) / h - h * (2.0 * m[i] + m[i + 1]) / 6.0;
        let c = 0.5 * m[i];
        let d = (m[i + 1] - m[i]) / (6.0 * h);
        // substitute dx = p (s + 1), s ∈ [-1, 1]
        let p = 0.5 * h;
        let (p2, p3) = (p * p, p * p * p);
        let m0 = a + b * p + c * p2 + d * p3;
        let m1 = b * p + 2.0 * c * p2 + 3.0 * d * p3;
        let m2 = c * p2 + 3.0 * d * p3;
        let m3 = d * p3;
        // s² = (T0 + T2)/2, s³ = (3 T1 + T3)/4
        let coeffs = vec![m0 + 0.5 * m2, m1 + 0.75 * m3, 0.5 * m2, 0.25 * m3];
        let piece = BasisPoly::new(Basis::ChebyshevT, coeffs, Interval::new(xs[i], xs[i + 1])?)?;
        pieces.push(Approximant::from(piece));
    }
    Ok(Piecewise::new(xs.to_vec(), pieces)?.into())
}
