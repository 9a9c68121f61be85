use crate::approximant::{Approximant, Basis, BasisPoly};
use crate::domain::{NodeFamily, SampleSet};
use crate::error::{Error, Result};
use crate::linalg::{default_rcond, design_matrix, DenseMatrix, PivotedQr};
use crate::nodes::mock_chebyshev_subset;

use super::lagrange_interpolate;

fn subset_samples(full: &SampleSet, m: usize) -> Result<SampleSet> {
    let sel = mock_chebyshev_subset(full.nodes(), m)?;
    if sel.len() < 2 {
        return Err(Error::arg(format!(
            "mock-Chebyshev subset collapsed to {} node(s); need at least 2",
            sel.len()
        )));
    }
    full.select(&sel.indices, NodeFamily::MockChebyshevSubset)
}

/// Interpolate on the nearest-node stand-in for `m + 1` Chebyshev–Lobatto
/// points taken from the grid of `full`.
pub fn mock_chebyshev_interpolate(full: &SampleSet, m: usize) -> Result<Approximant> {
    lagrange_interpolate(&subset_samples(full, m)?)
}

/// Default least-squares degree: halfway between the subset size and the
/// full grid size, rounded down.
pub fn default_ls_degree(full_len: usize, subset_len: usize) -> usize {
    subset_len + full_len.saturating_sub(subset_len) / 2
}

/// Degree-`ls_degree` monomial polynomial minimizing the squared residual over
/// every grid point of `full`, subject to interpolating exactly on the
/// mock-Chebyshev subset.
///
/// The equality-constrained problem is solved through its augmented KKT
/// system
///
/// ```text
/// [ −I   A   0  ] [r]   [y]
/// [ Aᵀ   0   Cᵀ ] [c] = [0]
/// [ 0    C   0  ] [μ]   [d]
/// ```
///
/// with `A` the full-grid design matrix and `C` its rows at the subset.
pub fn constrained_mock_chebyshev_lstsq(full: &SampleSet, m: usize, ls_degree: usize) -> Result<Approximant> {
    let sub = subset_samples(full, m)?;
    let p = ls_degree + 1;
    let (n, s) = (full.len(), sub.len());
    if p > n {
        return Err(Error::arg(format!(
            "least-squares degree {ls_degree} needs at least {p} grid points, got {n}"
        )));
    }
    if s > p {
        return Err(Error::arg(format!(
            "{s} interpolation constraints cannot be met by a degree-{ls_degree} polynomial"
        )));
    }
    if sub.xs().windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::arg("duplicate constraint nodes"));
    }

    let a = design_matrix(full.nodes(), ls_degree, Basis::Monomial);
    let c = design_matrix(sub.nodes(), ls_degree, Basis::Monomial);
    let dim = n + p + s;
    let kkt = DenseMatrix::from_fn(dim, dim, |i, j| {
        match (i < n, i < n + p, j < n, j < n + p) {
            // first block row
            (true, _, true, _) => {
                if i == j {
                    -1.0
                } else {
                    0.0
                }
            }
            (true, _, false, true) => a[(i, j - n)],
            // second block row
            (false, true, true, _) => a[(j, i - n)],
            (false, true, false, false) => c[(j - n - p, i - n)],
            // third block row
            (false, false, false, true) => c[(i - n - p, j - n)],
            _ => 0.0,
        }
    });
    let mut rhs = vec![0.0; dim];
    rhs[..n].copy_from_slice(full.ys());
    rhs[n + p..].copy_from_slice(sub.ys());

    let qr = PivotedQr::new(&kkt)?;
    let rcond = default_rcond(&kkt);
    if qr.rank(rcond) < dim {
        return Err(Error::numeric("constrained least-squares KKT system is singular"));
    }
    let sol = qr.solve(&rhs, rcond)?;
    let coeffs = sol[n..n + p].to_vec();
    Ok(BasisPoly::new(Basis::Monomial, coeffs, full.interval())?.into())
}
