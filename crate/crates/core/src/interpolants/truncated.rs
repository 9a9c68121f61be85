use crate::approximant::{Approximant, Basis, BasisPoly};
use crate::domain::SampleSet;
use crate::error::Result;
use crate::linalg::{design_matrix, truncated_pinv_solve};

/// Result of [`svd_truncated_fit_with_rank`].
#[derive(Debug, Clone)]
pub struct TruncatedFit {
    pub approximant: Approximant,
    pub kept_rank: usize,
}

/// Polynomial fit through the truncated pseudo-inverse of the design matrix
/// in `basis`, dropping singular values below `threshold · σ_max`.
pub fn svd_truncated_fit(samples: &SampleSet, degree: usize, threshold: f64, basis: Basis) -> Result<Approximant> {
    Ok(svd_truncated_fit_with_rank(samples, degree, threshold, basis)?.approximant)
}

pub fn svd_truncated_fit_with_rank(
    samples: &SampleSet,
    degree: usize,
    threshold: f64,
    basis: Basis,
) -> Result<TruncatedFit> {
    let a = design_matrix(samples.nodes(), degree, basis);
    let sol = truncated_pinv_solve(&a, samples.ys(), threshold)?;
    Ok(TruncatedFit {
        approximant: BasisPoly::new(basis, sol.coeffs, samples.interval())?.into(),
        kept_rank: sol.kept_rank,
    })
}
