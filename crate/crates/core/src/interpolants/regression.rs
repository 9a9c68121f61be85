use crate::approximant::{Approximant, Basis, BasisPoly};
use crate::domain::SampleSet;
use crate::error::{Error, Result};
use crate::linalg::{
    design_matrix, elastic_net_cd, lstsq, ridge_closed_form, DenseMatrix, DEFAULT_CD_MAX_ITER, DEFAULT_CD_TOL,
};

/// Penalty for [`fit_regularized`]. `alpha` is the overall strength, `rho`
/// the L1 share of the elastic net.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Penalty {
    None,
    Ridge(f64),
    Lasso(f64),
    ElasticNet { alpha: f64, rho: f64 },
}

impl Penalty {
    pub fn name(&self) -> &'static str {
        match self {
            Penalty::None => "none",
            Penalty::Ridge(_) => "ridge",
            Penalty::Lasso(_) => "lasso",
            Penalty::ElasticNet { .. } => "elastic-net",
        }
    }
}

/// Regularization operator for [`tikhonov_fit`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TikhonovOperator {
    Identity,
    /// Rows `[1, −2, 1]` acting on consecutive coefficients.
    SecondDifference,
}

fn check_fit_args(samples: &SampleSet, degree: usize) -> Result<()> {
    if degree < 1 {
        return Err(Error::arg("polynomial fit needs degree >= 1"));
    }
    if samples.len() < 2 {
        return Err(Error::arg(format!("polynomial fit needs at least 2 samples, got {}", samples.len())));
    }
    Ok(())
}

/// Monomial polynomial fit of the given degree under `penalty`.
///
/// Ridge minimizes `(1/2N)‖y − Ac‖² + α‖c‖²`; lasso and elastic net use the
/// coordinate-descent objective of [`elastic_net_cd`]. A coordinate descent
/// that runs out of sweeps still returns its last iterate.
pub fn fit_regularized(samples: &SampleSet, degree: usize, penalty: Penalty) -> Result<Approximant> {
    check_fit_args(samples, degree)?;
    let a = design_matrix(samples.nodes(), degree, Basis::Monomial);
    let y = samples.ys();
    let coeffs = match penalty {
        Penalty::None => lstsq(&a, y)?,
        Penalty::Ridge(alpha) => ridge_closed_form(&a, y, alpha, 2 * samples.len())?,
        Penalty::Lasso(alpha) => elastic_net_cd(&a, y, alpha, 1.0, DEFAULT_CD_TOL, DEFAULT_CD_MAX_ITER)?.coeffs,
        Penalty::ElasticNet { alpha, rho } => {
            elastic_net_cd(&a, y, alpha, rho, DEFAULT_CD_TOL, DEFAULT_CD_MAX_ITER)?.coeffs
        }
    };
    Ok(BasisPoly::new(Basis::Monomial, coeffs, samples.interval())?.into())
}

/// Monomial least squares with a Tikhonov term `‖Λc‖²`, solved as the stacked
/// system `[A; Λ] c ≈ [y; 0]`.
pub fn tikhonov_fit(
    samples: &SampleSet,
    degree: usize,
    lambda: f64,
    operator: TikhonovOperator,
) -> Result<Approximant> {
    check_fit_args(samples, degree)?;
    if !(lambda >= 0.0) || !lambda.is_finite() {
        return Err(Error::arg(format!("Tikhonov lambda must be finite and >= 0, got {lambda}")));
    }
    let a = design_matrix(samples.nodes(), degree, Basis::Monomial);
    let coeffs = if lambda == 0.0 {
        lstsq(&a, samples.ys())?
    } else {
        let reg = tikhonov_operator(degree + 1, lambda, operator);
        let stacked = a.vstack(&reg)?;
        let mut rhs = samples.ys().to_vec();
        rhs.resize(stacked.rows(), 0.0);
        lstsq(&stacked, &rhs)?
    };
    Ok(BasisPoly::new(Basis::Monomial, coeffs, samples.interval())?.into())
}

/// `λ·I` or `λ·D₂` for `p` coefficients.
pub fn tikhonov_operator(p: usize, lambda: f64, operator: TikhonovOperator) -> DenseMatrix {
    match operator {
        TikhonovOperator::Identity => DenseMatrix::from_fn(p, p, |i, j| if i == j { lambda } else { 0.0 }),
        TikhonovOperator::SecondDifference => {
            DenseMatrix::from_fn(p.saturating_sub(2), p, |i, j| match j.wrapping_sub(i) {
                0 | 2 => lambda,
                1 => -2.0 * lambda,
                _ => 0.0,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{Interval, TargetFunction};
    use crate::nodes::equispaced;

    fn runge11() -> SampleSet {
        SampleSet::from_fn(equispaced(11, Interval::unit()).unwrap(), &TargetFunction::runge()).unwrap()
    }

    fn max_abs_on_grid(p: &Approximant) -> f64 {
        Interval::unit().linspace(1001).into_iter().map(|x| p.eval(x).unwrap().abs()).fold(0.0, f64::max)
    }

    #[test]
    fn unpenalized_square_fit_interpolates() {
        let s = runge11();
        let p = fit_regularized(&s, 10, Penalty::None).unwrap();
        for (x, y) in s.xs().iter().zip(s.ys()) {
            assert!((p.eval(*x).unwrap() - y).abs() < 1e-6);
        }
    }

    #[test]
    fn large_lasso_alpha_zeroes_everything() {
        let p = fit_regularized(&runge11(), 10, Penalty::Lasso(10.0)).unwrap();
        assert!(p.as_basis().unwrap().coeffs().iter().all(|c| *c == 0.0));
    }

    #[test]
    fn ridge_shrinks_the_overshoot() {
        let s = runge11();
        let plain = fit_regularized(&s, 10, Penalty::None).unwrap();
        let ridge = fit_regularized(&s, 10, Penalty::Ridge(0.1)).unwrap();
        assert!(max_abs_on_grid(&ridge) < max_abs_on_grid(&plain));
    }

    #[test]
    fn degree_zero_rejected() {
        assert!(fit_regularized(&runge11(), 0, Penalty::None).is_err());
        assert!(tikhonov_fit(&runge11(), 0, 0.1, TikhonovOperator::Identity).is_err());
    }

    #[test]
    fn second_difference_rows() {
        let d = tikhonov_operator(4, 2.0, TikhonovOperator::SecondDifference);
        assert_eq!(d.rows(), 2);
        assert_eq!(d.row(0), &[2.0, -4.0, 2.0, 0.0]);
        assert_eq!(d.row(1), &[0.0, 2.0, -4.0, 2.0]);
        assert_eq!(tikhonov_operator(2, 1.0, TikhonovOperator::SecondDifference).rows(), 0);
    }

    #[test]
    fn tikhonov_limits() {
        let s = runge11();
        let zero = tikhonov_fit(&s, 6, 0.0, TikhonovOperator::Identity).unwrap();
        let a = design_matrix(s.nodes(), 6, Basis::Monomial);
        let ls = lstsq(&a, s.ys()).unwrap();
        for (c, d) in zero.as_basis().unwrap().coeffs().iter().zip(&ls) {
            assert!((c - d).abs() < 1e-9);
        }
        let huge = tikhonov_fit(&s, 12, 1e9, TikhonovOperator::Identity).unwrap();
        let n: f64 = huge.as_basis().unwrap().coeffs().iter().map(|c| c * c).sum::<f64>().sqrt();
        assert!(n < 1e-6);
        let sd = tikhonov_fit(&s, 12, 0.01, TikhonovOperator::SecondDifference).unwrap();
        assert!(max_abs_on_grid(&sd).is_finite());
    }
}
