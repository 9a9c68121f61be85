//! Dense linear algebra for small, possibly ill-conditioned fitting problems.

mod matrix;
mod penalized;
mod qr;
mod svd;
mod tridiagonal;

pub use matrix::DenseMatrix;
pub use penalized::{
    cholesky, elastic_net_cd, elastic_net_objective, ridge_closed_form, ridge_closed_form_with_tol,
    soft_threshold, ElasticNetFit, DEFAULT_CD_MAX_ITER, DEFAULT_CD_TOL,
};
pub use qr::{default_rcond, lstsq, lstsq_with_rcond, PivotedQr};
pub use svd::{svd, truncated_pinv_solve, SvdFactors, TruncatedSolve};
pub use tridiagonal::solve_tridiagonal;

use crate::approximant::Basis;
use crate::domain::{Interval, NodeSet};

/// `|nodes| × (degree + 1)` matrix whose column `j` is the `j`-th basis
/// function at every node.
pub fn design_matrix(nodes: &NodeSet, degree: usize, basis: Basis) -> DenseMatrix {
    design_matrix_at(nodes.xs(), nodes.interval(), degree, basis)
}

/// [`design_matrix`] for bare abscissae on `interval`.
pub fn design_matrix_at(xs: &[f64], interval: Interval, degree: usize, basis: Basis) -> DenseMatrix {
    let cols = degree + 1;
    let mut data = Vec::with_capacity(xs.len() * cols);
    for &x in xs {
        data.extend(basis_row(x, interval, degree, basis));
    }
    DenseMatrix::from_fn(xs.len(), cols, |i, j| data[i * cols + j])
}

/// `[φ_0(x), …, φ_degree(x)]`.
pub fn basis_row(x: f64, interval: Interval, degree: usize, basis: Basis) -> Vec<f64> {
    let mut row = Vec::with_capacity(degree + 1);
    match basis {
        Basis::Monomial => {
            let mut p = 1.0;
            for _ in 0..=degree {
                row.push(p);
                p *= x;
            }
        }
        Basis::ChebyshevT | Basis::Legendre => {
            let t = interval.to_reference(x);
            row.push(1.0);
            if degree >= 1 {
                row.push(t);
            }
            for k in 1..degree {
                let next = if basis == Basis::ChebyshevT {
                    2.0 * t * row[k] - row[k - 1]
                } else {
                    let kf = k as f64;
                    ((2.0 * kf + 1.0) * t * row[k] - kf * row[k - 1]) / (kf + 1.0)
                };
                row.push(next);
            }
        }
    }
    row
}
