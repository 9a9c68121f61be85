//! Penalized least squares: closed-form ridge and cyclic coordinate descent
//! for the elastic net (lasso at `rho = 1`).
//!
//! The elastic-net objective is
//!
//! ```text
//! (1/2N) ‖y − A w‖² + α ρ ‖w‖₁ + α (1 − ρ)/2 ‖w‖²
//! ```
//!
//! Every column of `A`, the constant one included, is penalized.

use super::matrix::{dot, DenseMatrix};
use crate::error::{Error, Result};

pub const DEFAULT_CD_TOL: f64 = 1e-8;
pub const DEFAULT_CD_MAX_ITER: usize = 100_000;

/// Outcome of [`elastic_net_cd`].
#[derive(Debug, Clone, PartialEq)]
pub struct ElasticNetFit {
    pub coeffs: Vec<f64>,
    /// False when `max_iter` sweeps ran out before the step size fell below `tol`.
    pub converged: bool,
    pub sweeps: usize,
    /// Objective after each completed sweep.
    pub objective_trace: Vec<f64>,
}

/// `sign(z) · max(|z| − γ, 0)`.
pub fn soft_threshold(z: f64, gamma: f64) -> f64 {
    if z > gamma {
        z - gamma
    } else if z < -gamma {
        z + gamma
    } else {
        0.0
    }
}

pub fn elastic_net_objective(a: &DenseMatrix, y: &[f64], w: &[f64], alpha: f64, rho: f64) -> f64 {
    let n = y.len() as f64;
    let fit = a.matvec(w).expect("shape checked by caller");
    let rss: f64 = fit.iter().zip(y).map(|(f, t)| (t - f).powi(2)).sum();
    let l1: f64 = w.iter().map(|v| v.abs()).sum();
    let l2: f64 = w.iter().map(|v| v * v).sum();
    rss / (2.0 * n) + alpha * rho * l1 + 0.5 * alpha * (1.0 - rho) * l2
}

/// Cyclic coordinate descent with soft-thresholded coordinate updates,
/// started from zero. Stops once the largest coordinate change in a sweep is
/// below `tol`; running out of sweeps is reported through
/// [`ElasticNetFit::converged`] rather than as an error.
pub fn elastic_net_cd(
    a: &DenseMatrix,
    y: &[f64],
    alpha: f64,
    rho: f64,
    tol: f64,
    max_iter: usize,
) -> Result<ElasticNetFit> {
    let (m, p) = (a.rows(), a.cols());
    if m == 0 || m != y.len() {
        return Err(Error::arg(format!("elastic net with {m} rows and {} observations", y.len())));
    }
    if !(alpha >= 0.0) || !(0.0..=1.0).contains(&rho) {
        return Err(Error::arg(format!("elastic net needs alpha >= 0 and rho in [0, 1], got {alpha}, {rho}")));
    }
    let n = m as f64;
    let cols: Vec<Vec<f64>> = (0..p).map(|j| a.column(j)).collect();
    let col_sq: Vec<f64> = cols.iter().map(|c| dot(c, c) / n).collect();
    let l1 = alpha * rho;
    let l2 = alpha * (1.0 - rho);

    let mut w = vec![0.0; p];
    let mut resid = y.to_vec();
    let mut trace = Vec::new();
    let mut converged = false;
    let mut sweeps = 0;
    while sweeps < max_iter {
        sweeps += 1;
        let mut max_step = 0.0f64;
        for j in 0..p {
            let denom = col_sq[j] + l2;
            let old = w[j];
            // correlation with the partial residual that excludes coordinate j
            let z = dot(&cols[j], &resid) / n + col_sq[j] * old;
            let new = if denom > 0.0 { soft_threshold(z, l1) / denom } else { 0.0 };
            if new != old {
                let delta = new - old;
                for (r, c) in resid.iter_mut().zip(&cols[j]) {
                    *r -= delta * c;
                }
                w[j] = new;
                max_step = max_step.max(delta.abs());
            }
        }
        trace.push(elastic_net_objective(a, y, &w, alpha, rho));
        if max_step < tol {
            converged = true;
            break;
        }
    }
    Ok(ElasticNetFit {
        coeffs: w,
        converged,
        sweeps,
        objective_trace: trace,
    })
}

/// Lower-triangular Cholesky factor of a symmetric positive-definite matrix.
/// Pivots at or below `rel_tol · max diag` count as loss of definiteness.
pub fn cholesky(g: &DenseMatrix, rel_tol: f64) -> Result<DenseMatrix> {
    let n = g.rows();
    if g.cols() != n {
        return Err(Error::arg("Cholesky needs a square matrix"));
    }
    let scale = (0..n).fold(0.0f64, |m, i| m.max(g[(i, i)].abs()));
    let mut l = DenseMatrix::zeros(n, n);
    for j in 0..n {
        let mut d = g[(j, j)];
        for k in 0..j {
            d -= l[(j, k)] * l[(j, k)];
        }
        if !(d > rel_tol * scale) {
            return Err(Error::numeric(format!(
                "matrix is not positive definite (pivot {d:.3e} at column {j})"
            )));
        }
        let d = d.sqrt();
        l[(j, j)] = d;
        for i in j + 1..n {
            let mut s = g[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)];
            }
            l[(i, j)] = s / d;
        }
    }
    Ok(l)
}

fn cholesky_solve(l: &DenseMatrix, b: &[f64]) -> Vec<f64> {
    let n = b.len();
    let mut z = b.to_vec();
    for i in 0..n {
        for k in 0..i {
            z[i] -= l[(i, k)] * z[k];
        }
        z[i] /= l[(i, i)];
    }
    for i in (0..n).rev() {
        for k in i + 1..n {
            z[i] -= l[(k, i)] * z[k];
        }
        z[i] /= l[(i, i)];
    }
    z
}

/// Solve `(AᵀA + n_scale · α · I) c = Aᵀ y` by Cholesky.
///
/// `n_scale = N` reproduces the `rho = 0` elastic net; `n_scale = 2N` the
/// `(1/2N)‖r‖² + α‖w‖²` ridge objective.
pub fn ridge_closed_form(a: &DenseMatrix, y: &[f64], alpha: f64, n_scale: usize) -> Result<Vec<f64>> {
    ridge_closed_form_with_tol(a, y, alpha, n_scale, crate::domain::Tolerances::default().linalg_rel)
}

pub fn ridge_closed_form_with_tol(
    a: &DenseMatrix,
    y: &[f64],
    alpha: f64,
    n_scale: usize,
    rel_tol: f64,
) -> Result<Vec<f64>> {
    if a.rows() == 0 || a.rows() != y.len() {
        return Err(Error::arg(format!("ridge with {} rows and {} observations", a.rows(), y.len())));
    }
    if !(alpha >= 0.0) {
        return Err(Error::arg(format!("ridge alpha must be >= 0, got {alpha}")));
    }
    let mut g = a.gram();
    let shift = n_scale as f64 * alpha;
    for i in 0..g.rows() {
        g[(i, i)] += shift;
    }
    let l = cholesky(&g, rel_tol)?;
    Ok(cholesky_solve(&l, &a.tr_matvec(y)?))
}
