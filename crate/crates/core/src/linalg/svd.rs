//! Thin SVD by one-sided (Hestenes) Jacobi rotations, and the truncated
//! pseudo-inverse solve built on it.

use super::matrix::{dot, norm2, DenseMatrix};
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;
const ORTHOGONALITY_TOL: f64 = 1e-14;

/// `A = U · diag(s) · Vt` with `r = min(rows, cols)`.
#[derive(Debug, Clone)]
pub struct SvdFactors {
    /// `rows × r`, orthonormal columns.
    pub u: DenseMatrix,
    /// Non-negative, non-increasing.
    pub singular_values: Vec<f64>,
    /// `r × cols`, orthonormal rows.
    pub vt: DenseMatrix,
}

impl SvdFactors {
    pub fn rank(&self) -> usize {
        self.singular_values.len()
    }

    /// `σ_max / σ_min`; infinite when the smallest singular value is zero.
    pub fn condition_number(&self) -> f64 {
        let s = &self.singular_values;
        s[0] / s[s.len() - 1]
    }

    pub fn reconstruct(&self) -> DenseMatrix {
        let mut us = self.u.clone();
        for i in 0..us.rows() {
            for (j, s) in self.singular_values.iter().enumerate() {
                us[(i, j)] *= s;
            }
        }
        us.matmul(&self.vt).expect("factor shapes agree")
    }
}

pub fn svd(a: &DenseMatrix) -> Result<SvdFactors> {
    if a.rows() == 0 || a.cols() == 0 {
        return Err(Error::arg("SVD of an empty matrix"));
    }
    if a.rows() >= a.cols() {
        jacobi_tall(a)
    } else {
        // A = (Aᵀ)ᵀ = (U' S V'ᵀ)ᵀ = V' S U'ᵀ
        let f = jacobi_tall(&a.transpose())?;
        Ok(SvdFactors {
            u: f.vt.transpose(),
            singular_values: f.singular_values,
            vt: f.u.transpose(),
        })
    }
}

/// One-sided Jacobi on a matrix with `rows >= cols`.
fn jacobi_tall(a: &DenseMatrix) -> Result<SvdFactors> {
    let (m, n) = (a.rows(), a.cols());
    // columns of the working matrix W = A V and of V
    let mut w: Vec<Vec<f64>> = (0..n).map(|j| a.column(j)).collect();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|j| {
            let mut e = vec![0.0; n];
            e[j] = 1.0;
            e
        })
        .collect();

    let mut converged = false;
    let mut worst = 0.0;
    for _ in 0..MAX_SWEEPS {
        worst = 0.0f64;
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha = dot(&w[p], &w[p]);
                let beta = dot(&w[q], &w[q]);
                let gamma = dot(&w[p], &w[q]);
                if alpha == 0.0 || beta == 0.0 {
                    continue;
                }
                let off = gamma.abs() / (alpha * beta).sqrt();
                worst = worst.max(off);
                if off <= ORTHOGONALITY_TOL {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                rotate(&mut w, p, q, c, s);
                rotate(&mut v, p, q, c, s);
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NotConverged {
            iterations: MAX_SWEEPS,
            detail: format!("one-sided Jacobi SVD: largest column cosine still {worst:.3e}"),
        });
    }

    let mut sigma: Vec<f64> = w.iter().map(|c| norm2(c)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| sigma[j].total_cmp(&sigma[i]).then(i.cmp(&j)));

    let mut u_cols: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut zero_slots = Vec::new();
    for (slot, &j) in order.iter().enumerate() {
        if sigma[j] > 0.0 {
            u_cols.push(w[j].iter().map(|x| x / sigma[j]).collect());
        } else {
            u_cols.push(vec![0.0; m]);
            zero_slots.push(slot);
        }
    }
    complete_orthonormal(&mut u_cols, &zero_slots, m);

    let u = DenseMatrix::from_fn(m, n, |i, k| u_cols[k][i]);
    let vt = DenseMatrix::from_fn(n, n, |k, i| v[order[k]][i]);
    sigma = order.iter().map(|&j| sigma[j]).collect();
    Ok(SvdFactors {
        u,
        singular_values: sigma,
        vt,
    })
}

fn rotate(cols: &mut [Vec<f64>], p: usize, q: usize, c: f64, s: f64) {
    let (left, right) = cols.split_at_mut(q);
    for (xp, xq) in left[p].iter_mut().zip(right[0].iter_mut()) {
        let (a, b) = (*xp, *xq);
        *xp = c * a - s * b;
        *xq = s * a + c * b;
    }
}

/// Fill the listed (zero) columns with unit vectors orthogonal to all others.
fn complete_orthonormal(cols: &mut [Vec<f64>], slots: &[usize], m: usize) {
    let mut candidate = 0;
    for &slot in slots {
        while candidate < m {
            let mut e = vec![0.0; m];
            e[candidate] = 1.0;
            candidate += 1;
            // two passes of Gram-Schmidt
            for _ in 0..2 {
                for (k, col) in cols.iter().enumerate() {
                    if k == slot {
                        continue;
                    }
                    let d = dot(col, &e);
                    for (x, c) in e.iter_mut().zip(col) {
                        *x -= d * c;
                    }
                }
            }
            let nrm = norm2(&e);
            if nrm > 1e-8 {
                cols[slot] = e.into_iter().map(|x| x / nrm).collect();
                break;
            }
        }
    }
}

/// Result of [`truncated_pinv_solve`].
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSolve {
    pub coeffs: Vec<f64>,
    pub kept_rank: usize,
}

/// Pseudo-inverse solve keeping singular values with `σ / σ_max >= threshold`
/// (and `σ > 0`).
pub fn truncated_pinv_solve(a: &DenseMatrix, y: &[f64], threshold: f64) -> Result<TruncatedSolve> {
    if a.rows() != y.len() {
        return Err(Error::arg(format!(
            "pseudo-inverse solve with {} rows but {} observations",
            a.rows(),
            y.len()
        )));
    }
    if !(threshold >= 0.0) {
        return Err(Error::arg(format!("truncation threshold must be >= 0, got {threshold}")));
    }
    let f = svd(a)?;
    let smax = f.singular_values[0];
    let kept: Vec<usize> = f
        .singular_values
        .iter()
        .enumerate()
        .filter(|(_, &s)| s > 0.0 && s / smax >= threshold)
        .map(|(i, _)| i)
        .collect();
    if kept.is_empty() {
        return Err(Error::numeric("fully truncated: every singular value fell below the threshold"));
    }
    let mut coeffs = vec![0.0; a.cols()];
    for &k in &kept {
        let uty: f64 = (0..a.rows()).map(|i| f.u[(i, k)] * y[i]).sum();
        let scale = uty / f.singular_values[k];
        for (j, c) in coeffs.iter_mut().enumerate() {
            *c += scale * f.vt[(k, j)];
        }
    }
    Ok(TruncatedSolve {
        coeffs,
        kept_rank: kept.len(),
    })
}
