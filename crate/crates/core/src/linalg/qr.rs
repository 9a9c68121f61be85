//! Least squares by Householder QR with column pivoting.

use super::matrix::{norm2, DenseMatrix};
use crate::error::{Error, Result};

/// Householder QR factorization `A P = Q R` with greedy column pivoting.
#[derive(Debug, Clone)]
pub struct PivotedQr {
    rows: usize,
    cols: usize,
    // column-major working copy: R above the diagonal, reflectors below
    a: Vec<f64>,
    // leading entry of each reflector (the rest is stored in `a`)
    v0: Vec<f64>,
    tau: Vec<f64>,
    perm: Vec<usize>,
}

impl PivotedQr {
    pub fn new(matrix: &DenseMatrix) -> Result<Self> {
        let (m, n) = (matrix.rows(), matrix.cols());
        if m == 0 || n == 0 {
            return Err(Error::arg("QR of an empty matrix"));
        }
        let mut a = vec![0.0; m * n];
        for i in 0..m {
            for j in 0..n {
                a[j * m + i] = matrix[(i, j)];
            }
        }
        let steps = m.min(n);
        let mut perm: Vec<usize> = (0..n).collect();
        let mut v0 = vec![0.0; steps];
        let mut tau = vec![0.0; steps];

        for k in 0..steps {
            // pick the remaining column with the largest trailing norm
            let (best, _) = (k..n)
                .map(|j| (j, norm2(&a[j * m + k..(j + 1) * m])))
                .fold((k, -1.0), |acc, (j, nrm)| if nrm > acc.1 { (j, nrm) } else { acc });
            if best != k {
                for i in 0..m {
                    a.swap(k * m + i, best * m + i);
                }
                perm.swap(k, best);
            }

            let col = &a[k * m + k..(k + 1) * m];
            let alpha = norm2(col);
            if alpha == 0.0 {
                tau[k] = 0.0;
                v0[k] = 0.0;
                continue;
            }
            let x0 = col[0];
            let beta = if x0 >= 0.0 { -alpha } else { alpha };
            // v = x - beta e1, normalized so that H = I - tau v vᵀ with v[0] = 1
            let lead = x0 - beta;
            for i in k + 1..m {
                a[k * m + i] /= lead;
            }
            tau[k] = (beta - x0) / beta;
            v0[k] = 1.0;
            a[k * m + k] = beta;

            for j in k + 1..n {
                let mut s = a[j * m + k];
                for i in k + 1..m {
                    s += a[k * m + i] * a[j * m + i];
                }
                s *= tau[k];
                a[j * m + k] -= s;
                for i in k + 1..m {
                    a[j * m + i] -= s * a[k * m + i];
                }
            }
        }

        Ok(Self {
            rows: m,
            cols: n,
            a,
            v0,
            tau,
            perm,
        })
    }

    /// Diagonal of `R`; magnitudes are non-increasing.
    pub fn r_diagonal(&self) -> Vec<f64> {
        (0..self.rows.min(self.cols)).map(|k| self.a[k * self.rows + k]).collect()
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    /// Numerical rank: diagonal entries of `R` with `|r_kk| > rcond · |r_00|`.
    pub fn rank(&self, rcond: f64) -> usize {
        let d = self.r_diagonal();
        let top = d[0].abs();
        if top == 0.0 {
            return 0;
        }
        d.iter().take_while(|r| r.abs() > rcond * top).count()
    }

    /// `Qᵀ y`.
    fn apply_qt(&self, y: &[f64]) -> Vec<f64> {
        let m = self.rows;
        let mut z = y.to_vec();
        for k in 0..self.tau.len() {
            if self.tau[k] == 0.0 {
                continue;
            }
            let mut s = z[k] * self.v0[k];
            for i in k + 1..m {
                s += self.a[k * m + i] * z[i];
            }
            s *= self.tau[k];
            z[k] -= s * self.v0[k];
            for i in k + 1..m {
                z[i] -= s * self.a[k * m + i];
            }
        }
        z
    }

    /// Basic least-squares solution: the leading `rank` pivoted columns are
    /// solved for, the remaining coefficients are zero.
    pub fn solve(&self, y: &[f64], rcond: f64) -> Result<Vec<f64>> {
        if y.len() != self.rows {
            return Err(Error::arg(format!(
                "right-hand side of length {} for {} rows",
                y.len(),
                self.rows
            )));
        }
        let m = self.rows;
        let r = self.rank(rcond);
        let z = self.apply_qt(y);
        let mut w = vec![0.0; r];
        for i in (0..r).rev() {
            let mut s = z[i];
            for j in i + 1..r {
                s -= self.a[j * m + i] * w[j];
            }
            w[i] = s / self.a[i * m + i];
        }
        let mut coeffs = vec![0.0; self.cols];
        for (k, wk) in w.into_iter().enumerate() {
            coeffs[self.perm[k]] = wk;
        }
        Ok(coeffs)
    }
}

/// Default relative rank cutoff: machine epsilon times the larger dimension.
pub fn default_rcond(a: &DenseMatrix) -> f64 {
    f64::EPSILON * a.rows().max(a.cols()) as f64
}

/// Minimizer of `‖A c − y‖₂`; rank-deficient directions get zero coefficients.
pub fn lstsq(a: &DenseMatrix, y: &[f64]) -> Result<Vec<f64>> {
    lstsq_with_rcond(a, y, default_rcond(a))
}

pub fn lstsq_with_rcond(a: &DenseMatrix, y: &[f64], rcond: f64) -> Result<Vec<f64>> {
    if a.rows() != y.len() {
        return Err(Error::arg(format!(
            "least squares with {} rows but {} observations",
            a.rows(),
            y.len()
        )));
    }
    PivotedQr::new(a)?.solve(y, rcond)
}
