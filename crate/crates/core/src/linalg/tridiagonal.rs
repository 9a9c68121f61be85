use crate::error::{Error, Result};

/// Solve a tridiagonal system by the Thomas algorithm.
///
/// `sub[i]` sits at row `i + 1`, column `i`; `sup[i]` at row `i`, column `i + 1`.
pub fn solve_tridiagonal(sub: &[f64], diag: &[f64], sup: &[f64], rhs: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    if n == 0 {
        return Err(Error::arg("empty tridiagonal system"));
    }
    if rhs.len() != n || sub.len() != n - 1 || sup.len() != n - 1 {
        return Err(Error::arg(format!(
            "tridiagonal shapes: diag {n}, rhs {}, sub {}, sup {} (off-diagonals need n - 1)",
            rhs.len(),
            sub.len(),
            sup.len()
        )));
    }
    let mut c = vec![0.0; n];
    let mut d = vec![0.0; n];
    let mut pivot = diag[0];
    for i in 0..n {
        if i > 0 {
            pivot = diag[i] - sub[i - 1] * c[i - 1];
        }
        if pivot == 0.0 || !pivot.is_finite() {
            return Err(Error::numeric(format!("zero pivot in tridiagonal solve at row {i}")));
        }
        if i + 1 < n {
            c[i] = sup[i] / pivot;
        }
        d[i] = if i == 0 { rhs[0] } else { rhs[i] - sub[i - 1] * d[i - 1] } / pivot;
    }
    let mut x = d;
    for i in (0..n - 1).rev() {
        x[i] -= c[i] * x[i + 1];
    }
    Ok(x)
}
