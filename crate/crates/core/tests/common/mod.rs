//! Independent reference implementations used to check the library.
//!
//! Nothing here calls into `runge_lab` numerics: extended-precision values use
//! double-double arithmetic, linear systems use plain Gaussian elimination.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Unevaluated sum `hi + lo` with `|lo| ≤ ulp(hi)/2`, roughly 32 significant digits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn sqrt(self) -> Dd {
        if self.hi <= 0.0 {
            return Dd::ZERO;
        }
        let x = Dd::from(self.hi.sqrt());
        // one Newton step doubles the accurate digits
        x + (self - x * x) / (x * Dd::from(2.0))
    }

    pub fn cmp(self, other: Dd) -> Ordering {
        (self - other).hi.partial_cmp(&0.0).unwrap_or(Ordering::Equal)
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let (hi, lo) = quick_two_sum(p, e + self.hi * b.lo + self.lo * b.hi);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b * Dd::from(q1);
        let q2 = r.hi / b.hi;
        let r = r - b * Dd::from(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::from(q3)
    }
}

pub fn dd_runge(x: f64) -> Dd {
    let x = Dd::from(x);
    Dd::ONE / (Dd::ONE + Dd::from(25.0) * x * x)
}

/// Lagrange interpolant through `(xs, ys)` at `x`, product form, in double-double.
pub fn dd_lagrange(xs: &[f64], ys: &[Dd], x: f64) -> Dd {
    if let Some(j) = xs.iter().position(|&xj| xj == x) {
        return ys[j];
    }
    let x = Dd::from(x);
    let mut total = Dd::ZERO;
    for (j, &xj) in xs.iter().enumerate() {
        let mut term = ys[j];
        for (k, &xk) in xs.iter().enumerate() {
            if k != j {
                term = term * (x - Dd::from(xk)) / (Dd::from(xj) - Dd::from(xk));
            }
        }
        total = total + term;
    }
    total
}

/// Max over `grid` of `|runge − p|` where `p` interpolates Runge at `nodes`.
pub fn dd_runge_interp_error(nodes: &[f64], grid: &[f64]) -> f64 {
    let ys: Vec<Dd> = nodes.iter().map(|&x| dd_runge(x)).collect();
    grid.iter()
        .map(|&x| (dd_runge(x) - dd_lagrange(nodes, &ys, x)).abs().to_f64())
        .fold(0.0, f64::max)
}

pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| if i + 1 == n { hi } else { lo + (hi - lo) * i as f64 / (n - 1) as f64 })
        .collect()
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations in double-double.
pub fn dd_symmetric_eigenvalues(a: &[Vec<Dd>]) -> Vec<f64> {
    let n = a.len();
    let mut a = a.to_vec();
    for _ in 0..100 {
        let mut off = Dd::ZERO;
        let mut diag = Dd::ZERO;
        for i in 0..n {
            diag = diag + a[i][i] * a[i][i];
            for j in 0..n {
                if i != j {
                    off = off + a[i][j] * a[i][j];
                }
            }
        }
        if off.to_f64() <= 1e-60 * diag.to_f64() {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].hi == 0.0 {
                    continue;
                }
                let two = Dd::from(2.0);
                let zeta = (a[q][q] - a[p][p]) / (two * a[p][q]);
                let root = (Dd::ONE + zeta * zeta).sqrt();
                let t = if zeta.hi >= 0.0 {
                    Dd::ONE / (zeta + root)
                } else {
                    -(Dd::ONE / (root - zeta))
                };
                let c = Dd::ONE / (Dd::ONE + t * t).sqrt();
                let s = c * t;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i].to_f64()).collect();
    ev.sort_by(|x, y| y.total_cmp(x));
    ev
}

/// 2-norm condition number of the monomial Vandermonde matrix on `nodes`.
pub fn dd_vandermonde_condition(nodes: &[f64], degree: usize) -> f64 {
    let rows: Vec<Vec<Dd>> = nodes
        .iter()
        .map(|&x| {
            let mut r = vec![Dd::ONE];
            for j in 1..=degree {
                r.push(r[j - 1] * Dd::from(x));
            }
            r
        })
        .collect();
    let p = degree + 1;
    let gram: Vec<Vec<Dd>> = (0..p)
        .map(|i| (0..p).map(|j| rows.iter().fold(Dd::ZERO, |s, r| s + r[i] * r[j])).collect())
        .collect();
    let ev = dd_symmetric_eigenvalues(&gram);
    (ev[0] / ev[p - 1]).sqrt()
}

/// Dense Gaussian elimination with partial pivoting.
pub fn lu_solve(a: &[Vec<f64>], b: &[f64]) -> Vec<f64> {
    let n = b.len();
    let mut m: Vec<Vec<f64>> = a.to_vec();
    let mut x = b.to_vec();
    for k in 0..n {
        let piv = (k..n).max_by(|&i, &j| m[i][k].abs().total_cmp(&m[j][k].abs())).unwrap();
        m.swap(k, piv);
        x.swap(k, piv);
        for i in k + 1..n {
            let f = m[i][k] / m[k][k];
            for j in k..n {
                m[i][j] -= f * m[k][j];
            }
            x[i] -= f * x[k];
        }
    }
    for k in (0..n).rev() {
        let s: f64 = (k + 1..n).map(|j| m[k][j] * x[j]).sum();
        x[k] = (x[k] - s) / m[k][k];
    }
    x
}

/// Natural cubic spline through `(xs, ys)` from a dense solve of the full
/// moment system, evaluated with the textbook moment formula.
pub struct OracleSpline {
    xs: Vec<f64>,
    ys: Vec<f64>,
    m: Vec<f64>,
}

impl OracleSpline {
    pub fn new(xs: &[f64], ys: &[f64]) -> Self {
        let n = xs.len();
        let mut a = vec![vec![0.0; n]; n];
        let mut b = vec![0.0; n];
        a[0][0] = 1.0;
        a[n - 1][n - 1] = 1.0;
        for i in 1..n - 1 {
            let (h0, h1) = (xs[i] - xs[i - 1], xs[i + 1] - xs[i]);
            a[i][i - 1] = h0 / 6.0;
            a[i][i] = (h0 + h1) / 3.0;
            a[i][i + 1] = h1 / 6.0;
            b[i] = (ys[i + 1] - ys[i]) / h1 - (ys[i] - ys[i - 1]) / h0;
        }
        Self {
            xs: xs.to_vec(),
            ys: ys.to_vec(),
            m: lu_solve(&a, &b),
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        let n = self.xs.len();
        let i = match self.xs.iter().rposition(|&k| k <= x) {
            Some(i) if i + 1 < n => i,
            Some(_) => n - 2,
            None => 0,
        };
        let (x0, x1) = (self.xs[i], self.xs[i + 1]);
        let h = x1 - x0;
        let (a, b) = (x1 - x, x - x0);
        self.m[i] * a.powi(3) / (6.0 * h)
            + self.m[i + 1] * b.powi(3) / (6.0 * h)
            + (self.ys[i] / h - self.m[i] * h / 6.0) * a
            + (self.ys[i + 1] / h - self.m[i + 1] * h / 6.0) * b
    }
}

/// Exhaustive nearest-node search: every target against every node, ties to
/// the lower index, duplicates removed, sorted.
pub fn brute_nearest(nodes: &[f64], targets: &[f64]) -> Vec<usize> {
    let mut out: Vec<usize> = targets
        .iter()
        .map(|&t| {
            // distances equal up to round-off in the target count as ties,
            // which go to the leftmost node
            let mut best = 0;
            for (i, &x) in nodes.iter().enumerate() {
                if (x - t).abs() < (nodes[best] - t).abs() - 1e-12 {
                    best = i;
                }
            }
            best
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Chebyshev–Lobatto points `cos(kπ/m)` on `[lo, hi]`, written independently
/// of the library.
pub fn lobatto_targets(m: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..=m)
        .map(|k| {
            let t = (std::f64::consts::PI * k as f64 / m as f64).cos();
            0.5 * (lo + hi) + 0.5 * (hi - lo) * t
        })
        .collect()
}

/// Minimize `objective` over a 3-D box by successively refined grid search,
/// ending at step `resolution`.
pub fn grid_search_3(objective: impl Fn(&[f64; 3]) -> f64, half_width: f64, resolution: f64) -> ([f64; 3], f64) {
    let mut center = [0.0; 3];
    let mut step = half_width / 10.0;
    let mut span = 10i32;
    let mut best = (center, objective(&center));
    loop {
        for i in -span..=span {
            for j in -span..=span {
                for k in -span..=span {
                    let p = [
                        center[0] + i as f64 * step,
                        center[1] + j as f64 * step,
                        center[2] + k as f64 * step,
                    ];
                    let v = objective(&p);
                    if v < best.1 {
                        best = (p, v);
                    }
                }
            }
        }
        if step <= resolution * 1.000001 {
            return best;
        }
        center = best.0;
        step /= 10.0;
        span = 15;
    }
}

/// Second derivative of a monomial-coefficient polynomial at `x`.
pub fn monomial_second_derivative(c: &[f64], x: f64) -> f64 {
    c.iter()
        .enumerate()
        .skip(2)
        .map(|(j, cj)| cj * (j * (j - 1)) as f64 * x.powi(j as i32 - 2))
        .sum()
}
