//! Evaluable approximations: polynomials in a coefficient basis, barycentric
//! Lagrange interpolants and piecewise assemblies of either.

use crate::domain::{Interval, NodeSet};
use crate::error::{Error, Result};

/// Polynomial basis for [`BasisPoly`].
///
/// Monomials are evaluated in the raw abscissa. Chebyshev and Legendre
/// polynomials live on `[-1, 1]` and are composed with the affine map from the
/// polynomial's interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    Monomial,
    ChebyshevT,
    Legendre,
}

impl Basis {
    pub fn name(&self) -> &'static str {
        match self {
            Basis::Monomial => "monomial",
            Basis::ChebyshevT => "chebyshev",
            Basis::Legendre => "legendre",
        }
    }
}

/// `Σ coeffs[k] · φ_k(x)` for a basis `φ`.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisPoly {
    basis: Basis,
    coeffs: Vec<f64>,
    interval: Interval,
}

impl BasisPoly {
    pub fn new(basis: Basis, coeffs: Vec<f64>, interval: Interval) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::arg("polynomial needs at least one coefficient"));
        }
        Ok(Self {
            basis,
            coeffs,
            interval,
        })
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn interval(&self) -> Interval {
        self.interval
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: f64) -> f64 {
        let c = &self.coeffs;
        match self.basis {
            Basis::Monomial => c.iter().rev().fold(0.0, |acc, &ck| acc * x + ck),
            Basis::ChebyshevT => clenshaw_chebyshev(c, self.interval.to_reference(x)),
            Basis::Legendre => clenshaw_legendre(c, self.interval.to_reference(x)),
        }
    }

    /// The derivative as a polynomial in the same basis and interval.
    pub fn derivative(&self) -> BasisPoly {
        let c = &self.coeffs;
        let n = c.len() - 1;
        if n == 0 {
            return BasisPoly {
                basis: self.basis,
                coeffs: vec![0.0],
                interval: self.interval,
            };
        }
        let scale = 2.0 / self.interval.width();
        let coeffs = match self.basis {
            Basis::Monomial => (1..=n).map(|k| k as f64 * c[k]).collect(),
            Basis::ChebyshevT => {
                // d_{k-1} = d_{k+1} + 2k c_k, then halve d_0.
                let mut d = vec![0.0; n + 2];
                for k in (1..=n).rev() {
                    d[k - 1] = d[k + 1] + 2.0 * k as f64 * c[k];
                }
                d[0] *= 0.5;
                d.truncate(n);
                d.into_iter().map(|v| v * scale).collect()
            }
            Basis::Legendre => {
                // P'_j = Σ (2k+1) P_k over k < j with j - k odd.
                let mut tail = vec![0.0; n + 3];
                for j in (0..=n).rev() {
                    tail[j] = c[j] + tail[j + 2];
                }
                (0..n).map(|k| (2 * k + 1) as f64 * tail[k + 1] * scale).collect()
            }
        };
        BasisPoly {
            basis: self.basis,
            coeffs,
            interval: self.interval,
        }
    }
}

/// `Σ c_k T_k(t)` by Clenshaw's recurrence.
pub(crate) fn clenshaw_chebyshev(c: &[f64], t: f64) -> f64 {
    let (mut b1, mut b2) = (0.0, 0.0);
    for &ck in c.iter().skip(1).rev() {
        let b0 = ck + 2.0 * t * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    c[0] + t * b1 - b2
}

/// `Σ c_k P_k(t)` by Clenshaw's recurrence for
/// `P_{k+1} = ((2k+1) t P_k - k P_{k-1}) / (k+1)`.
pub(crate) fn clenshaw_legendre(c: &[f64], t: f64) -> f64 {
    let n = c.len() - 1;
    let (mut b1, mut b2) = (0.0, 0.0);
    for k in (1..=n).rev() {
        let kf = k as f64;
        let alpha = (2.0 * kf + 1.0) * t / (kf + 1.0);
        let beta_next = -(kf + 1.0) / (kf + 2.0);
        let b0 = c[k] + alpha * b1 + beta_next * b2;
        b2 = b1;
        b1 = b0;
    }
    c[0] + t * b1 - 0.5 * b2
}

/// Lagrange interpolant in second (true) barycentric form.
#[derive(Debug, Clone, PartialEq)]
pub struct Barycentric {
    nodes: NodeSet,
    ys: Vec<f64>,
    weights: Vec<f64>,
    // nodes mapped onto [-1, 1]; node hits are detected on these
    ts: Vec<f64>,
}

impl Barycentric {
    /// Build with the generic O(n²) weights `1 / Π_{k≠j} (t_j - t_k)`,
    /// computed on the reference interval and rescaled to unit max.
    pub fn new(nodes: NodeSet, ys: Vec<f64>) -> Result<Self> {
        let ts: Vec<f64> = nodes.xs().iter().map(|&x| nodes.interval().to_reference(x)).collect();
        let n = ts.len();
        // Accumulate in log-magnitude to stay clear of overflow at high degree.
        let mut log_mag = vec![0.0; n];
        let mut sign = vec![1.0; n];
        for j in 0..n {
            for k in 0..n {
                if k != j {
                    let d = ts[j] - ts[k];
                    log_mag[j] -= d.abs().ln();
                    if d < 0.0 {
                        sign[j] = -sign[j];
                    }
                }
            }
        }
        let top = log_mag.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let weights = (0..n).map(|j| sign[j] * (log_mag[j] - top).exp()).collect();
        Self::with_weights(nodes, ys, weights)
    }

    /// Build with caller-supplied weights (e.g. closed-form Chebyshev weights).
    pub fn with_weights(nodes: NodeSet, ys: Vec<f64>, weights: Vec<f64>) -> Result<Self> {
        if ys.len() != nodes.len() || weights.len() != nodes.len() {
            return Err(Error::arg(format!(
                "barycentric form needs one ordinate and one weight per node ({} nodes, {} ordinates, {} weights)",
                nodes.len(),
                ys.len(),
                weights.len()
            )));
        }
        if let Some(i) = weights.iter().position(|w| *w == 0.0 || !w.is_finite()) {
            return Err(Error::arg(format!("barycentric weight {i} is zero or non-finite")));
        }
        let ts = nodes.xs().iter().map(|&x| nodes.interval().to_reference(x)).collect();
        Ok(Self {
            nodes,
            ys,
            weights,
            ts,
        })
    }

    pub fn nodes(&self) -> &NodeSet {
        &self.nodes
    }

    pub fn ys(&self) -> &[f64] {
        &self.ys
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn interval(&self) -> Interval {
        self.nodes.interval()
    }

    pub fn eval(&self, x: f64) -> f64 {
        let t = self.nodes.interval().to_reference(x);
        let mut num = 0.0;
        let mut den = 0.0;
        for ((&tj, &wj), &yj) in self.ts.iter().zip(&self.weights).zip(&self.ys) {
            if t == tj {
                return yj;
            }
            let q = wj / (t - tj);
            num += q * yj;
            den += q;
        }
        num / den
    }
}

/// Approximants glued over consecutive subintervals.
#[derive(Debug, Clone, PartialEq)]
pub struct Piecewise {
    breakpoints: Vec<f64>,
    pieces: Vec<Approximant>,
}

impl Piecewise {
    /// `pieces[i]` owns `[breakpoints[i], breakpoints[i+1])`; the last piece
    /// also owns the right end.
    pub fn new(breakpoints: Vec<f64>, pieces: Vec<Approximant>) -> Result<Self> {
        if breakpoints.len() < 2 {
            return Err(Error::arg("piecewise approximant needs at least two breakpoints"));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::arg("breakpoints must be strictly increasing"));
        }
        if pieces.len() != breakpoints.len() - 1 {
            return Err(Error::arg(format!(
                "{} pieces for {} breakpoint gaps",
                pieces.len(),
                breakpoints.len() - 1
            )));
        }
        Ok(Self { breakpoints, pieces })
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn pieces(&self) -> &[Approximant] {
        &self.pieces
    }

    pub fn span(&self) -> (f64, f64) {
        (self.breakpoints[0], *self.breakpoints.last().unwrap())
    }

    /// Index of the piece owning `x`.
    pub fn locate(&self, x: f64) -> Result<usize> {
        let (lo, hi) = self.span();
        if !(x >= lo && x <= hi) {
            return Err(Error::Domain { x, lo, hi });
        }
        let k = self.breakpoints.partition_point(|&b| b <= x);
        Ok(k.saturating_sub(1).min(self.pieces.len() - 1))
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        let i = self.locate(x)?;
        self.pieces[i].eval(x)
    }
}

/// Anything the library can evaluate.
#[derive(Debug, Clone, PartialEq)]
pub enum Approximant {
    Basis(BasisPoly),
    Barycentric(Barycentric),
    Piecewise(Piecewise),
}

impl Approximant {
    pub fn eval(&self, x: f64) -> Result<f64> {
        match self {
            Approximant::Basis(p) => Ok(p.eval(x)),
            Approximant::Barycentric(b) => Ok(b.eval(x)),
            Approximant::Piecewise(p) => p.eval(x),
        }
    }

    /// Number of free parameters: coefficients, nodes, or the sum over pieces.
    pub fn n_params(&self) -> usize {
        match self {
            Approximant::Basis(p) => p.coeffs().len(),
            Approximant::Barycentric(b) => b.nodes().len(),
            Approximant::Piecewise(p) => p.pieces().iter().map(Approximant::n_params).sum(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Approximant::Basis(p) => p.basis().name(),
            Approximant::Barycentric(_) => "barycentric",
            Approximant::Piecewise(_) => "piecewise",
        }
    }

    pub fn as_basis(&self) -> Option<&BasisPoly> {
        match self {
            Approximant::Basis(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_piecewise(&self) -> Option<&Piecewise> {
        match self {
            Approximant::Piecewise(p) => Some(p),
            _ => None,
        }
    }
}

impl From<BasisPoly> for Approximant {
    fn from(p: BasisPoly) -> Self {
        Approximant::Basis(p)
    }
}

impl From<Barycentric> for Approximant {
    fn from(b: Barycentric) -> Self {
        Approximant::Barycentric(b)
    }
}

impl From<Piecewise> for Approximant {
    fn from(p: Piecewise) -> Self {
        Approximant::Piecewise(p)
    }
}

/// Evaluate `approx` at every abscissa in `xs`.
pub fn evaluate(approx: &Approximant, xs: &[f64]) -> Result<Vec<f64>> {
    xs.iter().map(|&x| approx.eval(x)).collect()
}
