//! Value types shared by every part of the library: the working interval,
//! node and sample sets, target functions and numeric tolerances.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// The Runge function `1 / (1 + 25 x²)`.
pub fn runge(x: f64) -> f64 {
    1.0 / (1.0 + 25.0 * x * x)
}

/// A closed interval `[lo, hi]` with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) {
            return Err(Error::arg(format!("interval endpoints must be finite, got [{lo}, {hi}]")));
        }
        if lo >= hi {
            return Err(Error::arg(format!("interval requires lo < hi, got [{lo}, {hi}]")));
        }
        Ok(Self { lo, hi })
    }

    /// The reference interval `[-1, 1]`.
    pub const fn unit() -> Self {
        Self { lo: -1.0, hi: 1.0 }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.lo && x <= self.hi
    }

    /// Affine map onto `[-1, 1]`. Exact for the unit interval.
    pub fn to_reference(&self, x: f64) -> f64 {
        (2.0 * x - (self.lo + self.hi)) / (self.hi - self.lo)
    }

    /// Inverse of [`Interval::to_reference`]; `±1` land exactly on the endpoints.
    pub fn from_reference(&self, t: f64) -> f64 {
        if t == -1.0 {
            self.lo
        } else if t == 1.0 {
            self.hi
        } else {
            self.midpoint() + 0.5 * self.width() * t
        }
    }

    /// `n` equispaced points covering the interval, endpoints included exactly.
    pub fn linspace(&self, n: usize) -> Vec<f64> {
        match n {
            0 => Vec::new(),
            1 => vec![self.lo],
            _ => {
                let step = self.width() / (n - 1) as f64;
                let mut xs: Vec<f64> = (0..n).map(|i| self.lo + i as f64 * step).collect();
                xs[n - 1] = self.hi;
                xs
            }
        }
    }
}

impl Default for Interval {
    fn default() -> Self {
        Self::unit()
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// How a node set was generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeFamily {
    Equispaced,
    ChebyshevRoots,
    ChebyshevLobatto,
    MockChebyshevSubset,
    Custom,
}

/// Strictly increasing abscissae inside an interval.
///
/// A single node is allowed: the one-point Chebyshev grid (the root of `T₁`)
/// is a legitimate member of its family.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeSet {
    interval: Interval,
    xs: Vec<f64>,
    family: NodeFamily,
}

impl NodeSet {
    pub fn new(interval: Interval, xs: Vec<f64>, family: NodeFamily) -> Result<Self> {
        if xs.is_empty() {
            return Err(Error::arg("node set must not be empty"));
        }
        for (i, &x) in xs.iter().enumerate() {
            if !interval.contains(x) {
                return Err(Error::arg(format!("node {i} = {x} lies outside {interval}")));
            }
        }
        if let Some(i) = xs.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::arg(format!(
                "nodes must be strictly increasing: x[{i}] = {} >= x[{}] = {}",
                xs[i],
                i + 1,
                xs[i + 1]
            )));
        }
        Ok(Self { interval, xs, family })
    }

    pub fn custom(interval: Interval, xs: Vec<f64>) -> Result<Self> {
        Self::new(interval, xs, NodeFamily::Custom)
    }

    pub fn interval(&self) -> Interval {
        self.interval
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn family(&self) -> NodeFamily {
        self.family
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    /// Keep only the nodes at `indices` (strictly increasing, in range).
    pub fn select(&self, indices: &[usize], family: NodeFamily) -> Result<Self> {
        let mut xs = Vec::with_capacity(indices.len());
        for &i in indices {
            let x = *self
                .xs
                .get(i)
                .ok_or_else(|| Error::arg(format!("index {i} out of range for {} nodes", self.len())))?;
            xs.push(x);
        }
        Self::new(self.interval, xs, family)
    }
}

/// Function samples at a node set.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet {
    nodes: NodeSet,
    ys: Vec<f64>,
}

impl SampleSet {
    pub fn new(nodes: NodeSet, ys: Vec<f64>) -> Result<Self> {
        if ys.len() != nodes.len() {
            return Err(Error::arg(format!(
                "{} ordinates for {} nodes",
                ys.len(),
                nodes.len()
            )));
        }
        if let Some(i) = ys.iter().position(|y| !y.is_finite()) {
            return Err(Error::arg(format!("ordinate {i} is not finite ({})", ys[i])));
        }
        Ok(Self { nodes, ys })
    }

    /// Sample `f` at every node.
    pub fn from_fn(nodes: NodeSet, f: &TargetFunction) -> Result<Self> {
        let ys = nodes.xs().iter().map(|&x| f.eval(x)).collect();
        Self::new(nodes, ys)
    }

    pub fn nodes(&self) -> &NodeSet {
        &self.nodes
    }

    pub fn xs(&self) -> &[f64] {
        self.nodes.xs()
    }

    pub fn ys(&self) -> &[f64] {
        &self.ys
    }

    pub fn interval(&self) -> Interval {
        self.nodes.interval()
    }

    pub fn len(&self) -> usize {
        self.ys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ys.is_empty()
    }

    pub fn select(&self, indices: &[usize], family: NodeFamily) -> Result<Self> {
        let nodes = self.nodes.select(indices, family)?;
        let ys = indices.iter().map(|&i| self.ys[i]).collect();
        Self::new(nodes, ys)
    }
}

/// A named real function, total and finite on the working interval.
#[derive(Clone)]
pub struct TargetFunction {
    name: String,
    f: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl TargetFunction {
    pub fn new(name: impl Into<String>, f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Self {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    pub fn runge() -> Self {
        Self::new("runge", runge)
    }

    /// `Σ coeffs[k] · x^k`, evaluated by Horner's rule.
    pub fn polynomial(name: impl Into<String>, coeffs: Vec<f64>) -> Self {
        Self::new(name, move |x| coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c))
    }

    /// `x^k`.
    pub fn power(k: u32) -> Self {
        Self::new(format!("power:{k}"), move |x: f64| x.powi(k as i32))
    }

    /// The Chebyshev polynomial `T_k` on `[-1, 1]`, by its three-term recurrence.
    pub fn chebyshev_t(k: usize) -> Self {
        Self::new(format!("chebyshev:{k}"), move |x| {
            let (mut prev, mut cur) = (1.0, x);
            if k == 0 {
                return 1.0;
            }
            for _ in 1..k {
                let next = 2.0 * x * cur - prev;
                prev = cur;
                cur = next;
            }
            cur
        })
    }

    pub fn constant(c: f64) -> Self {
        Self::new(format!("constant:{c}"), move |_| c)
    }

    /// Look a function up by name: `runge`, `sin`, `constant:<c>`,
    /// `power:<k>` or `chebyshev:<k>`.
    pub fn by_name(name: &str) -> Result<Self> {
        let bad = || Error::usage(format!("unknown target function '{name}'"));
        match name {
            "runge" => return Ok(Self::runge()),
            "sin" => return Ok(Self::new("sin", f64::sin)),
            _ => {}
        }
        let (kind, arg) = name.split_once(':').ok_or_else(bad)?;
        match kind {
            "constant" => Ok(Self::constant(arg.parse().map_err(|_| bad())?)),
            "power" => Ok(Self::power(arg.parse().map_err(|_| bad())?)),
            "chebyshev" => Ok(Self::chebyshev_t(arg.parse().map_err(|_| bad())?)),
            _ => Err(bad()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, x: f64) -> f64 {
        (self.f)(x)
    }

    pub fn eval_many(&self, xs: &[f64]) -> Vec<f64> {
        xs.iter().map(|&x| self.eval(x)).collect()
    }
}

impl fmt::Debug for TargetFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TargetFunction").field("name", &self.name).finish()
    }
}

/// Comparison tolerances used across the library and its tests.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Agreement required between an interpolant and its own samples.
    pub node_match: f64,
    /// Allowed jump between adjacent pieces of a piecewise approximant.
    pub continuity: f64,
    /// Relative pivot threshold for positive-definiteness checks.
    pub linalg_rel: f64,
}

impl Tolerances {
    pub fn new(node_match: f64, continuity: f64, linalg_rel: f64) -> Result<Self> {
        for (name, v) in [("node_match", node_match), ("continuity", continuity), ("linalg_rel", linalg_rel)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::arg(format!("tolerance {name} must be positive, got {v}")));
            }
        }
        Ok(Self {
            node_match,
            continuity,
            linalg_rel,
        })
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            node_match: 1e-9,
            continuity: 1e-8,
            linalg_rel: 1e-10,
        }
    }
}
