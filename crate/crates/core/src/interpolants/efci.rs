use crate::approximant::{Approximant, Basis, BasisPoly};
use crate::domain::{SampleSet, TargetFunction};
use crate::error::{Error, Result};
use crate::linalg::{design_matrix, lstsq, DenseMatrix};

/// Candidate external-point counts tried when [`EfciConfig::search`] is set.
pub const EFCI_SEARCH_M: [usize; 5] = [2, 4, 6, 8, 10];

/// Settings for [`efci_fit`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EfciConfig {
    pub degree: usize,
    /// Total number of external points, split evenly between the two bands.
    pub m: usize,
    /// Width of each boundary band.
    pub epsilon: f64,
    /// Sweep `m` over [`EFCI_SEARCH_M`] and keep the best.
    pub search: bool,
    /// Weight `w` of the `P''(x*) = 0` rows; each row is scaled by `√w`.
    pub constraint_weight: f64,
}

impl EfciConfig {
    pub fn new(degree: usize, m: usize) -> Self {
        Self {
            degree,
            m,
            ..Self::default()
        }
    }
}

impl Default for EfciConfig {
    fn default() -> Self {
        Self {
            degree: 10,
            m: 4,
            epsilon: 0.1,
            search: false,
            constraint_weight: 10.0,
        }
    }
}

/// Result of [`efci_fit`].
#[derive(Debug, Clone)]
pub struct EfciFit {
    pub approximant: Approximant,
    pub efc_positions: Vec<f64>,
    /// Squared data mismatch plus squared deviation from `f` at the EFC positions.
    pub objective: f64,
    /// The `m` that produced this fit.
    pub m: usize,
}

/// Least-squares polynomial with curvature-damping rows `√w·P''(x*) = 0` at
/// `m/2` equispaced points in each boundary band `[lo, lo+ε]`, `[hi−ε, hi]`.
pub fn efci_fit(samples: &SampleSet, f: &TargetFunction, cfg: &EfciConfig) -> Result<EfciFit> {
    let iv = samples.interval();
    if cfg.degree < 2 {
        return Err(Error::arg(format!("EFCI needs degree >= 2, got {}", cfg.degree)));
    }
    if !(cfg.epsilon > 0.0) || cfg.epsilon >= iv.width() / 2.0 {
        return Err(Error::arg(format!(
            "EFCI epsilon must lie in (0, {}), got {}",
            iv.width() / 2.0,
            cfg.epsilon
        )));
    }
    if !(cfg.constraint_weight > 0.0) || !cfg.constraint_weight.is_finite() {
        return Err(Error::arg(format!("EFCI constraint weight must be > 0, got {}", cfg.constraint_weight)));
    }
    if !cfg.search && (cfg.m < 2 || cfg.m % 2 != 0) {
        return Err(Error::arg(format!("EFCI m must be even and >= 2, got {}", cfg.m)));
    }
    if samples.len() < 2 {
        return Err(Error::arg("EFCI needs at least 2 samples"));
    }

    if !cfg.search {
        return efci_single(samples, f, cfg, cfg.m);
    }
    let mut best: Option<EfciFit> = None;
    for m in EFCI_SEARCH_M {
        let fit = efci_single(samples, f, cfg, m)?;
        // strict comparison keeps the smaller m on ties
        if best.as_ref().map_or(true, |b| fit.objective < b.objective) {
            best = Some(fit);
        }
    }
    Ok(best.expect("search list is non-empty"))
}

/// EFC positions: `m/2` equispaced points per band (the band midpoint when
/// `m/2 = 1`), left band first.
pub fn efc_positions(lo: f64, hi: f64, epsilon: f64, m: usize) -> Vec<f64> {
    let per_band = m / 2;
    let band = |a: f64, b: f64| -> Vec<f64> {
        if per_band == 1 {
            vec![0.5 * (a + b)]
        } else {
            (0..per_band)
                .map(|i| a + (b - a) * i as f64 / (per_band - 1) as f64)
                .collect()
        }
    };
    let mut out = band(lo, lo + epsilon);
    out.extend(band(hi - epsilon, hi));
    out
}

fn efci_single(samples: &SampleSet, f: &TargetFunction, cfg: &EfciConfig, m: usize) -> Result<EfciFit> {
    let iv = samples.interval();
    let positions = efc_positions(iv.lo(), iv.hi(), cfg.epsilon, m);
    let p = cfg.degree + 1;
    let data = design_matrix(samples.nodes(), cfg.degree, Basis::Monomial);
    let sw = cfg.constraint_weight.sqrt();
    let curvature = DenseMatrix::from_fn(positions.len(), p, |i, j| {
        if j < 2 {
            0.0
        } else {
            sw * (j * (j - 1)) as f64 * positions[i].powi(j as i32 - 2)
        }
    });
    let stacked = data.vstack(&curvature)?;
    let mut rhs = samples.ys().to_vec();
    rhs.resize(stacked.rows(), 0.0);
    let coeffs = lstsq(&stacked, &rhs)?;
    let poly = BasisPoly::new(Basis::Monomial, coeffs, iv)?;

    let data_term: f64 = samples.xs().iter().zip(samples.ys()).map(|(x, y)| (poly.eval(*x) - y).powi(2)).sum();
    let efc_term: f64 = positions.iter().map(|&x| (poly.eval(x) - f.eval(x)).powi(2)).sum();
    Ok(EfciFit {
        approximant: poly.into(),
        efc_positions: positions,
        objective: data_term + efc_term,
        m,
    })
}
