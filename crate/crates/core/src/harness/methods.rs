//! Method registry: names, documented parameters, and dispatch from an
//! [`ExperimentConfig`] to the matching fitting routine.

use super::{ExperimentConfig, MarkerSet, ParamValue};
use crate::approximant::{Approximant, Basis};
use crate::domain::{Interval, NodeSet, SampleSet, TargetFunction};
use crate::error::{Error, Result};
use crate::interpolants::{
    chebyshev_interpolate, constrained_mock_chebyshev_lstsq, cubic_spline, default_ls_degree, efci_fit,
    fit_regularized, lagrange_interpolate, mock_chebyshev_interpolate, svd_truncated_fit_with_rank, tikhonov_fit,
    tisi_fit, BandStrategy, EfciConfig, Penalty, TikhonovOperator, TisiConfig,
};
use crate::nodes::{chebyshev_lobatto, chebyshev_roots, equispaced, mock_chebyshev_subset};

/// Value type a method parameter accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    Real,
    /// Non-negative integer.
    Integer,
    /// `true`/`false` (or `1`/`0`).
    Flag,
    Choice(&'static [&'static str]),
}

#[derive(Debug, Clone, Copy)]
pub struct ParamSpec {
    pub key: &'static str,
    pub kind: ParamKind,
    pub help: &'static str,
}

#[derive(Debug, Clone, Copy)]
pub struct MethodSpec {
    pub name: &'static str,
    pub summary: &'static str,
    pub params: &'static [ParamSpec],
}

const NODE_CHOICES: &[&str] = &["equispaced", "chebyshev", "lobatto"];
const STRATEGY_CHOICES: &[&str] = &["lagrange-equispaced", "lagrange-cheb", "spline-local"];

const NODES: ParamSpec = ParamSpec {
    key: "nodes",
    kind: ParamKind::Choice(NODE_CHOICES),
    help: "sample node family (default equispaced)",
};
const ALPHA: ParamSpec = ParamSpec {
    key: "alpha",
    kind: ParamKind::Real,
    help: "penalty strength (default 1e-3)",
};

static METHODS: &[MethodSpec] = &[
    MethodSpec {
        name: "lagrange",
        summary: "barycentric Lagrange interpolation",
        params: &[NODES],
    },
    MethodSpec {
        name: "chebyshev",
        summary: "interpolation at n_samples Chebyshev roots",
        params: &[],
    },
    MethodSpec {
        name: "spline",
        summary: "natural cubic spline",
        params: &[NODES],
    },
    MethodSpec {
        name: "polyfit",
        summary: "unregularized monomial least squares of the given degree",
        params: &[NODES],
    },
    MethodSpec {
        name: "ridge",
        summary: "ridge-penalized monomial fit",
        params: &[ALPHA, NODES],
    },
    MethodSpec {
        name: "lasso",
        summary: "lasso-penalized monomial fit (coordinate descent)",
        params: &[ALPHA, NODES],
    },
    MethodSpec {
        name: "elastic-net",
        summary: "elastic-net monomial fit (coordinate descent)",
        params: &[
            ALPHA,
            ParamSpec {
                key: "rho",
                kind: ParamKind::Real,
                help: "L1 share in [0, 1] (default 0.5)",
            },
            NODES,
        ],
    },
    MethodSpec {
        name: "tikhonov",
        summary: "Tikhonov-regularized monomial least squares",
        params: &[
            ParamSpec {
                key: "lambda",
                kind: ParamKind::Real,
                help: "regularization weight (default 0.01)",
            },
            ParamSpec {
                key: "operator",
                kind: ParamKind::Choice(&["identity", "second-difference"]),
                help: "regularization operator (default identity)",
            },
            NODES,
        ],
    },
    MethodSpec {
        name: "efci",
        summary: "least squares with curvature-damping external constraints",
        params: &[
            ParamSpec {
                key: "m",
                kind: ParamKind::Integer,
                help: "total external points, even (default 4)",
            },
            ParamSpec {
                key: "epsilon",
                kind: ParamKind::Real,
                help: "boundary band width (default 0.1)",
            },
            ParamSpec {
                key: "weight",
                kind: ParamKind::Real,
                help: "constraint row weight (default 10)",
            },
            ParamSpec {
                key: "search",
                kind: ParamKind::Flag,
                help: "sweep m over 2,4,..,10 (default false)",
            },
            NODES,
        ],
    },
    MethodSpec {
        name: "mock-chebyshev",
        summary: "interpolation on the grid nodes nearest to m+1 Chebyshev-Lobatto points",
        params: &[ParamSpec {
            key: "m",
            kind: ParamKind::Integer,
            help: "Lobatto degree of the targets (default 10)",
        }],
    },
    MethodSpec {
        name: "constrained-mock-chebyshev",
        summary: "least squares over the whole grid, exact on the mock-Chebyshev subset",
        params: &[
            ParamSpec {
                key: "m",
                kind: ParamKind::Integer,
                help: "Lobatto degree of the targets (default 10)",
            },
            ParamSpec {
                key: "ls_degree",
                kind: ParamKind::Integer,
                help: "least-squares degree (default halfway between subset and grid size)",
            },
        ],
    },
    MethodSpec {
        name: "tisi",
        summary: "three-interval interpolation with per-band strategies",
        params: &[
            ParamSpec {
                key: "variant",
                kind: ParamKind::Choice(&["base", "improved"]),
                help: "preset (default improved)",
            },
            ParamSpec {
                key: "epsilon",
                kind: ParamKind::Real,
                help: "end band width (default 0.2)",
            },
            ParamSpec {
                key: "nodes_per_interval",
                kind: ParamKind::Integer,
                help: "nodes per band (default 11)",
            },
            ParamSpec {
                key: "left",
                kind: ParamKind::Choice(STRATEGY_CHOICES),
                help: "left band strategy",
            },
            ParamSpec {
                key: "center",
                kind: ParamKind::Choice(STRATEGY_CHOICES),
                help: "center band strategy",
            },
            ParamSpec {
                key: "right",
                kind: ParamKind::Choice(STRATEGY_CHOICES),
                help: "right band strategy",
            },
        ],
    },
    MethodSpec {
        name: "svd",
        summary: "truncated-SVD polynomial fit",
        params: &[
            ParamSpec {
                key: "threshold",
                kind: ParamKind::Real,
                help: "relative singular value cutoff (default 0)",
            },
            ParamSpec {
                key: "basis",
                kind: ParamKind::Choice(&["legendre", "monomial", "chebyshev"]),
                help: "polynomial basis (default legendre)",
            },
            NODES,
        ],
    },
];

/// All registered methods, in display order.
pub fn methods() -> &'static [MethodSpec] {
    METHODS
}

pub fn method_spec(name: &str) -> Result<&'static MethodSpec> {
    METHODS.iter().find(|m| m.name == name).ok_or_else(|| {
        let names: Vec<&str> = METHODS.iter().map(|m| m.name).collect();
        Error::usage(format!("unknown method '{name}' (known: {})", names.join(", ")))
    })
}

/// Check every key of `params` against the method's documented parameters.
pub fn validate_params<'a>(
    method: &str,
    params: impl IntoIterator<Item = (&'a String, &'a ParamValue)>,
) -> Result<()> {
    let spec = method_spec(method)?;
    for (key, value) in params {
        let p = spec.params.iter().find(|p| p.key == key.as_str()).ok_or_else(|| {
            let allowed: Vec<&str> = spec.params.iter().map(|p| p.key).collect();
            Error::usage(format!(
                "method '{method}' has no parameter '{key}' (allowed: {})",
                if allowed.is_empty() { "none".to_string() } else { allowed.join(", ") }
            ))
        })?;
        check_kind(key, p.kind, value)?;
    }
    Ok(())
}

fn check_kind(key: &str, kind: ParamKind, value: &ParamValue) -> Result<()> {
    let ok = match (kind, value) {
        (ParamKind::Real, ParamValue::Number(_)) => true,
        (ParamKind::Integer, ParamValue::Number(v)) => *v >= 0.0 && v.fract() == 0.0 && *v <= u32::MAX as f64,
        (ParamKind::Flag, ParamValue::Number(v)) => *v == 0.0 || *v == 1.0,
        (ParamKind::Flag, ParamValue::Text(t)) => t == "true" || t == "false",
        (ParamKind::Choice(opts), ParamValue::Text(t)) => opts.contains(&t.as_str()),
        _ => false,
    };
    if ok {
        return Ok(());
    }
    let expected = match kind {
        ParamKind::Real => "a real number".to_string(),
        ParamKind::Integer => "a non-negative integer".to_string(),
        ParamKind::Flag => "true or false".to_string(),
        ParamKind::Choice(opts) => format!("one of {}", opts.join(", ")),
    };
    Err(Error::usage(format!("parameter '{key}' expects {expected}, got '{value}'")))
}

/// A fitted method ready for plotting.
pub(crate) struct Fitted {
    pub label: String,
    pub approximant: Approximant,
    pub markers: Vec<MarkerSet>,
    pub notes: Vec<String>,
}

struct Params<'a>(&'a ExperimentConfig);

impl Params<'_> {
    fn real(&self, key: &str, default: f64) -> f64 {
        match self.0.method_params.get(key) {
            Some(ParamValue::Number(v)) => *v,
            _ => default,
        }
    }

    fn int(&self, key: &str, default: usize) -> usize {
        match self.0.method_params.get(key) {
            Some(ParamValue::Number(v)) => *v as usize,
            _ => default,
        }
    }

    fn opt_int(&self, key: &str) -> Option<usize> {
        match self.0.method_params.get(key) {
            Some(ParamValue::Number(v)) => Some(*v as usize),
            _ => None,
        }
    }

    fn flag(&self, key: &str) -> bool {
        match self.0.method_params.get(key) {
            Some(ParamValue::Number(v)) => *v == 1.0,
            Some(ParamValue::Text(t)) => t == "true",
            None => false,
        }
    }

    fn text<'b>(&'b self, key: &str, default: &'b str) -> &'b str {
        match self.0.method_params.get(key) {
            Some(ParamValue::Text(t)) => t,
            _ => default,
        }
    }
}

/// `n` nodes of the named family on `interval`.
pub fn sample_nodes(family: &str, n: usize, interval: Interval) -> Result<NodeSet> {
    if n == 0 {
        return Err(Error::arg("need at least one sample node"));
    }
    match family {
        "equispaced" => equispaced(n, interval),
        "chebyshev" => chebyshev_roots(n - 1, interval),
        "lobatto" => chebyshev_lobatto(n - 1, interval),
        other => Err(Error::usage(format!("unknown node family '{other}'"))),
    }
}

fn sample_markers(samples: &SampleSet, label: &str) -> MarkerSet {
    MarkerSet {
        label: label.to_string(),
        xs: samples.xs().to_vec(),
        ys: samples.ys().to_vec(),
    }
}

/// Fit `cfg.method` to `f` as configured.
pub(crate) fn fit_method(cfg: &ExperimentConfig, f: &TargetFunction) -> Result<Fitted> {
    validate_params(&cfg.method, &cfg.method_params)?;
    let p = Params(cfg);
    let iv = cfg.interval;
    let n = cfg.n_samples;
    let degree = cfg.degree.unwrap_or(n.saturating_sub(1));
    let samples = || -> Result<SampleSet> {
        SampleSet::from_fn(sample_nodes(p.text("nodes", "equispaced"), n, iv)?, f)
    };
    let mut notes = Vec::new();
    let (label, approximant, markers) = match cfg.method.as_str() {
        "lagrange" => {
            let s = samples()?;
            (format!("lagrange n={n}"), lagrange_interpolate(&s)?, vec![sample_markers(&s, "samples")])
        }
        "chebyshev" => {
            if n == 0 {
                return Err(Error::arg("chebyshev needs n_samples >= 1"));
            }
            let a = chebyshev_interpolate(f, n - 1, iv)?;
            let nodes = chebyshev_roots(n - 1, iv)?;
            let s = SampleSet::from_fn(nodes, f)?;
            (format!("chebyshev n={n}"), a, vec![sample_markers(&s, "Chebyshev nodes")])
        }
        "spline" => {
            let s = samples()?;
            (format!("spline n={n}"), cubic_spline(&s)?, vec![sample_markers(&s, "samples")])
        }
        "polyfit" | "ridge" | "lasso" | "elastic-net" => {
            let s = samples()?;
            let alpha = p.real("alpha", 1e-3);
            let penalty = match cfg.method.as_str() {
                "polyfit" => Penalty::None,
                "ridge" => Penalty::Ridge(alpha),
                "lasso" => Penalty::Lasso(alpha),
                _ => Penalty::ElasticNet {
                    alpha,
                    rho: p.real("rho", 0.5),
                },
            };
            let label = format!("{} degree {degree}", cfg.method);
            (label, fit_regularized(&s, degree, penalty)?, vec![sample_markers(&s, "samples")])
        }
        "tikhonov" => {
            let s = samples()?;
            let op = match p.text("operator", "identity") {
                "second-difference" => TikhonovOperator::SecondDifference,
                _ => TikhonovOperator::Identity,
            };
            let lambda = p.real("lambda", 0.01);
            let a = tikhonov_fit(&s, degree, lambda, op)?;
            (format!("tikhonov lambda={lambda} degree {degree}"), a, vec![sample_markers(&s, "samples")])
        }
        "efci" => {
            let s = samples()?;
            let efci = EfciConfig {
                degree,
                m: p.int("m", 4),
                epsilon: p.real("epsilon", 0.1),
                search: p.flag("search"),
                constraint_weight: p.real("weight", 10.0),
            };
            let fit = efci_fit(&s, f, &efci)?;
            notes.push(format!("efci: m = {}, objective = {}", fit.m, fit.objective));
            let efc = MarkerSet {
                label: "EFC positions".into(),
                ys: fit
                    .efc_positions
                    .iter()
                    .map(|&x| fit.approximant.eval(x))
                    .collect::<Result<_>>()?,
                xs: fit.efc_positions,
            };
            (format!("efci m={} degree {degree}", fit.m), fit.approximant, vec![sample_markers(&s, "samples"), efc])
        }
        "mock-chebyshev" | "constrained-mock-chebyshev" => {
            let full = SampleSet::from_fn(equispaced(n, iv)?, f)?;
            let m = p.int("m", 10);
            let sel = mock_chebyshev_subset(full.nodes(), m)?;
            let sub = full.select(&sel.indices, crate::domain::NodeFamily::MockChebyshevSubset)?;
            let markers = vec![sample_markers(&full, "grid"), sample_markers(&sub, "mock-Chebyshev subset")];
            if cfg.method == "mock-chebyshev" {
                (format!("mock-chebyshev m={m}"), mock_chebyshev_interpolate(&full, m)?, markers)
            } else {
                let k = p.opt_int("ls_degree").unwrap_or_else(|| default_ls_degree(n, sel.len()));
                let a = constrained_mock_chebyshev_lstsq(&full, m, k)?;
                (format!("constrained mock-chebyshev m={m} degree {k}"), a, markers)
            }
        }
        "tisi" => {
            let mut t = if p.text("variant", "improved") == "base" {
                TisiConfig::base()
            } else {
                TisiConfig::improved()
            };
            t.epsilon = p.real("epsilon", t.epsilon);
            t.nodes_per_interval = p.int("nodes_per_interval", t.nodes_per_interval);
            for (key, slot) in [("left", &mut t.left), ("center", &mut t.center), ("right", &mut t.right)] {
                if let Some(ParamValue::Text(s)) = cfg.method_params.get(key) {
                    *slot = BandStrategy::parse(s)?;
                }
            }
            let a = tisi_fit(f, iv, &t)?;
            let breaks = a.as_piecewise().expect("three-interval fit is piecewise").breakpoints().to_vec();
            let marks = MarkerSet {
                label: "breakpoints".into(),
                ys: breaks.iter().map(|&x| f.eval(x)).collect(),
                xs: breaks,
            };
            let label = format!("tisi {}/{}/{}", t.left.name(), t.center.name(), t.right.name());
            (label, a, vec![marks])
        }
        "svd" => {
            let s = samples()?;
            let basis = match p.text("basis", "legendre") {
                "monomial" => Basis::Monomial,
                "chebyshev" => Basis::ChebyshevT,
                _ => Basis::Legendre,
            };
            let threshold = p.real("threshold", 0.0);
            let fit = svd_truncated_fit_with_rank(&s, degree, threshold, basis)?;
            notes.push(format!("svd: kept rank {} of {}", fit.kept_rank, degree + 1));
            let label = format!("svd {} threshold={threshold:e}", basis.name());
            (label, fit.approximant, vec![sample_markers(&s, "samples")])
        }
        other => return Err(Error::usage(format!("unknown method '{other}'"))),
    };
    Ok(Fitted {
        label,
        approximant,
        markers,
        notes,
    })
}
