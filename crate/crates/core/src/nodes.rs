//! Node families and subset selection on existing grids.

use std::f64::consts::PI;

use crate::domain::{Interval, NodeFamily, NodeSet};
use crate::error::{Error, Result};

/// Indices into a source grid chosen to stand in for a set of target abscissae.
#[derive(Debug, Clone, PartialEq)]
pub struct SubsetSelection {
    pub source: NodeSet,
    /// Strictly increasing positions in `source.xs()`.
    pub indices: Vec<usize>,
    pub targets: Vec<f64>,
}

impl SubsetSelection {
    /// The selected nodes as their own node set.
    pub fn nodes(&self) -> NodeSet {
        self.source
            .select(&self.indices, NodeFamily::MockChebyshevSubset)
            .expect("subset indices are validated at construction")
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// `n` uniformly spaced nodes, both endpoints included.
pub fn equispaced(n: usize, interval: Interval) -> Result<NodeSet> {
    if n < 2 {
        return Err(Error::arg(format!("equispaced grid needs n >= 2, got {n}")));
    }
    NodeSet::new(interval, interval.linspace(n), NodeFamily::Equispaced)
}

/// The `n + 1` roots of `T_{n+1}` mapped to `interval`, increasing.
pub fn chebyshev_roots(n: usize, interval: Interval) -> Result<NodeSet> {
    // cos((2k+1)π/(2n+2)) = sin((n-2k)π/(2n+2)); the sine form is exactly
    // antisymmetric under k -> n-k.
    let denom = 2.0 * (n as f64 + 1.0);
    let xs = (0..=n)
        .rev()
        .map(|k| {
            let t = ((n as f64 - 2.0 * k as f64) * PI / denom).sin();
            interval.from_reference(t)
        })
        .collect();
    NodeSet::new(interval, xs, NodeFamily::ChebyshevRoots)
}

/// The `n + 1` extrema `cos(kπ/n)` of `T_n` mapped to `interval`, increasing.
/// Endpoints coincide with the interval's exactly.
pub fn chebyshev_lobatto(n: usize, interval: Interval) -> Result<NodeSet> {
    if n < 1 {
        return Err(Error::arg("Chebyshev-Lobatto grid needs n >= 1"));
    }
    NodeSet::new(interval, lobatto_points(n, interval), NodeFamily::ChebyshevLobatto)
}

fn lobatto_points(n: usize, interval: Interval) -> Vec<f64> {
    let denom = 2.0 * n as f64;
    (0..=n)
        .rev()
        .map(|k| {
            let t = match k {
                0 => 1.0,
                k if k == n => -1.0,
                _ => ((n as f64 - 2.0 * k as f64) * PI / denom).sin(),
            };
            interval.from_reference(t)
        })
        .collect()
}

/// Nearest-node selection of a Chebyshev–Lobatto grid with `m + 1` points on
/// an existing grid. See [`mock_chebyshev_subset_with`].
pub fn mock_chebyshev_subset(source: &NodeSet, m: usize) -> Result<SubsetSelection> {
    mock_chebyshev_subset_with(source, m, false)
}

/// For each Chebyshev–Lobatto target pick the nearest source node, ties going
/// to the smaller abscissa. Targets that land on the same node collapse to one
/// index. With `exclude_endpoints` the two boundary targets are dropped.
pub fn mock_chebyshev_subset_with(
    source: &NodeSet,
    m: usize,
    exclude_endpoints: bool,
) -> Result<SubsetSelection> {
    if source.len() < 2 {
        return Err(Error::arg("mock-Chebyshev selection needs a source grid of at least 2 nodes"));
    }
    if m < 1 {
        return Err(Error::arg("mock-Chebyshev selection needs m >= 1"));
    }
    let mut targets = lobatto_points(m, source.interval());
    if exclude_endpoints {
        targets.retain(|&t| t != source.interval().lo() && t != source.interval().hi());
        if targets.is_empty() {
            return Err(Error::arg("no interior targets left after excluding endpoints (need m >= 2)"));
        }
    }
    let xs = source.xs();
    let mut indices: Vec<usize> = targets.iter().map(|&t| nearest_index(xs, t)).collect();
    indices.sort_unstable();
    indices.dedup();
    Ok(SubsetSelection {
        source: source.clone(),
        indices,
        targets,
    })
}

/// Index of the entry of sorted `xs` closest to `t`; ties go left. Distances
/// that differ only by round-off count as tied, so a symmetric grid stays
/// symmetric in its selections.
fn nearest_index(xs: &[f64], t: f64) -> usize {
    let right = xs.partition_point(|&x| x < t);
    if right == 0 {
        return 0;
    }
    if right == xs.len() {
        return xs.len() - 1;
    }
    let left = right - 1;
    let slack = 1e-12 * (xs[right] - xs[left]);
    if (t - xs[left]).abs() <= (xs[right] - t).abs() + slack {
        left
    } else {
        right
    }
}

/// Every other node of `source`, starting with the first.
pub fn every_other_subset(source: &NodeSet) -> Result<SubsetSelection> {
    if source.len() < 3 {
        return Err(Error::arg("every-other selection needs at least 3 source nodes"));
    }
    let indices: Vec<usize> = (0..source.len()).step_by(2).collect();
    let targets = indices.iter().map(|&i| source.xs()[i]).collect();
    Ok(SubsetSelection {
        source: source.clone(),
        indices,
        targets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> Interval {
        Interval::unit()
    }

    #[test]
    fn equispaced_examples() {
        assert_eq!(equispaced(3, unit()).unwrap().xs(), &[-1.0, 0.0, 1.0]);
        assert_eq!(equispaced(2, unit()).unwrap().xs(), &[-1.0, 1.0]);
        let e = equispaced(11, unit()).unwrap();
        assert_eq!(e.len(), 11);
        assert_eq!(e.xs()[5], 0.0);
        for w in e.xs().windows(2) {
            assert!((w[1] - w[0] - 0.2).abs() < 1e-15);
        }
        assert!(equispaced(1, unit()).is_err());
    }

    #[test]
    fn chebyshev_roots_examples() {
        assert_eq!(chebyshev_roots(0, unit()).unwrap().xs(), &[0.0]);
        let r1 = chebyshev_roots(1, unit()).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((r1.xs()[0] + h).abs() < 1e-15 && (r1.xs()[1] - h).abs() < 1e-15);
        let r2 = chebyshev_roots(2, unit()).unwrap();
        let s = 3f64.sqrt() / 2.0;
        assert!((r2.xs()[0] + s).abs() < 1e-15);
        assert_eq!(r2.xs()[1], 0.0);
        assert!((r2.xs()[2] - s).abs() < 1e-15);
        assert_eq!(r2.family(), NodeFamily::ChebyshevRoots);
    }

    #[test]
    fn chebyshev_lobatto_examples() {
        assert_eq!(chebyshev_lobatto(2, unit()).unwrap().xs(), &[-1.0, 0.0, 1.0]);
        assert_eq!(chebyshev_lobatto(1, unit()).unwrap().xs(), &[-1.0, 1.0]);
        let l4 = chebyshev_lobatto(4, unit()).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let want = [-1.0, -h, 0.0, h, 1.0];
        for (a, b) in l4.xs().iter().zip(want) {
            assert!((a - b).abs() < 1e-15);
        }
        assert!(chebyshev_lobatto(0, unit()).is_err());
    }

    #[test]
    fn lobatto_endpoints_exact_on_odd_interval() {
        let iv = Interval::new(0.1, 0.7).unwrap();
        for n in 1..30 {
            let l = chebyshev_lobatto(n, iv).unwrap();
            assert_eq!(l.xs()[0], 0.1);
            assert_eq!(*l.xs().last().unwrap(), 0.7);
        }
    }

    #[test]
    fn mock_subset_examples() {
        let five = equispaced(5, unit()).unwrap();
        assert_eq!(mock_chebyshev_subset(&five, 2).unwrap().indices, vec![0, 2, 4]);
        let two = equispaced(2, unit()).unwrap();
        let sel = mock_chebyshev_subset(&two, 4).unwrap();
        assert_eq!(sel.indices, vec![0, 1]);
        assert_eq!(sel.targets.len(), 5);
    }

    #[test]
    fn mock_subset_tie_goes_left() {
        // target 0 sits exactly between -0.5 and 0.5
        let grid = NodeSet::custom(unit(), vec![-1.0, -0.5, 0.5, 1.0]).unwrap();
        assert_eq!(mock_chebyshev_subset(&grid, 2).unwrap().indices, vec![0, 1, 3]);
    }

    #[test]
    fn mock_subset_round_off_tie_goes_left() {
        // ±1/3 are not exact mirror images after linspace
        let four = equispaced(4, unit()).unwrap();
        assert_eq!(mock_chebyshev_subset(&four, 2).unwrap().indices, vec![0, 1, 3]);
    }

    #[test]
    fn mock_subset_excluding_endpoints() {
        let grid = equispaced(21, unit()).unwrap();
        let sel = mock_chebyshev_subset_with(&grid, 10, true).unwrap();
        assert_eq!(sel.targets.len(), 9);
        assert!(sel.targets.iter().all(|t| t.abs() < 1.0));
        // cos(π/10) ≈ 0.951 is still nearest to the endpoint node 1.0
        assert_eq!(*sel.indices.last().unwrap(), 20);
        assert!(mock_chebyshev_subset_with(&grid, 1, true).is_err());
    }

    #[test]
    fn every_other_examples() {
        let sel = |n| every_other_subset(&equispaced(n, unit()).unwrap()).unwrap().indices;
        assert_eq!(sel(5), vec![0, 2, 4]);
        assert_eq!(sel(4), vec![0, 2]);
        assert_eq!(sel(21).len(), 11);
        assert!(every_other_subset(&equispaced(2, unit()).unwrap()).is_err());
    }
}
