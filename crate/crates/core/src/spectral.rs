//! Laplacian construction, exact inertia, eigenvalues and the tree constant.

use std::fmt;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Rational, RationalMatrix};
use crate::graph::SignedGraph;

/// Counts of negative, zero and positive eigenvalues.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpectralIndex {
    pub n_minus: usize,
    pub n_zero: usize,
    pub n_plus: usize,
}

impl SpectralIndex {
    pub fn new(n_minus: usize, n_zero: usize, n_plus: usize) -> Self {
        Self {
            n_minus,
            n_zero,
            n_plus,
        }
    }

    pub fn total(&self) -> usize {
        self.n_minus + self.n_zero + self.n_plus
    }

    /// Negative semidefinite with a simple kernel.
    pub fn is_stable(&self) -> bool {
        self.n_plus == 0 && self.n_zero == 1
    }
}

impl fmt::Display for SpectralIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n_minus, self.n_zero, self.n_plus)
    }
}

/// Laplacian from explicit per-edge weights: `L_ij = w_ij`, `L_ii = -sum_k w_ik`.
pub fn laplacian_from_weights(g: &SignedGraph, weights: &[Rational]) -> RationalMatrix {
    let n = g.n();
    let mut m = RationalMatrix::zeros(n, n);
    for (e, w) in g.edges().iter().zip(weights) {
        m[(e.u, e.v)] += w;
        m[(e.v, e.u)] += w;
        m[(e.u, e.u)] -= w;
        m[(e.v, e.v)] -= w;
    }
    m
}

/// Laplacian with red edge `i` carrying weight `-t[i]`.
pub fn laplacian(g: &SignedGraph, t: &[Rational]) -> Result<RationalMatrix> {
    Ok(laplacian_from_weights(g, &g.weights_at(t)?))
}

/// Exact spectral index of a symmetric rational matrix.
pub fn inertia(m: &RationalMatrix) -> Result<SpectralIndex> {
    m.inertia()
}

/// Ascending eigenvalues of a symmetric matrix.
pub fn eigenvalues(m: &RationalMatrix) -> Vec<f64> {
    eigenvalues_f64(m.to_f64())
}

pub fn eigenvalues_f64(m: nalgebra::DMatrix<f64>) -> Vec<f64> {
    if m.nrows() == 0 {
        return Vec::new();
    }
    let mut ev: Vec<f64> = nalgebra::SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Zero threshold for float eigenvalues, `1e-9 * max(1, ||m||)`.
pub fn zero_tolerance(eigenvalues: &[f64]) -> f64 {
    1e-9 * eigenvalues.iter().fold(1.0f64, |a, &b| a.max(b.abs()))
}

/// Sign counts of float eigenvalues under [`zero_tolerance`].
pub fn float_index(eigenvalues: &[f64], tol: f64) -> SpectralIndex {
    SpectralIndex {
        n_minus: eigenvalues.iter().filter(|&&l| l < -tol).count(),
        n_zero: eigenvalues.iter().filter(|&&l| l.abs() <= tol).count(),
        n_plus: eigenvalues.iter().filter(|&&l| l > tol).count(),
    }
}

/// Weighted spanning-tree sum `M = sum_T prod_{e in T} w_e` of a Laplacian.
///
/// Computed as `(-1)^{N-1}` times a principal `(N-1)`-minor. Zero for
/// disconnected graphs.
pub fn tree_constant_of(m: &RationalMatrix) -> Rational {
    let n = m.rows();
    if n <= 1 {
        return Rational::one();
    }
    let det = m.without(&[0], &[0]).determinant();
    if (n - 1) % 2 == 0 {
        det
    } else {
        -det
    }
}

pub fn tree_constant(g: &SignedGraph, t: &[Rational]) -> Result<Rational> {
    Ok(tree_constant_of(&laplacian(g, t)?))
}

/// Same quantity through the characteristic polynomial: the linear
/// coefficient of `det(xI - L)` divided by `N`.
pub fn tree_constant_via_charpoly(m: &RationalMatrix) -> Rational {
    let n = m.rows();
    let cp = m.characteristic_polynomial();
    if n <= 1 {
        return Rational::one();
    }
    &cp[1] / Rational::from_integer(n.into())
}

/// Generic spectral index for red weights near zero and near infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexLimits {
    pub small_t: SpectralIndex,
    pub large_t: SpectralIndex,
}

pub fn index_limits(g: &SignedGraph) -> Result<IndexLimits> {
    let cc = g.component_counts();
    if cc.whole != 1 {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    Ok(IndexLimits {
        small_t: SpectralIndex::new(n - cc.black, 1, cc.black - 1),
        large_t: SpectralIndex::new(cc.red - 1, 1, n - cc.red),
    })
}

/// Number of eigenvalue crossings along a generic red ray, `N - c(G_+) - c(G_-) + 1`.
pub fn tau(g: &SignedGraph) -> Result<usize> {
    let cc = g.component_counts();
    if cc.whole != 1 {
        return Err(Error::Disconnected);
    }
    Ok(g.n() + 1 - cc.black - cc.red)
}

/// Witness points for checking [`index_limits`] dynamically:
/// `eps = 1/(64 N maxw)` and `K = 64 N maxw / minw` over black weights.
pub fn limit_witnesses(g: &SignedGraph) -> (Rational, Rational) {
    let blacks: Vec<Rational> = g.black_edges().iter().map(|e| e.weight.abs()).collect();
    let one = Rational::one();
    let maxw = blacks.iter().max().cloned().unwrap_or_else(|| one.clone());
    let minw = blacks.iter().min().cloned().unwrap_or_else(|| one.clone());
    let scale = Rational::from_integer((64 * g.n()).into());
    let eps = one / (&scale * &maxw);
    let big = &scale * &maxw / &minw;
    (eps, big)
}

/// Exact index at `t = s * 1` for each witness scale. Returns (small, large).
pub fn sampled_limits(g: &SignedGraph) -> Result<(SpectralIndex, SpectralIndex)> {
    let (eps, big) = limit_witnesses(g);
    let r = g.red_count();
    let small = inertia(&laplacian(g, &vec![eps; r])?)?;
    let large = inertia(&laplacian(g, &vec![big; r])?)?;
    Ok((small, large))
}

pub fn is_zero_row_sum(m: &RationalMatrix) -> bool {
    m.row_sums().iter().all(Zero::is_zero)
}
