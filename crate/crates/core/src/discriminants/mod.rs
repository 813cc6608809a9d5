//! Two-red-edge discriminants and the combinatorial identities behind them.
//!
//! With two red edges the crossing polynomial is
//! `A11 x y - A10 x - A01 y + A00`, whose zero set is a hyperbola. Its
//! discriminant `A11 A00 - A01 A10` vanishes exactly when the hyperbola
//! degenerates into two lines and a double eigenvalue crossing becomes
//! reachable. The magnitude of the discriminant is a perfect square: the
//! square of a signed spanning 2-forest count, or of a minor of the Gram
//! matrix of a cycle basis.

mod cycles;
mod wildcard;

pub use cycles::{cycle_basis, cycle_minor};
pub use wildcard::{
    all_wildcards, factorize, stacked_deck, wildcard_discriminant, wildcard_forest_sum, Factorization,
    Wildcard,
};

use num::{Signed, Zero};

use crate::crossing::CrossingPolynomial;
use crate::enumerate::signed_forest_sum;
use crate::error::{Error, Result};
use crate::exact::{to_f64, Rational, RationalMatrix};
use crate::graph::{Edge, SignedGraph};

fn require_two(p: &CrossingPolynomial) -> Result<()> {
    if p.red_count() != 2 {
        return Err(Error::RedCount {
            expected: 2,
            actual: p.red_count(),
        });
    }
    Ok(())
}

/// `(A00, A10, A01, A11)` where `A10` is the coefficient of red edge 1 alone.
pub fn quad(p: &CrossingPolynomial) -> Result<[Rational; 4]> {
    require_two(p)?;
    let c = p.coefficients();
    Ok([c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()])
}

/// `A11 A00 - A01 A10`.
pub fn discriminant2(p: &CrossingPolynomial) -> Result<Rational> {
    let [a00, a10, a01, a11] = quad(p)?;
    Ok(a11 * a00 - a01 * a10)
}

/// Distance between the branches of the zero hyperbola, `sqrt(2|D|)/A11`.
///
/// `Some(0.0)` when the hyperbola degenerates, `None` when `A11 = 0`.
pub fn gap(p: &CrossingPolynomial) -> Result<Option<f64>> {
    let [_, _, _, a11] = quad(p)?;
    if a11.is_zero() {
        return Ok(None);
    }
    let delta = discriminant2(p)?;
    if delta.is_zero() {
        return Ok(Some(0.0));
    }
    Ok(Some((2.0 * to_f64(&delta.abs())).sqrt() / to_f64(&a11)))
}

/// The point `(A01/A11, A10/A11)` where both lines of a degenerate
/// hyperbola meet; `None` unless `D = 0` and `A11 > 0`.
pub fn degenerate_point(p: &CrossingPolynomial) -> Result<Option<(Rational, Rational)>> {
    let [_, a10, a01, a11] = quad(p)?;
    if !a11.is_positive() || !discriminant2(p)?.is_zero() {
        return Ok(None);
    }
    Ok(Some((&a01 / &a11, &a10 / &a11)))
}

/// Endpoint pairs `(U, W)` used for the 2-forest sum of two red edges.
///
/// Each pair is sorted; when the edges share one vertex `s`, the pairs are
/// `(s, other_1)` and `(s, other_2)`.
pub fn forest_endpoints(x: &Edge, y: &Edge) -> ([usize; 2], [usize; 2]) {
    let shared = [x.u, x.v].into_iter().filter(|a| *a == y.u || *a == y.v).collect::<Vec<_>>();
    match shared[..] {
        [s] => ([s, x.other(s)], [s, y.other(s)]),
        _ => ([x.u, x.v], [y.u, y.v]),
    }
}

/// Signed count of black spanning 2-forests separating the red endpoints.
/// Its square equals `|D|`.
pub fn forest_sum_2(g: &SignedGraph) -> Result<Rational> {
    let reds = g.red_edges();
    if reds.len() != 2 {
        return Err(Error::RedCount {
            expected: 2,
            actual: reds.len(),
        });
    }
    let (u, w) = forest_endpoints(reds[0], reds[1]);
    signed_forest_sum(&g.black_subgraph(), &u, &w)
}

/// Determinant of `m` with rows `u` and columns `w` removed.
pub fn laplacian_minor(m: &RationalMatrix, u: &[usize], w: &[usize]) -> Result<Rational> {
    if u.len() != w.len() {
        return Err(Error::LengthMismatch {
            expected: u.len(),
            actual: w.len(),
        });
    }
    check_indices(m, u.iter().chain(w))?;
    for s in [u, w] {
        if (1..s.len()).any(|i| s[..i].contains(&s[i])) {
            return Err(Error::InvalidArgument(format!("repeated index in {s:?}")));
        }
    }
    Ok(m.without(u, w).determinant())
}

fn check_indices<'a>(m: &RationalMatrix, idx: impl IntoIterator<Item = &'a usize>) -> Result<()> {
    if !m.is_square() {
        return Err(Error::InvalidArgument("matrix is not square".into()));
    }
    match idx.into_iter().find(|&&i| i >= m.rows()) {
        Some(i) => Err(Error::InvalidArgument(format!(
            "index {i} out of range for a {0}x{0} matrix",
            m.rows()
        ))),
        None => Ok(()),
    }
}

/// The all-minors forest expansion of a Laplacian minor:
/// `(-1)^{N - k + sum U + sum W}` times the signed forest sum over `U`, `W`
/// with `k = |U|`. `U` and `W` are sets; forest signs are taken with both in
/// increasing order.
///
/// The extra `(-1)^{N-k}` relative to the textbook statement comes from the
/// Laplacian here carrying `-sum_j w_ij` on its diagonal.
pub fn forest_minor(g: &SignedGraph, u: &[usize], w: &[usize]) -> Result<Rational> {
    let (mut u, mut w) = (u.to_vec(), w.to_vec());
    u.sort_unstable();
    w.sort_unstable();
    let s = signed_forest_sum(g, &u, &w)?;
    let parity = g.n() + u.len() + u.iter().sum::<usize>() + w.iter().sum::<usize>();
    Ok(if parity % 2 == 0 { s } else { -s })
}

/// Checks `|M| |M_{ij,kl}| - |M_{i,k}| |M_{j,l}| = -|M_{i,l}| |M_{j,k}|`,
/// where `M_{...}` removes the listed rows and columns. Row and column
/// pairs are sorted first.
pub fn dodgson_check(m: &RationalMatrix, i: usize, j: usize, k: usize, l: usize) -> Result<bool> {
    check_indices(m, [&i, &j, &k, &l])?;
    if i == j || k == l {
        return Err(Error::InvalidArgument("row and column pairs must be distinct".into()));
    }
    let (i, j) = (i.min(j), i.max(j));
    let (k, l) = (k.min(l), k.max(l));
    let d = |r: &[usize], c: &[usize]| m.without(r, c).determinant();
    let lhs = d(&[], &[]) * d(&[i, j], &[k, l]) - d(&[i], &[k]) * d(&[j], &[l]);
    let rhs = -(d(&[i], &[l]) * d(&[j], &[k]));
    Ok(lhs == rhs)
}
