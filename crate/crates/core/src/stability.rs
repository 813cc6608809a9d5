//! Per-edge crossing thresholds and the l1 stability certificate.
//!
//! With black weights fixed, the Laplacian keeps index `(N-1, 1, 0)` for
//! every red assignment `t` with `|t|_1 <= min_i w_i`, where
//! `w_i = A_empty / A_{e_i}` is the value of `t_i` at which the tree constant
//! first vanishes along the `i`-th axis.

use num::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::crossing::coefficient_for;
use crate::error::{Error, Result};
use crate::exact::{serde_rational, Rational};
use crate::graph::SignedGraph;
use crate::spectral::{inertia, laplacian, SpectralIndex};

/// `A_empty / A_{e_i}` for each red edge; `None` when `A_{e_i} = 0`, i.e. the
/// edge alone never causes a crossing.
pub fn thresholds(g: &SignedGraph) -> Result<Vec<Option<Rational>>> {
    let labels = g.red_labels();
    let a0 = coefficient_for(g, &labels, 0)?;
    if a0.is_zero() {
        return Err(Error::InvalidGraph(
            "black subgraph is disconnected; no stability threshold exists".into(),
        ));
    }
    (0..labels.len())
        .map(|i| {
            let ai = coefficient_for(g, &labels, 1 << i)?;
            Ok((!ai.is_zero()).then(|| &a0 / ai))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    #[serde(serialize_with = "optional_rationals")]
    pub thresholds: Vec<Option<Rational>>,
    #[serde(with = "serde_rational")]
    pub l1_norm: Rational,
    pub certified: bool,
    /// `|t|_1` equals the smallest threshold; the index may then be
    /// `(N-2, 2, 0)`.
    pub boundary: bool,
    /// `min_i w_i - |t|_1`, absent when every threshold is infinite.
    #[serde(with = "serde_rational::option")]
    pub margin: Option<Rational>,
    pub verified_index: SpectralIndex,
}

fn optional_rationals<S: Serializer>(v: &[Option<Rational>], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.as_ref().map(ToString::to_string)))
}

/// Evaluates the certificate at `t` and checks it against the exact index.
///
/// A certified point whose exact index contradicts the certificate is an
/// internal fault.
pub fn certify(g: &SignedGraph, t: &[Rational]) -> Result<StabilityReport> {
    let thresholds = thresholds(g)?;
    let verified_index = inertia(&laplacian(g, t)?)?;
    let l1_norm = t.iter().fold(Rational::zero(), |acc, x| acc + x.abs());
    let min = thresholds.iter().flatten().min().cloned();
    let margin = min.map(|m| m - &l1_norm);
    let certified = margin.as_ref().is_none_or(|m| !m.is_negative());
    let boundary = margin.as_ref().is_some_and(Zero::is_zero);

    let n = g.n();
    let stable = SpectralIndex::new(n - 1, 1, 0);
    let allowed = if boundary {
        verified_index == stable || verified_index == SpectralIndex::new(n - 2, 2, 0)
    } else {
        verified_index == stable
    };
    if certified && !allowed {
        return Err(Error::ConsistencyFault(format!(
            "certified point has index {verified_index}"
        )));
    }
    Ok(StabilityReport {
        thresholds,
        l1_norm,
        certified,
        boundary,
        margin,
        verified_index,
    })
}
