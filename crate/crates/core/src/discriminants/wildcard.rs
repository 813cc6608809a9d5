//! Wildcards, the stacked deck, and full factorization of the crossing
//! polynomial into hyperplanes.

use std::fmt;
use std::str::FromStr;

use num::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::crossing::{product_form, CrossingPolynomial};
use crate::error::{Error, Result};
use crate::exact::{serde_rational, Rational};
use crate::graph::SignedGraph;

use super::forest_sum_2;

/// A pattern over `{0, 1, *}` with exactly two `*`, read left to right as
/// red edges `1..R`. It selects the four coefficients
/// `A_b, A_{b+e_i}, A_{b+e_j}, A_{b+e_i+e_j}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Wildcard {
    len: usize,
    base: usize,
    i: usize,
    j: usize,
}

impl Wildcard {
    /// `base` must have bits `i` and `j` clear; `i < j < len`.
    pub fn new(len: usize, base: usize, i: usize, j: usize) -> Result<Self> {
        if !(i < j && j < len) || base >> len != 0 || base >> i & 1 == 1 || base >> j & 1 == 1 {
            return Err(Error::InvalidArgument(format!(
                "no wildcard of length {len} with free positions {i}, {j} and base {base:b}"
            )));
        }
        Ok(Self { len, base, i, j })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// The pattern with both free positions set to 0.
    pub fn base(&self) -> usize {
        self.base
    }

    pub fn free(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    fn bit(&self, k: usize) -> Option<bool> {
        if k == self.i || k == self.j {
            None
        } else {
            Some(self.base >> k & 1 == 1)
        }
    }
}

impl fmt::Display for Wildcard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 0..self.len {
            f.write_str(match self.bit(k) {
                None => "*",
                Some(true) => "1",
                Some(false) => "0",
            })?;
        }
        Ok(())
    }
}

impl FromStr for Wildcard {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut base = 0;
        let mut free = Vec::new();
        for (k, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => base |= 1 << k,
                '*' => free.push(k),
                _ => return Err(Error::InvalidArgument(format!("bad wildcard character {c:?} in {s:?}"))),
            }
        }
        if free.len() != 2 {
            return Err(Error::InvalidArgument(format!("wildcard {s:?} needs exactly two '*'")));
        }
        Wildcard::new(s.chars().count(), base, free[0], free[1])
    }
}

impl Serialize for Wildcard {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Wildcard {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// The stacked deck `W_R`: zeros everywhere before the second `*`, free
/// bits after it. It has `2^R - R - 1` elements.
pub fn stacked_deck(r: usize) -> Result<Vec<Wildcard>> {
    if r < 2 {
        return Err(Error::InvalidArgument(format!("stacked deck needs R >= 2, got {r}")));
    }
    let mut deck = Vec::new();
    for j in 1..r {
        for i in 0..j {
            for tail in 0..1usize << (r - 1 - j) {
                deck.push(Wildcard::new(r, tail << (j + 1), i, j)?);
            }
        }
    }
    Ok(deck)
}

/// Every wildcard of length `r`: `C(r, 2) 2^(r-2)` of them.
pub fn all_wildcards(r: usize) -> Vec<Wildcard> {
    let mut out = Vec::new();
    for j in 1..r {
        for i in 0..j {
            for base in 0..1usize << r {
                if base >> i & 1 == 0 && base >> j & 1 == 0 {
                    out.push(Wildcard { len: r, base, i, j });
                }
            }
        }
    }
    out
}

/// `A_{b+e_i+e_j} A_b - A_{b+e_i} A_{b+e_j}`.
pub fn wildcard_discriminant(p: &CrossingPolynomial, w: &Wildcard) -> Result<Rational> {
    if w.len != p.red_count() {
        return Err(Error::LengthMismatch {
            expected: p.red_count(),
            actual: w.len,
        });
    }
    let a = |m: usize| p.coefficient(m);
    let (b, ei, ej) = (w.base, 1 << w.i, 1 << w.j);
    Ok(a(b | ei | ej) * a(b) - a(b | ei) * a(b | ej))
}

/// `M(t) = alpha prod_i (1 - c_i t_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    #[serde(with = "serde_rational")]
    pub alpha: Rational,
    #[serde(rename = "C", with = "serde_rational::vec")]
    pub c: Vec<Rational>,
}

impl Factorization {
    pub fn expand(&self) -> CrossingPolynomial {
        product_form(&self.alpha, &self.c)
    }

    /// Hyperplane positions `t_i = 1/c_i` for the positive `c_i`.
    pub fn hyperplanes(&self) -> Vec<Option<Rational>> {
        self.c
            .iter()
            .map(|c| (c > &Rational::zero()).then(|| Rational::one() / c))
            .collect()
    }
}

/// Splits `M` into linear factors when every stacked-deck discriminant
/// vanishes. The candidate is always re-expanded and compared with `p`, so
/// `Some` is returned only for a genuine factorization.
pub fn factorize(p: &CrossingPolynomial) -> Result<Option<Factorization>> {
    let a0 = p.coefficient(0).clone();
    if a0.is_zero() {
        return Err(Error::InvalidArgument(
            "constant coefficient is zero (black subgraph is disconnected)".into(),
        ));
    }
    let r = p.red_count();
    if r >= 2 {
        for w in stacked_deck(r)? {
            if !wildcard_discriminant(p, &w)?.is_zero() {
                return Ok(None);
            }
        }
    }
    let c: Vec<Rational> = (0..r).map(|i| p.coefficient(1 << i) / &a0).collect();
    let f = Factorization { alpha: a0, c };
    Ok((f.expand() == *p).then_some(f))
}

/// Signed 2-forest sum of the graph derived from `w`: red edges at `1`
/// digits contracted, at `0` digits deleted. Its square is `|D_w|`.
///
/// `None` when contraction identifies the endpoints of a free edge. If the
/// contracted edges contain a cycle every coefficient involved is zero and
/// so is the result.
pub fn wildcard_forest_sum(g: &SignedGraph, w: &Wildcard) -> Result<Option<Rational>> {
    let labels = g.red_labels();
    if labels.len() != w.len {
        return Err(Error::LengthMismatch {
            expected: labels.len(),
            actual: w.len,
        });
    }
    let (mut contract, mut delete) = (Vec::new(), Vec::new());
    for (k, &l) in labels.iter().enumerate() {
        match w.bit(k) {
            Some(true) => contract.push(l),
            Some(false) => delete.push(l),
            None => {}
        }
    }
    let minor = g.minor(&contract, &delete)?;
    if minor.degenerate {
        return Ok(Some(Rational::zero()));
    }
    if minor.graph.red_count() != 2 {
        return Ok(None);
    }
    forest_sum_2(&minor.graph).map(Some)
}
