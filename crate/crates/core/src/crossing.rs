//! The multilinear crossing polynomial in the red-edge magnitudes.
//!
//! For a subset `I` of red edges, `A_I` is the black-weighted count of
//! spanning trees containing exactly the red edges in `I`. The tree constant
//! at red magnitudes `t` is then
//!
//! ```text
//! M(t) = sum_I (-1)^{|I|} A_I prod_{i in I} t_i
//! ```
//!
//! and `M(t) = 0` exactly where the Laplacian picks up a second zero
//! eigenvalue.

use std::collections::BTreeMap;

use num::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{parse_rational, serde_rational, Rational};
use crate::graph::SignedGraph;
use crate::poly::{compare_isolated, isolate_positive_roots, IsolatedRoot, Poly};
use crate::spectral::tree_constant;

/// Default guard against the `2^R` blow-up.
pub const DEFAULT_MAX_RED: usize = 20;

/// Coefficients `A_I >= 0`, indexed by bitmask (bit `i` is red position `i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingPolynomial {
    red_count: usize,
    coefficients: Vec<Rational>,
}

impl CrossingPolynomial {
    pub fn new(red_count: usize, coefficients: Vec<Rational>) -> Result<Self> {
        if coefficients.len() != 1usize << red_count {
            return Err(Error::LengthMismatch {
                expected: 1 << red_count,
                actual: coefficients.len(),
            });
        }
        Ok(Self {
            red_count,
            coefficients,
        })
    }

    pub fn red_count(&self) -> usize {
        self.red_count
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// `A_I` for the bitmask `mask`.
    pub fn coefficient(&self, mask: usize) -> &Rational {
        &self.coefficients[mask]
    }

    /// Wire key: red index 1 is the leftmost character.
    pub fn mask_to_key(&self, mask: usize) -> String {
        (0..self.red_count)
            .map(|i| if mask >> i & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    pub fn key_to_mask(key: &str) -> Option<usize> {
        key.chars().enumerate().try_fold(0usize, |acc, (i, c)| match c {
            '0' => Some(acc),
            '1' => Some(acc | 1 << i),
            _ => None,
        })
    }

    /// Coefficients grouped by total degree `|I|`, as signed sums.
    pub fn degrees_present(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = (0..self.coefficients.len())
            .filter(|&m| !self.coefficients[m].is_zero())
            .map(|m| m.count_ones() as usize)
            .collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }
}

impl Serialize for CrossingPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<String, String> = (0..self.coefficients.len())
            .map(|m| (self.mask_to_key(m), self.coefficients[m].to_string()))
            .collect();
        map.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CrossingPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let map = BTreeMap::<String, String>::deserialize(d)?;
        let r = map.keys().next().map_or(0, String::len);
        if map.len() != 1 << r || map.keys().any(|k| k.len() != r) {
            return Err(D::Error::custom("coefficient keys must cover every bitmask of one length"));
        }
        let mut coefficients = vec![Rational::zero(); 1 << r];
        for (k, v) in &map {
            let m = CrossingPolynomial::key_to_mask(k)
                .ok_or_else(|| D::Error::custom(format!("bad bitmask key {k:?}")))?;
            coefficients[m] = parse_rational(v).map_err(D::Error::custom)?;
        }
        Ok(CrossingPolynomial {
            red_count: r,
            coefficients,
        })
    }
}

/// `A_I` for every `I`, each from the tree constant of the minor with red
/// edges in `I` contracted and the rest deleted.
pub fn coefficients(g: &SignedGraph) -> Result<CrossingPolynomial> {
    coefficients_with_limit(g, DEFAULT_MAX_RED)
}

pub fn coefficients_with_limit(g: &SignedGraph, max_red: usize) -> Result<CrossingPolynomial> {
    let labels = g.red_labels();
    let r = labels.len();
    if r > max_red {
        return Err(Error::TooManyRedEdges { red: r, limit: max_red });
    }
    let coefficients = (0..1usize << r)
        .into_par_iter()
        .map(|mask| coefficient_for(g, &labels, mask))
        .collect::<Result<Vec<_>>>()?;
    CrossingPolynomial::new(r, coefficients)
}

pub(crate) fn coefficient_for(g: &SignedGraph, labels: &[usize], mask: usize) -> Result<Rational> {
    let (contract, delete): (Vec<usize>, Vec<usize>) = {
        let mut c = Vec::new();
        let mut d = Vec::new();
        for (i, &l) in labels.iter().enumerate() {
            if mask >> i & 1 == 1 {
                c.push(l);
            } else {
                d.push(l);
            }
        }
        (c, d)
    };
    let minor = g.minor(&contract, &delete)?;
    if minor.degenerate {
        return Ok(Rational::zero());
    }
    tree_constant(&minor.graph, &[])
}

/// `sum_I (-1)^{|I|} A_I t^I`.
pub fn evaluate(p: &CrossingPolynomial, t: &[Rational]) -> Result<Rational> {
    if t.len() != p.red_count {
        return Err(Error::LengthMismatch {
            expected: p.red_count,
            actual: t.len(),
        });
    }
    let mut total = Rational::zero();
    for (mask, a) in p.coefficients.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let mut term = a.clone();
        for (i, ti) in t.iter().enumerate() {
            if mask >> i & 1 == 1 {
                term *= ti;
            }
        }
        if mask.count_ones() % 2 == 1 {
            total -= term;
        } else {
            total += term;
        }
    }
    Ok(total)
}

/// Verifies that nonzero coefficients occur for exactly the degrees
/// `c(G_+) - 1 ..= N - c(G_-)` and returns that range.
pub fn degree_support(p: &CrossingPolynomial, g: &SignedGraph) -> Result<(usize, usize)> {
    let cc = g.component_counts();
    if cc.whole != 1 {
        return Err(Error::Disconnected);
    }
    if g.red_count() != p.red_count {
        return Err(Error::RedCount {
            expected: p.red_count,
            actual: g.red_count(),
        });
    }
    let (lo, hi) = (cc.black - 1, g.n() - cc.red);
    let present = p.degrees_present();
    let expected: Vec<usize> = (lo..=hi).collect();
    if present != expected {
        return Err(Error::ConsistencyFault(format!(
            "crossing polynomial has degrees {present:?}, expected {lo}..={hi}"
        )));
    }
    Ok((lo, hi))
}

fn check_direction(alpha: &[Rational]) -> Result<()> {
    if let Some(a) = alpha.iter().find(|a| !a.is_positive()) {
        return Err(Error::InvalidArgument(format!(
            "ray direction must be positive, got component {a}"
        )));
    }
    Ok(())
}

/// `q(t) = M(t * alpha)` expanded in powers of `t`.
pub fn ray_polynomial(p: &CrossingPolynomial, alpha: &[Rational]) -> Result<Poly> {
    if alpha.len() != p.red_count {
        return Err(Error::LengthMismatch {
            expected: p.red_count,
            actual: alpha.len(),
        });
    }
    check_direction(alpha)?;
    let mut c = vec![Rational::zero(); p.red_count + 1];
    for (mask, a) in p.coefficients.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let k = mask.count_ones() as usize;
        let mut term = a.clone();
        for (i, ai) in alpha.iter().enumerate() {
            if mask >> i & 1 == 1 {
                term *= ai;
            }
        }
        if k % 2 == 1 {
            c[k] -= term;
        } else {
            c[k] += term;
        }
    }
    Ok(Poly::new(c))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossingRoot {
    #[serde(with = "serde_rational")]
    pub lo: Rational,
    #[serde(with = "serde_rational")]
    pub hi: Rational,
    #[serde(with = "serde_rational::option")]
    pub exact: Option<Rational>,
    pub approx: f64,
    pub multiplicity: usize,
}

/// Positive roots of the ray polynomial, ascending, with multiplicities.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RayCrossings {
    #[serde(with = "serde_rational::vec")]
    pub direction: Vec<Rational>,
    pub roots: Vec<CrossingRoot>,
}

impl RayCrossings {
    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }
}

/// Width to which irrational crossing locations are refined.
pub fn root_width() -> Rational {
    Rational::new(1.into(), 1_000_000_000_000i64.into())
}

pub fn ray_crossings(p: &CrossingPolynomial, alpha: &[Rational]) -> Result<RayCrossings> {
    let q = ray_polynomial(p, alpha)?;
    if q.is_zero() {
        return Err(Error::ConsistencyFault(
            "ray polynomial vanishes identically".into(),
        ));
    }
    let width = root_width();
    let mut roots: Vec<(IsolatedRoot, usize)> = Vec::new();
    for (factor, mult) in q.square_free_decomposition() {
        for root in isolate_positive_roots(&factor, &width) {
            roots.push((root, mult));
        }
    }
    roots.sort_by(|a, b| compare_isolated(&a.0, &b.0));
    Ok(RayCrossings {
        direction: alpha.to_vec(),
        roots: roots
            .into_iter()
            .map(|(r, multiplicity)| CrossingRoot {
                approx: r.midpoint(),
                lo: r.lo,
                hi: r.hi,
                exact: r.exact,
                multiplicity,
            })
            .collect(),
    })
}

/// Expands `alpha * prod_i (1 - c_i t_i)` into coefficients `A_I = alpha prod_{i in I} c_i`.
pub fn product_form(alpha: &Rational, c: &[Rational]) -> CrossingPolynomial {
    let r = c.len();
    let coefficients = (0..1usize << r)
        .map(|mask| {
            (0..r)
                .filter(|i| mask >> i & 1 == 1)
                .fold(alpha.clone(), |acc, i| acc * &c[i])
        })
        .collect();
    CrossingPolynomial {
        red_count: r,
        coefficients,
    }
}

/// Sum of all coefficients, i.e. the unsigned tree count when black weights
/// are 1.
pub fn coefficient_total(p: &CrossingPolynomial) -> Rational {
    p.coefficients.iter().fold(Rational::zero(), |a, b| a + b)
}
