//! Exhaustive spanning tree and spanning forest enumeration.
//!
//! These are brute-force oracles for the determinant-based routes and are
//! meant for small graphs (N up to about 12). Both enumerators branch on
//! each edge in order (include / exclude) and prune branches that can no
//! longer produce a valid result.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::graph::{SignedGraph, UnionFind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    /// Indices into `g.edges()`.
    pub edges: Vec<usize>,
    /// Product of all edge weights.
    pub pi: Rational,
    /// Product of black edge weights only.
    pub pi_black: Rational,
}

impl SpanningTree {
    pub fn product_with(&self, weights: &[Rational]) -> Rational {
        self.edges.iter().fold(Rational::one(), |acc, &i| acc * &weights[i])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningForest {
    pub edges: Vec<usize>,
    /// Component id of every vertex, numbered by smallest member.
    pub component_of: Vec<usize>,
    pub components: usize,
    pub pi: Rational,
}

/// A forest of [`spanning_forests_uw`] together with its matching sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedForest {
    pub forest: SpanningForest,
    pub sign: i8,
}

fn product(g: &SignedGraph, edges: &[usize], black_only: bool) -> Rational {
    edges
        .iter()
        .map(|&i| &g.edges()[i])
        .filter(|e| !(black_only && e.is_red()))
        .fold(Rational::one(), |acc, e| acc * &e.weight)
}

fn connected_with(g: &SignedGraph, chosen: &[usize], rest: usize) -> bool {
    let mut uf = UnionFind::new(g.n());
    for &i in chosen {
        uf.union(g.edges()[i].u, g.edges()[i].v);
    }
    for e in &g.edges()[rest..] {
        uf.union(e.u, e.v);
    }
    uf.components() == 1
}

/// Every spanning tree of `g`. Empty when `g` is disconnected.
pub fn spanning_trees(g: &SignedGraph) -> Vec<SpanningTree> {
    let mut out = Vec::new();
    if !g.is_connected() {
        return out;
    }
    let mut chosen = Vec::with_capacity(g.n());
    tree_rec(g, 0, &mut chosen, UnionFind::new(g.n()), &mut out);
    out
}

fn tree_rec(
    g: &SignedGraph,
    idx: usize,
    chosen: &mut Vec<usize>,
    uf: UnionFind,
    out: &mut Vec<SpanningTree>,
) {
    let need = g.n() - 1;
    if chosen.len() == need {
        out.push(SpanningTree {
            edges: chosen.clone(),
            pi: product(g, chosen, false),
            pi_black: product(g, chosen, true),
        });
        return;
    }
    if g.edges().len() - idx < need - chosen.len() {
        return;
    }
    let e = &g.edges()[idx];
    let mut with = uf.clone();
    if with.union(e.u, e.v) {
        chosen.push(idx);
        tree_rec(g, idx + 1, chosen, with, out);
        chosen.pop();
    }
    if connected_with(g, chosen, idx + 1) {
        tree_rec(g, idx + 1, chosen, uf, out);
    }
}

/// Oracle for the tree constant: `sum_T prod_{e in T} w_e` with red edge `i`
/// at weight `-t[i]`.
pub fn tree_sum(g: &SignedGraph, t: &[Rational]) -> Result<Rational> {
    let w = g.weights_at(t)?;
    Ok(spanning_trees(g)
        .iter()
        .fold(Rational::zero(), |acc, tr| acc + tr.product_with(&w)))
}

/// Spanning `k`-forests in which every tree holds exactly one vertex of `u`
/// and one of `w` (`k = u.len() = w.len()`).
///
/// The sign is that of the permutation sending position `i` of `w` to the
/// position in `u` of the vertex sharing its tree.
pub fn spanning_forests_uw(g: &SignedGraph, u: &[usize], w: &[usize]) -> Result<Vec<SignedForest>> {
    let k = u.len();
    if w.len() != k || k == 0 || k > g.n() {
        return Err(Error::InvalidArgument(format!(
            "vertex sets must have equal size in 1..={}",
            g.n()
        )));
    }
    let distinct = |s: &[usize]| (0..s.len()).all(|i| (i + 1..s.len()).all(|j| s[i] != s[j]));
    if u.iter().chain(w).any(|&x| x >= g.n()) || !distinct(u) || !distinct(w) {
        return Err(Error::InvalidArgument("vertex sets must be distinct in-range vertices".into()));
    }
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let ctx = ForestCtx { g, u, w, k };
    ctx.rec(0, &mut chosen, UnionFind::new(g.n()), &mut out);
    Ok(out)
}

/// The `k = 2` case with `u = [u0, u1]`, `w = [w0, w1]`.
pub fn spanning_2forests(g: &SignedGraph, u: [usize; 2], w: [usize; 2]) -> Result<Vec<SignedForest>> {
    spanning_forests_uw(g, &u, &w)
}

/// `sum_F sign(F) pi(F)` over [`spanning_forests_uw`].
pub fn signed_forest_sum(g: &SignedGraph, u: &[usize], w: &[usize]) -> Result<Rational> {
    Ok(spanning_forests_uw(g, u, w)?
        .iter()
        .fold(Rational::zero(), |acc, f| {
            if f.sign > 0 {
                acc + &f.forest.pi
            } else {
                acc - &f.forest.pi
            }
        }))
}

struct ForestCtx<'a> {
    g: &'a SignedGraph,
    u: &'a [usize],
    w: &'a [usize],
    k: usize,
}

impl ForestCtx<'_> {
    fn rec(&self, idx: usize, chosen: &mut Vec<usize>, uf: UnionFind, out: &mut Vec<SignedForest>) {
        let need = self.g.n() - self.k;
        if chosen.len() == need {
            if let Some(f) = self.finish(chosen, uf) {
                out.push(f);
            }
            return;
        }
        if self.g.edges().len() - idx < need - chosen.len() {
            return;
        }
        let e = &self.g.edges()[idx];
        let mut with = uf.clone();
        if self.joinable(&mut with, e.u, e.v) {
            with.union(e.u, e.v);
            chosen.push(idx);
            self.rec(idx + 1, chosen, with, out);
            chosen.pop();
        }
        self.rec(idx + 1, chosen, uf, out);
    }

    /// Joining must not put two vertices of `u` (or of `w`) in one tree.
    fn joinable(&self, uf: &mut UnionFind, a: usize, b: usize) -> bool {
        let (ra, rb) = (uf.find(a), uf.find(b));
        if ra == rb {
            return false;
        }
        for set in [self.u, self.w] {
            let in_a = set.iter().any(|&x| uf.find(x) == ra);
            let in_b = set.iter().any(|&x| uf.find(x) == rb);
            if in_a && in_b {
                return false;
            }
        }
        true
    }

    fn finish(&self, chosen: &[usize], mut uf: UnionFind) -> Option<SignedForest> {
        if uf.components() != self.k {
            return None;
        }
        let roots_u: Vec<usize> = self.u.iter().map(|&x| uf.find(x)).collect();
        let mut perm = Vec::with_capacity(self.k);
        for &x in self.w {
            let r = uf.find(x);
            perm.push(roots_u.iter().position(|&ru| ru == r)?);
        }
        let inversions = (0..self.k)
            .flat_map(|i| (i + 1..self.k).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        let n = self.g.n();
        let mut component_of = vec![usize::MAX; n];
        let mut ids = std::collections::HashMap::new();
        for x in 0..n {
            let r = uf.find(x);
            let next = ids.len();
            component_of[x] = *ids.entry(r).or_insert(next);
        }
        Some(SignedForest {
            forest: SpanningForest {
                edges: chosen.to_vec(),
                component_of,
                components: self.k,
                pi: product(self.g, chosen, false),
            },
            sign: if inversions % 2 == 0 { 1 } else { -1 },
        })
    }
}
