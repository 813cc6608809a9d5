#![allow(dead_code)]

use num::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use signlap::{Rational, SignedGraph};

pub fn q(p: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(d))
}

pub fn int(p: i64) -> Rational {
    q(p, 1)
}

pub fn positive_rational(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    q(rng.gen_range(1..=num), rng.gen_range(1..=den))
}

pub fn nonnegative_rational(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    q(rng.gen_range(0..=num), rng.gen_range(1..=den))
}

/// Complete graph with the listed pairs red (weight -1), the rest weight 1.
pub fn complete(n: usize, reds: &[(usize, usize)]) -> SignedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v, if reds.contains(&(u, v)) { -1 } else { 1 }));
        }
    }
    SignedGraph::from_i64(n, &edges).unwrap()
}

/// Chain of `k` triangles glued at cut vertices, each with one red edge.
pub fn triangle_chain(k: usize) -> SignedGraph {
    let mut edges = Vec::new();
    for i in 0..k {
        let a = 2 * i;
        edges.push((a, a + 1, 1));
        edges.push((a + 1, a + 2, 1));
        edges.push((a, a + 2, -1));
    }
    SignedGraph::from_i64(2 * k + 1, &edges).unwrap()
}

#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub n: usize,
    /// Probability of each non-tree pair being an edge.
    pub density: f64,
    pub reds: usize,
    pub unit_black: bool,
    /// Pick red edges off a spanning tree so the black graph stays connected.
    pub black_connected: bool,
}

/// Random connected graph: a random spanning tree plus independent extra
/// edges, with `reds` edges coloured red (fewer if there are not enough).
pub fn random_graph(rng: &mut ChaCha8Rng, shape: Shape) -> SignedGraph {
    let n = shape.n;
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut tree = Vec::new();
    for i in 1..n {
        let a = order[i];
        let b = order[rng.gen_range(0..i)];
        tree.push((a.min(b), a.max(b)));
    }
    let mut extra = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.contains(&(u, v)) && rng.gen_bool(shape.density) {
                extra.push((u, v));
            }
        }
    }
    let mut candidates = if shape.black_connected {
        extra.clone()
    } else {
        tree.iter().chain(&extra).copied().collect()
    };
    candidates.shuffle(rng);
    candidates.truncate(shape.reds);

    let mut all: Vec<(usize, usize)> = tree.into_iter().chain(extra).collect();
    all.shuffle(rng);
    let edges = all
        .into_iter()
        .map(|(u, v)| {
            let w = if candidates.contains(&(u, v)) {
                -positive_rational(rng, 9, 5)
            } else if shape.unit_black {
                int(1)
            } else {
                positive_rational(rng, 9, 5)
            };
            (u, v, w)
        })
        .collect();
    SignedGraph::new(n, edges).unwrap()
}

pub fn random_t(rng: &mut ChaCha8Rng, r: usize) -> Vec<Rational> {
    (0..r).map(|_| nonnegative_rational(rng, 12, 7)).collect()
}

/// All simple graphs on `n` vertices given by an edge bitmask over the
/// lexicographic pair list, one representative per isomorphism class.
pub fn connected_graphs_up_to_isomorphism(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let index = |u: usize, v: usize| pairs.iter().position(|&p| p == (u.min(v), u.max(v))).unwrap();
    let perms = permutations(n);
    let maps: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect())
        .collect();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let canon = maps
            .iter()
            .map(|m| {
                (0..pairs.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .fold(0u32, |acc, i| acc | 1 << m[i])
            })
            .min()
            .unwrap();
        if !seen.insert(canon) {
            continue;
        }
        let edges: Vec<(usize, usize)> =
            (0..pairs.len()).filter(|&i| canon >> i & 1 == 1).map(|i| pairs[i]).collect();
        let g = SignedGraph::from_i64(n, &edges.iter().map(|&(u, v)| (u, v, 1)).collect::<Vec<_>>()).unwrap();
        if g.is_connected() {
            out.push(edges);
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// `edges` with the pairs at positions `i` and `j` red (weight -1).
pub fn with_two_reds(n: usize, edges: &[(usize, usize)], i: usize, j: usize) -> SignedGraph {
    let e: Vec<(usize, usize, i64)> = edges
        .iter()
        .enumerate()
        .map(|(k, &(u, v))| (u, v, if k == i || k == j { -1 } else { 1 }))
        .collect();
    SignedGraph::from_i64(n, &e).unwrap()
}
