//! Cycle-space form of the two-red-edge discriminant.

use std::collections::VecDeque;

use num::Zero;

use crate::error::{Error, Result};
use crate::exact::{rational_from_i64, Rational, RationalMatrix};
use crate::graph::SignedGraph;

/// Fundamental cycle basis as a `c x E` matrix of `0, +1, -1` (edges
/// oriented from lower to higher vertex).
///
/// The tree is a breadth-first spanning tree of `g` without the two red
/// edges. Cycles of the other non-tree edges come first in edge order,
/// followed by the cycle through red edge 1 and then red edge 2. `None` if
/// removing the red edges disconnects `g`.
pub fn cycle_basis(g: &SignedGraph) -> Result<Option<RationalMatrix>> {
    let reds: Vec<usize> = (0..g.edges().len()).filter(|&i| g.edges()[i].is_red()).collect();
    if reds.len() != 2 {
        return Err(Error::RedCount {
            expected: 2,
            actual: reds.len(),
        });
    }
    let n = g.n();
    let adj = g.adjacency();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    let mut in_tree = vec![false; g.edges().len()];
    depth[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for &(y, ei) in &adj[x] {
            if reds.contains(&ei) || depth[y] != usize::MAX {
                continue;
            }
            depth[y] = depth[x] + 1;
            parent[y] = Some((x, ei));
            in_tree[ei] = true;
            queue.push_back(y);
        }
    }
    if depth.contains(&usize::MAX) {
        return Ok(None);
    }

    let order = (0..g.edges().len())
        .filter(|&i| !in_tree[i] && !reds.contains(&i))
        .chain(reds.iter().copied());
    let rows: Vec<Vec<Rational>> = order
        .map(|ei| {
            let mut row = vec![0i64; g.edges().len()];
            let e = &g.edges()[ei];
            row[ei] = 1;
            // close the cycle with the tree path from e.v back to e.u
            let (mut a, mut b) = (e.v, e.u);
            let step = |x: usize, row: &mut [i64], forward: bool| {
                let (p, pe) = parent[x].expect("non-root vertex has a parent");
                let edge = &g.edges()[pe];
                // walking x -> p when forward, p -> x otherwise
                let from = if forward { x } else { p };
                row[pe] += if edge.u == from { 1 } else { -1 };
                p
            };
            let mut tail = Vec::new();
            while a != b {
                if depth[a] >= depth[b] {
                    a = step(a, &mut row, true);
                } else {
                    tail.push(b);
                    b = parent[b].unwrap().0;
                }
            }
            for x in tail {
                step(x, &mut row, false);
            }
            row.into_iter().map(rational_from_i64).collect()
        })
        .collect();
    if rows.len() < 2 {
        return Ok(None);
    }
    RationalMatrix::from_rows(rows).map(Some)
}

/// Minor of the cycle Gram matrix `F F^T` with the row of red edge 2's cycle
/// and the column of red edge 1's cycle removed. Its square equals `|D|`
/// for unit black weights.
///
/// `None` when removing the red edges disconnects the graph.
pub fn cycle_minor(g: &SignedGraph) -> Result<Option<Rational>> {
    let Some(f) = cycle_basis(g)? else {
        return Ok(None);
    };
    let c = f.rows();
    let gram = f.mul(&f.transpose());
    let minor = gram.without(&[c - 1], &[c - 2]).determinant();
    Ok(Some(if minor.is_zero() { Rational::zero() } else { minor }))
}
