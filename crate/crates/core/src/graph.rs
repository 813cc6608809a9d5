//! Signed weighted graphs, connectivity and deletion/contraction minors.

use std::collections::HashMap;

use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{parse_rational, Rational};

/// An undirected weighted edge with `u < v`.
///
/// `red` holds the red index (0-based) for negative-weight edges. Red indices
/// are fixed by the order of red edges in the input and survive minors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: Rational,
    pub red: Option<usize>,
}

impl Edge {
    pub fn is_red(&self) -> bool {
        self.red.is_some()
    }

    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentCounts {
    /// c(G)
    pub whole: usize,
    /// c(G_+), black edges only
    pub black: usize,
    /// c(G_-), red edges only
    pub red: usize,
}

/// Result of [`SignedGraph::minor`].
#[derive(Clone, Debug)]
pub struct Minor {
    pub graph: SignedGraph,
    /// Vertex of the minor for every vertex of the parent graph.
    pub vertex_map: Vec<usize>,
    /// A contracted edge was already a loop when its turn came (the contracted
    /// set contains a cycle). No spanning tree contains such a set.
    pub degenerate: bool,
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphDocument {
    n: usize,
    edges: Vec<EdgeDocument>,
}

#[derive(Debug, Serialize, Deserialize)]
struct EdgeDocument {
    u: usize,
    v: usize,
    w: String,
}

/// Parses the graph JSON wire format `{"n": N, "edges": [{"u":..,"v":..,"w":"p/q"}]}`.
pub fn parse_graph(document: &str) -> Result<SignedGraph> {
    let doc: GraphDocument = serde_json::from_str(document)?;
    let edges = doc
        .edges
        .iter()
        .enumerate()
        .map(|(i, e)| {
            parse_rational(&e.w)
                .map(|w| (e.u, e.v, w))
                .map_err(|_| Error::InvalidGraph(format!("edge {i} ({},{}): bad weight {:?}", e.u, e.v, e.w)))
        })
        .collect::<Result<Vec<_>>>()?;
    SignedGraph::new(doc.n, edges)
}

impl SignedGraph {
    /// Builds a simple signed graph. Negative weights are red; red indices
    /// follow edge order.
    pub fn new(n: usize, edges: Vec<(usize, usize, Rational)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("vertex count must be positive".into()));
        }
        let mut seen = HashMap::new();
        let mut out = Vec::with_capacity(edges.len());
        let mut next_red = 0;
        for (i, (u, v, w)) in edges.into_iter().enumerate() {
            let name = format!("edge {i} ({u},{v})");
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("{name}: vertex id out of range 0..{n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("{name}: self-loop")));
            }
            if w.is_zero() {
                return Err(Error::InvalidGraph(format!("{name}: zero weight")));
            }
            let key = (u.min(v), u.max(v));
            if let Some(prev) = seen.insert(key, i) {
                return Err(Error::InvalidGraph(format!("{name}: duplicate of edge {prev}")));
            }
            let red = w.is_negative().then(|| {
                next_red += 1;
                next_red - 1
            });
            out.push(Edge {
                u: key.0,
                v: key.1,
                weight: w,
                red,
            });
        }
        Ok(Self { n, edges: out })
    }

    /// Convenience constructor from integer weights.
    pub fn from_i64(n: usize, edges: &[(usize, usize, i64)]) -> Result<Self> {
        Self::new(
            n,
            edges
                .iter()
                .map(|&(u, v, w)| (u, v, Rational::from_integer(w.into())))
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Red edges in red-index order.
    pub fn red_edges(&self) -> Vec<&Edge> {
        self.edges.iter().filter(|e| e.is_red()).collect()
    }

    pub fn black_edges(&self) -> Vec<&Edge> {
        self.edges.iter().filter(|e| !e.is_red()).collect()
    }

    pub fn red_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_red()).count()
    }

    pub fn black_count(&self) -> usize {
        self.edges.len() - self.red_count()
    }

    /// Red labels present in this graph, in order.
    pub fn red_labels(&self) -> Vec<usize> {
        self.edges.iter().filter_map(|e| e.red).collect()
    }

    /// Magnitudes `t_i = -weight` of the red edges as given.
    pub fn red_magnitudes(&self) -> Vec<Rational> {
        self.red_edges().iter().map(|e| -e.weight.clone()).collect()
    }

    /// Per-edge weights with red edge `i` (by position) set to `-t[i]`.
    pub fn weights_at(&self, t: &[Rational]) -> Result<Vec<Rational>> {
        let r = self.red_count();
        if t.len() != r {
            return Err(Error::LengthMismatch {
                expected: r,
                actual: t.len(),
            });
        }
        if let Some(bad) = t.iter().find(|x| x.is_negative()) {
            return Err(Error::InvalidArgument(format!("red magnitude {bad} is negative")));
        }
        let mut pos = 0;
        Ok(self
            .edges
            .iter()
            .map(|e| {
                if e.is_red() {
                    pos += 1;
                    -t[pos - 1].clone()
                } else {
                    e.weight.clone()
                }
            })
            .collect())
    }

    /// The same graph with only black edges.
    pub fn black_subgraph(&self) -> SignedGraph {
        SignedGraph {
            n: self.n,
            edges: self.edges.iter().filter(|e| !e.is_red()).cloned().collect(),
        }
    }

    fn count_components(&self, keep: impl Fn(&Edge) -> bool) -> usize {
        let mut uf = UnionFind::new(self.n);
        for e in self.edges.iter().filter(|e| keep(e)) {
            uf.union(e.u, e.v);
        }
        uf.components()
    }

    /// c(G), c(G_+), c(G_-), each over the full vertex set.
    pub fn component_counts(&self) -> ComponentCounts {
        ComponentCounts {
            whole: self.count_components(|_| true),
            black: self.count_components(|e| !e.is_red()),
            red: self.count_components(|e| e.is_red()),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.count_components(|_| true) == 1
    }

    /// Contracts the red edges labelled in `contract` and deletes those in
    /// `delete`. Labels are red indices as stored on the edges.
    ///
    /// Parallel black edges created by contraction are merged by summing
    /// weights (dropped if the sum is zero); loops are discarded. Surviving
    /// red edges keep their label and stay distinct edges.
    pub fn minor(&self, contract: &[usize], delete: &[usize]) -> Result<Minor> {
        let labels = self.red_labels();
        for l in contract.iter().chain(delete) {
            if !labels.contains(l) {
                return Err(Error::InvalidArgument(format!("no red edge with index {l}")));
            }
        }
        if let Some(l) = contract.iter().find(|l| delete.contains(l)) {
            return Err(Error::InvalidArgument(format!(
                "red edge {l} is both contracted and deleted"
            )));
        }
        let mut uf = UnionFind::new(self.n);
        let mut degenerate = false;
        for e in &self.edges {
            if e.red.is_some_and(|l| contract.contains(&l)) && !uf.union(e.u, e.v) {
                degenerate = true;
            }
        }
        let mut vertex_map = vec![usize::MAX; self.n];
        let mut root_id = HashMap::new();
        for x in 0..self.n {
            let r = uf.find(x);
            let next = root_id.len();
            vertex_map[x] = *root_id.entry(r).or_insert(next);
        }
        let n = root_id.len();

        let mut edges: Vec<Edge> = Vec::new();
        let mut black_slot: HashMap<(usize, usize), usize> = HashMap::new();
        for e in &self.edges {
            if e.red.is_some_and(|l| contract.contains(&l) || delete.contains(&l)) {
                continue;
            }
            let (a, b) = (vertex_map[e.u], vertex_map[e.v]);
            if a == b {
                continue;
            }
            let (u, v) = (a.min(b), a.max(b));
            if e.is_red() {
                edges.push(Edge { u, v, ..e.clone() });
            } else if let Some(&slot) = black_slot.get(&(u, v)) {
                edges[slot].weight += &e.weight;
            } else {
                black_slot.insert((u, v), edges.len());
                edges.push(Edge { u, v, ..e.clone() });
            }
        }
        edges.retain(|e| !e.weight.is_zero());
        Ok(Minor {
            graph: SignedGraph { n, edges },
            vertex_map,
            degenerate,
        })
    }

    /// Sorted edge list, used to compare graphs up to edge order.
    pub fn canonical_form(&self) -> (usize, Vec<(usize, usize, Rational, Option<usize>)>) {
        let mut v: Vec<_> = self
            .edges
            .iter()
            .map(|e| (e.u, e.v, e.weight.clone(), e.red))
            .collect();
        v.sort();
        (self.n, v)
    }

    /// Serializes back to the graph JSON wire format.
    pub fn to_json(&self) -> String {
        let doc = GraphDocument {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|e| EdgeDocument {
                    u: e.u,
                    v: e.v,
                    w: e.weight.to_string(),
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("graph document serializes")
    }

    /// Adjacency lists of `(neighbor, edge index)`.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.u].push((e.v, i));
            adj[e.v].push((e.u, i));
        }
        adj
    }

    /// Breadth-first hop distances from `src` over black edges only.
    pub fn black_distances(&self, src: usize) -> Vec<Option<usize>> {
        let adj = self.adjacency();
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap();
            for &(y, ei) in &adj[x] {
                if !self.edges[ei].is_red() && dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }
}

/// Union-find with path halving.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    sets: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            sets: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        self.sets -= 1;
        true
    }

    pub fn components(&self) -> usize {
        self.sets
    }
}
