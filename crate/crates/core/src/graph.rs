//! Simple undirected graphs on at most [`MAX_ORDER`] vertices.
//!
//! Adjacency rows are `u64` bit masks, so every neighborhood query is a
//! handful of word operations. Vertices are numbered `0..n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported graph order (one adjacency row per `u64`).
pub const MAX_ORDER: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertices of one graph, stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        VertexSet(vertices.into_iter().fold(0, |m, v| m | bit(v)))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !bit(v);
    }

    /// Lowest vertex in the set.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            edge_count: 0,
        })
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        let all = low_bits(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        g.edge_count = n * n.saturating_sub(1) / 2;
        Ok(g)
    }

    pub(crate) fn from_rows(adj: Vec<u64>) -> Graph {
        let n = adj.len();
        debug_assert!(n <= MAX_ORDER);
        let degree_sum: usize = adj.iter().map(|r| r.count_ones() as usize).sum();
        let g = Graph {
            n,
            adj,
            edge_count: degree_sum / 2,
        };
        debug_assert!(g.is_well_formed());
        g
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    order: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.adj[u] & bit(v) == 0 {
            self.adj[u] |= bit(v);
            self.adj[v] |= bit(u);
            self.edge_count += 1;
        }
        Ok(())
    }

    /// Checks the representation invariants (symmetric, loop-free, in range,
    /// degree sum twice the edge count).
    pub fn is_well_formed(&self) -> bool {
        let range = low_bits(self.n);
        let mut degree_sum = 0;
        for (v, &row) in self.adj.iter().enumerate() {
            if row & !range != 0 || row & bit(v) != 0 {
                return false;
            }
            if VertexSet(row).iter().any(|u| self.adj[u] & bit(v) == 0) {
                return false;
            }
            degree_sum += row.count_ones() as usize;
        }
        degree_sum == 2 * self.edge_count
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// All vertices as a set.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet(low_bits(self.n))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Open neighborhood N(v). Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood N[v] = N(v) ∪ {v}.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.adj[v] | bit(v)))
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub(crate) fn closed_row(&self, v: usize) -> u64 {
        self.adj[v] | bit(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Δ(G); errors on the graph with no vertices.
    pub fn max_degree(&self) -> Result<usize> {
        (0..self.n)
            .map(|v| self.degree(v))
            .max()
            .ok_or(Error::EmptyGraph)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & !low_bits(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count == self.n * self.n.saturating_sub(1) / 2
    }

    /// Whether `set` contains no edge.
    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v] & set.0 == 0)
    }

    pub fn complement(&self) -> Graph {
        let all = low_bits(self.n);
        let adj = (0..self.n).map(|v| !self.adj[v] & all & !bit(v)).collect();
        Graph::from_rows(adj)
    }

    /// Subgraph induced by `keep`, reindexed in ascending vertex order.
    /// The returned map sends new index `i` to the original vertex.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if keep.0 & !low_bits(self.n) != 0 {
            return Err(Error::VertexOutOfRange {
                vertex: 63 - keep.0.leading_zeros() as usize,
                order: self.n,
            });
        }
        let map = keep.to_vec();
        let adj = map
            .iter()
            .map(|&old| {
                map.iter()
                    .enumerate()
                    .filter(|&(_, &other)| self.adj[old] & bit(other) != 0)
                    .fold(0u64, |row, (i, _)| row | bit(i))
            })
            .collect();
        Ok((Graph::from_rows(adj), map))
    }

    /// Connected components, each as a vertex set, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen & bit(start) != 0 {
                continue;
            }
            let comp = self.reach(start);
            seen |= comp;
            out.push(VertexSet(comp));
        }
        out
    }

    fn reach(&self, start: usize) -> u64 {
        let mut comp = bit(start);
        let mut frontier = comp;
        while frontier != 0 {
            let next = VertexSet(frontier)
                .iter()
                .fold(0u64, |acc, v| acc | self.adj[v]);
            frontier = next & !comp;
            comp |= next;
        }
        comp
    }

    /// Connected, with at least one vertex.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.reach(0) == low_bits(self.n)
    }

    /// A proper 2-coloring as the side containing each component's smallest
    /// vertex, or `None` if the graph has an odd cycle.
    pub fn bipartition(&self) -> Option<VertexSet> {
        let mut side = [0u64; 2];
        let mut seen = 0u64;
        for start in 0..self.n {
            if seen & bit(start) != 0 {
                continue;
            }
            let mut stack = vec![(start, 0usize)];
            seen |= bit(start);
            side[0] |= bit(start);
            while let Some((v, s)) = stack.pop() {
                if self.adj[v] & side[s] != 0 {
                    return None;
                }
                for u in VertexSet(self.adj[v] & !seen) {
                    seen |= bit(u);
                    side[1 - s] |= bit(u);
                    stack.push((u, 1 - s));
                }
            }
        }
        Some(VertexSet(side[0]))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&row| row << self.n));
        Ok(Graph::from_rows(adj))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Corona product G∘H: `g` keeps its numbering, then copy `j` of `h` occupies
/// the block `n_g + j·n_h .. n_g + (j+1)·n_h` and is joined to vertex `j`.
pub fn corona_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.order() == 0 || h.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let (ng, nh) = (g.order(), h.order());
    let n = ng * (1 + nh);
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let mut edges = g.edges();
    for j in 0..ng {
        let base = ng + j * nh;
        edges.extend(h.edges().into_iter().map(|(a, b)| (base + a, base + b)));
        edges.extend((0..nh).map(|a| (j, base + a)));
    }
    Graph::new(n, &edges)
}

/// Strong product G⊠H with vertex `(a, b)` at index `a·n_h + b`.
pub fn strong_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.order() == 0 || h.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let (ng, nh) = (g.order(), h.order());
    let n = ng * nh;
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let mut edges = Vec::new();
    for a in 0..ng {
        for b in 0..nh {
            for c in 0..ng {
                for d in 0..nh {
                    let (x, y) = (a * nh + b, c * nh + d);
                    if x >= y {
                        continue;
                    }
                    let first = a == c || g.has_edge(a, c);
                    let second = b == d || h.has_edge(b, d);
                    if first && second {
                        edges.push((x, y));
                    }
                }
            }
        }
    }
    Graph::new(n, &edges)
}
