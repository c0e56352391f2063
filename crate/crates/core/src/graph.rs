//! Small simple undirected graphs stored as a sorted edge list plus one
//! adjacency bitset per vertex.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count; one adjacency row is a `u64`.
pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph on at most 64 vertices.
///
/// Edges are kept as pairs `(u, v)` with `u < v`, sorted lexicographically; an
/// edge's index is its position in that list. The adjacency rows mirror the
/// edge list exactly.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(u8, u8)>,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list in any order and orientation.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if vertex_count > MAX_VERTICES {
            return Err(Error::TooManyVertices(vertex_count));
        }
        let mut adj = vec![0u64; vertex_count];
        let mut list = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        vertex_count,
                    });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if adj[u] & (1 << v) != 0 {
                return Err(Error::DuplicateEdge(u, v));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            list.push((u as u8, v as u8));
        }
        list.sort_unstable();
        Ok(Graph {
            vertex_count,
            edges: list,
            adj,
        })
    }

    /// Builds a graph from adjacency rows. Rows must be symmetric and loop-free.
    pub fn from_adjacency(adj: &[u64]) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            if adj[u] >> u & 1 == 1 {
                return Err(Error::SelfLoop(u));
            }
            if n < 64 && adj[u] >> n != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: 63 - adj[u].leading_zeros() as usize,
                    vertex_count: n,
                });
            }
            for v in bits(adj[u]) {
                if adj[v] >> u & 1 == 0 {
                    return Err(Error::Domain("adjacency rows are not symmetric"));
                }
                if u < v {
                    edges.push((u as u8, v as u8));
                }
            }
        }
        Ok(Graph {
            vertex_count: n,
            edges,
            adj: adj.to_vec(),
        })
    }

    pub fn empty(vertex_count: usize) -> Result<Self> {
        Self::new(vertex_count, &[])
    }

    /// Path on `m` vertices `0-1-...-(m-1)`.
    pub fn path(m: usize) -> Result<Self> {
        let edges: Vec<_> = (1..m).map(|i| (i - 1, i)).collect();
        Self::new(m, &edges)
    }

    /// Cycle on `k >= 3` vertices `0-1-...-(k-1)-0`.
    pub fn cycle(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::Domain("a cycle needs at least three vertices"));
        }
        let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        Self::new(k, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::new(n, &edges)
    }

    /// Complete bipartite graph with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Self::new(a + b, &edges)
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::new(leaves + 1, &edges)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of edge `e`, smaller first.
    #[inline]
    pub fn edge(&self, e: usize) -> (usize, usize) {
        let (u, v) = self.edges[e];
        (u as usize, v as usize)
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (u as usize, v as usize))
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && v < self.vertex_count && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .min()
            .unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Index of the edge joining `u` and `v`, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if !self.has_edge(u, v) {
            return None;
        }
        let key = if u < v {
            (u as u8, v as u8)
        } else {
            (v as u8, u as u8)
        };
        self.edges.binary_search(&key).ok()
    }

    /// Bitset of edge indices incident to `v`.
    pub fn incident_edges(&self, v: usize) -> EdgeSubset {
        let mut s = EdgeSubset::empty(self.edge_count());
        for w in bits(self.adj[v]) {
            s.insert(self.edge_index(v, w).expect("adjacency mirrors edge list"));
        }
        s
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_bits(self.vertex_count)
    }

    /// True iff every vertex lies in one component. A graph with an isolated
    /// vertex and at least one other vertex is not connected.
    pub fn is_connected(&self) -> bool {
        if self.vertex_count <= 1 {
            return true;
        }
        reach(&self.adj, 0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Vertex masks of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut out = Vec::new();
        let mut left = self.vertex_mask();
        while left != 0 {
            let c = reach(
                &self.adj,
                left.trailing_zeros() as usize,
                self.vertex_mask(),
            );
            out.push(c);
            left &= !c;
        }
        out
    }

    /// Removes the edges in `s`; vertices are kept and the remaining edges
    /// are re-indexed from their own sorted order.
    pub fn delete_edges(&self, s: &EdgeSubset) -> Graph {
        let mut adj = self.adj.clone();
        let mut edges = Vec::with_capacity(self.edges.len());
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if s.contains(i) {
                adj[u as usize] &= !(1 << v);
                adj[v as usize] &= !(1 << u);
            } else {
                edges.push((u, v));
            }
        }
        Graph {
            vertex_count: self.vertex_count,
            edges,
            adj,
        }
    }

    /// Subgraph spanned by the edges in `s` on the same vertex set.
    pub fn edge_subgraph(&self, s: &EdgeSubset) -> Graph {
        self.delete_edges(&s.complement())
    }

    /// Removes vertex `v` and its edges; the remaining vertices keep their
    /// relative order.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.vertex_count {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            });
        }
        let keep = self.vertex_mask() & !(1 << v);
        Ok(self.induced(keep))
    }

    /// Subgraph induced by the vertex mask, relabelled order-preservingly.
    pub fn induced(&self, keep: u64) -> Graph {
        let keep = keep & self.vertex_mask();
        let mut map = [u8::MAX; MAX_VERTICES];
        for (i, v) in bits(keep).enumerate() {
            map[v] = i as u8;
        }
        let n = keep.count_ones() as usize;
        let mut adj = vec![0u64; n];
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            let (a, b) = (map[u as usize], map[v as usize]);
            if a != u8::MAX && b != u8::MAX {
                adj[a as usize] |= 1 << b;
                adj[b as usize] |= 1 << a;
                edges.push((a, b));
            }
        }
        edges.sort_unstable();
        Graph {
            vertex_count: n,
            edges,
            adj,
        }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.vertex_count {
            return Err(Error::Domain(
                "permutation length differs from vertex count",
            ));
        }
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.vertex_count, &edges)
    }

    /// Drops isolated vertices.
    pub fn without_isolated(&self) -> Graph {
        let keep = self
            .adj
            .iter()
            .enumerate()
            .filter(|(_, r)| **r != 0)
            .fold(0u64, |m, (v, _)| m | 1 << v);
        self.induced(keep)
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let off = self.vertex_count;
        let mut edges: Vec<_> = self.edges().collect();
        edges.extend(other.edges().map(|(u, v)| (u + off, v + off)));
        Graph::new(off + other.vertex_count, &edges)
    }

    /// Copy of the graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut edges: Vec<_> = self.edges().collect();
        edges.push((u, v));
        Graph::new(self.vertex_count, &edges)
    }

    /// Copy with `extra` new isolated vertices appended.
    pub fn with_vertices(&self, extra: usize) -> Result<Graph> {
        let edges: Vec<_> = self.edges().collect();
        Graph::new(self.vertex_count + extra, &edges)
    }

    /// True iff the graph is a single cycle (connected and 2-regular, at least 3 vertices).
    pub fn is_cycle(&self) -> bool {
        self.vertex_count >= 3
            && self.adj.iter().all(|r| r.count_ones() == 2)
            && self.is_connected()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.vertex_count)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str(")")
    }
}

/// A set of edge indices of some host graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSubset {
    words: Vec<u64>,
    host_edge_count: usize,
}

impl EdgeSubset {
    pub fn empty(host_edge_count: usize) -> Self {
        EdgeSubset {
            words: vec![0; host_edge_count.div_ceil(64)],
            host_edge_count,
        }
    }

    pub fn full(host_edge_count: usize) -> Self {
        let mut s = Self::empty(host_edge_count);
        for i in 0..host_edge_count {
            s.insert(i);
        }
        s
    }

    /// Subset given as a single-word mask; fails if bits lie outside the host.
    pub fn from_mask(mask: u64, host_edge_count: usize) -> Result<Self> {
        if host_edge_count > 64 {
            return Err(Error::Domain("single-word masks cover at most 64 edges"));
        }
        if mask & !low_bits(host_edge_count) != 0 {
            return Err(Error::Stale(
                "edge mask has bits beyond the host edge count",
            ));
        }
        let mut s = Self::empty(host_edge_count);
        if host_edge_count > 0 {
            s.words[0] = mask;
        }
        Ok(s)
    }

    pub fn from_indices(
        indices: impl IntoIterator<Item = usize>,
        host_edge_count: usize,
    ) -> Result<Self> {
        let mut s = Self::empty(host_edge_count);
        for i in indices {
            if i >= host_edge_count {
                return Err(Error::Stale("edge index beyond the host edge count"));
            }
            s.insert(i);
        }
        Ok(s)
    }

    /// The subset as one word, if the host has at most 64 edges.
    pub fn mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    #[inline]
    pub fn host_edge_count(&self) -> usize {
        self.host_edge_count
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.host_edge_count && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(i < self.host_edge_count, "edge index {i} out of range");
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if i < self.host_edge_count {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(k, w)| bits(*w).map(move |b| k * 64 + b))
    }

    pub fn complement(&self) -> Self {
        let mut s = Self::empty(self.host_edge_count);
        for i in 0..self.host_edge_count {
            if !self.contains(i) {
                s.insert(i);
            }
        }
        s
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for (a, b) in s.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
        s
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.host_edge_count == g.edge_count()
    }
}

impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterates over the set bit positions of `w`, lowest first.
#[inline]
pub fn bits(mut w: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if w == 0 {
            None
        } else {
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(b)
        }
    })
}

#[inline]
pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Vertices reachable from `start` inside the vertex mask `within`.
pub(crate) fn reach(adj: &[u64], start: usize, within: u64) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= adj[v];
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}
