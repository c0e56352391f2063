//! Graphs with a given number of edges and no isolated vertices, one per
//! isomorphism class.
//!
//! Level `m` is grown from level `m - 1`: every graph of the new level arises
//! from one of the old level by adding an edge between existing vertices, a
//! pendant edge to a new vertex, or (when disconnected graphs are wanted) a
//! new disjoint `K2`. Candidates are deduplicated by canonical form and kept
//! in canonical-form order.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::blocks::block_decompose;
use crate::canon::canonical_graph;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph, MAX_VERTICES};

/// Edge count above which enumeration requires an explicit override.
pub const ENUMERATION_EDGE_LIMIT: usize = 13;

/// Structural filters applied after enumeration.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PruningProfile {
    #[default]
    None,
    /// Minimum degree at least 2, 2-connected, maximum degree at most 3.
    C3Minimal,
    /// The above plus 3-regular with every edge on a triangle.
    C3Aggressive,
}

impl PruningProfile {
    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            PruningProfile::None => true,
            PruningProfile::C3Minimal => c3_minimal_shape(g),
            PruningProfile::C3Aggressive => {
                c3_minimal_shape(g)
                    && g.min_degree() == 3
                    && g.edges()
                        .all(|(u, v)| g.neighbours(u) & g.neighbours(v) != 0)
            }
        }
    }
}

fn c3_minimal_shape(g: &Graph) -> bool {
    g.min_degree() >= 2
        && g.max_degree() <= 3
        && block_decompose(g).is_ok_and(|d| d.is_two_connected(g))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub edge_count: usize,
    /// Defaults to the least `v` with `v(v-1)/2 >= edge_count`.
    pub min_vertices: Option<usize>,
    /// Defaults to `edge_count + 1` for connected graphs and `2 * edge_count` otherwise.
    pub max_vertices: Option<usize>,
    pub connected_only: bool,
    pub pruning: PruningProfile,
    /// Lifts the edge-count guard.
    pub allow_large: bool,
}

impl EnumerationSpec {
    pub fn connected(edge_count: usize) -> Self {
        EnumerationSpec {
            edge_count,
            min_vertices: None,
            max_vertices: None,
            connected_only: true,
            pruning: PruningProfile::None,
            allow_large: false,
        }
    }

    pub fn vertex_bounds(&self) -> (usize, usize) {
        let m = self.edge_count;
        let lo = self
            .min_vertices
            .unwrap_or_else(|| (1..).find(|v| v * (v - 1) / 2 >= m).expect("unbounded"));
        let default_hi = if self.connected_only { m + 1 } else { 2 * m };
        (
            lo,
            self.max_vertices.unwrap_or(default_hi).min(MAX_VERTICES),
        )
    }

    fn validate(&self) -> Result<()> {
        if self.edge_count == 0 {
            return Err(Error::Domain("edge_count must be at least 1"));
        }
        if self.edge_count > ENUMERATION_EDGE_LIMIT && !self.allow_large {
            return Err(Error::InstanceTooLarge {
                what: "edge count",
                size: self.edge_count,
                limit: ENUMERATION_EDGE_LIMIT,
            });
        }
        let (lo, hi) = self.vertex_bounds();
        if lo > hi {
            return Err(Error::Domain("vertex bounds are inconsistent"));
        }
        Ok(())
    }
}

/// Level-by-level generator of isomorphism classes.
#[derive(Clone, Debug)]
pub struct Enumerator {
    connected_only: bool,
    edges: usize,
    classes: Vec<Graph>,
}

impl Enumerator {
    /// Starts at level 0 (no graphs); call [`advance`](Self::advance) for level 1.
    pub fn new(connected_only: bool) -> Self {
        Enumerator {
            connected_only,
            edges: 0,
            classes: Vec::new(),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// Representatives of the current level, canonically labelled and sorted
    /// by canonical form.
    pub fn graphs(&self) -> &[Graph] {
        &self.classes
    }

    /// Moves to the next edge count.
    pub fn advance(&mut self) {
        let mut next: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
        let mut offer = |g: Graph| {
            let (code, canon) = canonical_graph(&g);
            next.entry(code).or_insert(canon);
        };
        if self.edges == 0 {
            offer(Graph::path(2).expect("K2"));
        }
        for g in &self.classes {
            let n = g.vertex_count();
            for u in 0..n {
                for v in bits(!g.neighbours(u) & g.vertex_mask() & !((2u64 << u) - 1)) {
                    offer(g.with_edge(u, v).expect("non-edge"));
                }
            }
            if n < MAX_VERTICES {
                let grown = g.with_vertices(1).expect("room for a vertex");
                for u in 0..n {
                    offer(grown.with_edge(u, n).expect("new pendant"));
                }
            }
            if !self.connected_only && n + 2 <= MAX_VERTICES {
                offer(
                    g.with_vertices(2)
                        .and_then(|h| h.with_edge(n, n + 1))
                        .expect("room for K2"),
                );
            }
        }
        self.edges += 1;
        self.classes = next.into_values().collect();
    }

    /// Advances until the level equals `m`.
    pub fn advance_to(&mut self, m: usize) {
        while self.edges < m {
            self.advance();
        }
    }
}

/// All graphs matching `spec`, one per isomorphism class, in canonical order.
pub fn enumerate_graphs(spec: &EnumerationSpec) -> Result<Vec<Graph>> {
    spec.validate()?;
    let mut e = Enumerator::new(spec.connected_only);
    e.advance_to(spec.edge_count);
    Ok(filter_level(spec, e.graphs()))
}

pub(crate) fn filter_level(spec: &EnumerationSpec, level: &[Graph]) -> Vec<Graph> {
    let (lo, hi) = spec.vertex_bounds();
    level
        .iter()
        .filter(|g| (lo..=hi).contains(&g.vertex_count()) && spec.pruning.accepts(g))
        .cloned()
        .collect()
}
