//! Maximum cardinality matching in general graphs, using augmenting paths
//! with blossom contraction.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{bits, Graph};

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges, as edge indices of a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<usize>,
}

impl Matching {
    /// Checks that `edges` is a matching of `g`.
    pub fn new(g: &Graph, mut edges: Vec<usize>) -> Option<Self> {
        edges.sort_unstable();
        edges.dedup();
        let mut used = 0u64;
        for &e in &edges {
            if e >= g.edge_count() {
                return None;
            }
            let (u, v) = g.edge(e);
            let m = 1 << u | 1 << v;
            if used & m != 0 {
                return None;
            }
            used |= m;
        }
        Some(Matching { edges })
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Maximum matching of `g`.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mate = max_matching_mates(g.adjacency());
    let edges = (0..g.vertex_count())
        .filter(|&v| mate[v] != NONE && v < mate[v])
        .map(|v| g.edge_index(v, mate[v]).expect("matched pair is an edge"))
        .collect();
    Matching { edges }
}

/// Matching number `ν(g)`.
pub fn matching_number(g: &Graph) -> usize {
    matching_number_adj(g.adjacency())
}

/// Matching number of the graph given by adjacency rows.
pub fn matching_number_adj(adj: &[u64]) -> usize {
    max_matching_mates(adj)
        .iter()
        .filter(|&&m| m != NONE)
        .count()
        / 2
}

/// Matching number of the spanning subgraph of `g` formed by the edges in
/// `mask` (hosts with at most 64 edges).
pub fn matching_number_masked(g: &Graph, mask: u64) -> usize {
    let mut adj = [0u64; 64];
    for e in bits(mask) {
        let (u, v) = g.edge(e);
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    matching_number_adj(&adj[..g.vertex_count()])
}

/// Returns `mate[v]` for every vertex (`usize::MAX` if unmatched).
fn max_matching_mates(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    let mut mate = vec![NONE; n];
    // greedy start
    for u in 0..n {
        if mate[u] == NONE {
            if let Some(v) = bits(adj[u]).find(|&v| mate[v] == NONE) {
                mate[u] = v;
                mate[v] = u;
            }
        }
    }
    let mut state = Blossom::new(n);
    for root in 0..n {
        if mate[root] == NONE && adj[root] != 0 {
            if let Some(end) = state.find_augmenting_path(adj, &mate, root) {
                let mut v = end;
                while v != NONE {
                    let pv = state.parent[v];
                    let next = mate[pv];
                    mate[v] = pv;
                    mate[pv] = v;
                    v = next;
                }
            }
        }
    }
    mate
}

struct Blossom {
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Blossom {
    fn new(n: usize) -> Self {
        Blossom {
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::with_capacity(n),
        }
    }

    fn lca(&self, mate: &[usize], mut a: usize, mut b: usize) -> usize {
        let mut seen = 0u64;
        loop {
            a = self.base[a];
            seen |= 1 << a;
            if mate[a] == NONE {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if seen >> b & 1 == 1 {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mate: &[usize], mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }

    fn find_augmenting_path(&mut self, adj: &[u64], mate: &[usize], root: usize) -> Option<usize> {
        let n = adj.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in bits(adj[v]) {
                if self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && self.parent[mate[to]] != NONE) {
                    let cur = self.lca(mate, v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(mate, v, cur, to);
                    self.mark_path(mate, to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if mate[to] == NONE {
                        return Some(to);
                    }
                    let m = mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }
}
