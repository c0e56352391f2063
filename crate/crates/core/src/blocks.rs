//! Biconnected components (blocks), cut vertices and end blocks.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// One block: a maximal nonseparable subgraph, given by its edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    edges: Vec<usize>,
    vertices: u64,
}

impl Block {
    /// Edge indices of the host, ascending.
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn vertices(&self) -> u64 {
        self.vertices
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices >> v & 1 == 1
    }

    pub fn is_k2(&self) -> bool {
        self.edges.len() == 1
    }

    /// A block is a cycle iff it has as many edges as vertices (and at least three).
    pub fn is_cycle(&self) -> bool {
        self.edges.len() >= 3 && self.edges.len() == self.vertices.count_ones() as usize
    }

    /// The block as a standalone graph, vertices relabelled in increasing order.
    pub fn subgraph(&self, g: &Graph) -> Graph {
        let mut map = [0usize; 64];
        for (i, v) in bits(self.vertices).enumerate() {
            map[v] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&e| g.edge(e))
            .map(|(u, v)| (map[u], map[v]))
            .collect();
        Graph::new(self.vertices.count_ones() as usize, &edges).expect("block of a simple graph")
    }
}

/// Block structure of a connected graph.
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    blocks: Vec<Block>,
    cut_vertices: u64,
    /// Blocks containing each vertex.
    blocks_at: Vec<Vec<usize>>,
}

impl BlockDecomposition {
    /// Blocks ordered by their smallest edge index.
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn cut_vertices(&self) -> u64 {
        self.cut_vertices
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.cut_vertices >> v & 1 == 1
    }

    /// Indices of blocks containing `v`; cut vertices lie in two or more.
    pub fn blocks_at(&self, v: usize) -> &[usize] {
        &self.blocks_at[v]
    }

    /// Cut vertices inside block `b`; its neighbours in the block-cut tree.
    pub fn cuts_in(&self, b: usize) -> u64 {
        self.blocks[b].vertices & self.cut_vertices
    }

    /// Blocks containing exactly one cut vertex.
    pub fn end_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.cuts_in(b).count_ones() == 1)
            .collect()
    }

    /// Vertices that are not cut vertices.
    pub fn non_cut_vertices(&self, g: &Graph) -> u64 {
        g.vertex_mask() & !self.cut_vertices
    }

    pub fn is_two_connected(&self, g: &Graph) -> bool {
        g.vertex_count() >= 3 && self.blocks.len() == 1
    }
}

/// Standard depth-first biconnected-component decomposition.
pub fn block_decompose(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.vertex_count();
    let mut st = Tarjan {
        g,
        disc: vec![u32::MAX; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    if n > 0 {
        st.dfs(0, usize::MAX);
    }
    let mut blocks = st.blocks;
    blocks.sort_by_key(|b| b.edges[0]);
    let mut blocks_at = vec![Vec::new(); n];
    for (i, b) in blocks.iter().enumerate() {
        for v in bits(b.vertices) {
            blocks_at[v].push(i);
        }
    }
    let cut_vertices = (0..n)
        .filter(|&v| blocks_at[v].len() >= 2)
        .fold(0u64, |m, v| m | 1 << v);
    Ok(BlockDecomposition {
        blocks,
        cut_vertices,
        blocks_at,
    })
}

struct Tarjan<'g> {
    g: &'g Graph,
    disc: Vec<u32>,
    low: Vec<u32>,
    time: u32,
    stack: Vec<usize>,
    blocks: Vec<Block>,
}

impl Tarjan<'_> {
    fn dfs(&mut self, u: usize, parent_edge: usize) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        for v in bits(self.g.neighbours(u)) {
            let e = self.g.edge_index(u, v).expect("adjacent");
            if e == parent_edge {
                continue;
            }
            if self.disc[v] == u32::MAX {
                self.stack.push(e);
                self.dfs(v, e);
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    let mut edges = Vec::new();
                    let mut vertices = 0u64;
                    while let Some(f) = self.stack.pop() {
                        let (a, b) = self.g.edge(f);
                        vertices |= 1 << a | 1 << b;
                        edges.push(f);
                        if f == e {
                            break;
                        }
                    }
                    edges.sort_unstable();
                    self.blocks.push(Block { edges, vertices });
                }
            } else if self.disc[v] < self.disc[u] {
                self.stack.push(e);
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}
