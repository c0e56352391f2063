//! Structural gadgets for the matching-versus-`P3` lower bound: deletable
//! edge sets, end-cuts relative to a root, and the explicit colourings that
//! go with them.

use alloc::vec;
use alloc::vec::Vec;

use crate::arrowing::EdgeColouring;
use crate::blocks::{block_decompose, BlockDecomposition};
use crate::error::{Error, Result};
use crate::graph::{bits, EdgeSubset, Graph};
use crate::matching::matching_number;
use crate::target::{contains_target, TargetPattern};

/// Partition of a deletable edge set into a star and a matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletablePartition {
    /// Centre of the star part, `None` when the star is empty.
    pub center: Option<usize>,
    pub star: EdgeSubset,
    pub matching: EdgeSubset,
}

/// Tests whether `e1` is deletable in `g`: it splits into a star and a
/// matching, no edge outside `e1` touches the matching part, and the edges
/// outside `e1` all lie in one component. Returns a witness partition.
pub fn is_deletable_edge_set(g: &Graph, e1: &EdgeSubset) -> Option<DeletablePartition> {
    if !e1.is_valid_for(g) {
        return None;
    }
    let rest = g.delete_edges(e1);
    let with_edges = rest
        .components()
        .into_iter()
        .filter(|&c| bits(c).any(|v| rest.degree(v) > 0))
        .count();
    if with_edges > 1 {
        return None;
    }
    let rest_vertices = (0..g.vertex_count())
        .filter(|&v| rest.degree(v) > 0)
        .fold(0u64, |m, v| m | 1 << v);
    // Putting every e1-edge at the centre into the star only relaxes the
    // constraints on the matching part, so one partition per centre suffices.
    let centres = core::iter::once(None).chain((0..g.vertex_count()).map(Some));
    for center in centres {
        let mut star = EdgeSubset::empty(g.edge_count());
        let mut matching = EdgeSubset::empty(g.edge_count());
        let mut covered = 0u64;
        let mut ok = true;
        for e in e1.iter() {
            let (u, v) = g.edge(e);
            if center.is_some_and(|c| c == u || c == v) {
                star.insert(e);
                continue;
            }
            let ends = 1u64 << u | 1 << v;
            if covered & ends != 0 || rest_vertices & ends != 0 {
                ok = false;
                break;
            }
            covered |= ends;
            matching.insert(e);
        }
        if ok {
            return Some(DeletablePartition {
                center,
                star,
                matching,
            });
        }
    }
    None
}

/// Bookkeeping for an end-cut `v`: what is coloured around it and what that
/// costs in red matching edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndCutProfile {
    pub vertex: usize,
    pub is_root: bool,
    /// Neighbours of `v` in its parent block (empty for the root).
    pub parent_neighbours: u64,
    /// Far ends of the `K2` blocks hanging at `v`.
    pub k2_leaves: Vec<usize>,
    /// Each cycle block at `v` as a vertex sequence starting at `v`.
    pub cycles: Vec<Vec<usize>>,
    /// Child end blocks that are neither `K2` nor a cycle.
    pub other_blocks: usize,
}

impl EndCutProfile {
    pub fn t1(&self) -> usize {
        self.parent_neighbours.count_ones() as usize
    }

    pub fn t2(&self) -> usize {
        self.k2_leaves.len()
    }

    pub fn t(&self) -> usize {
        self.cycles.len()
    }

    /// Lengths of the paths left by opening each cycle at `v`.
    pub fn path_lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(|c| c.len() - 2).collect()
    }

    /// Number of edges the end-cut colouring touches.
    pub fn x(&self) -> usize {
        profile_x(self.t1(), self.t2(), &self.path_lengths())
    }

    /// Red matching number of the end-cut colouring.
    pub fn y(&self) -> usize {
        profile_y(&self.path_lengths())
    }
}

/// `t1 + t2 + 2t + Σ p_i`.
pub fn profile_x(t1: usize, t2: usize, paths: &[usize]) -> usize {
    t1 + t2 + 2 * paths.len() + paths.iter().sum::<usize>()
}

/// `1 + Σ floor((p_i + 1) / 3)`.
pub fn profile_y(paths: &[usize]) -> usize {
    1 + paths.iter().map(|p| (p + 1) / 3).sum::<usize>()
}

/// Block-cut tree of `g` rooted at the cut vertex `root`.
struct RootedTree<'a> {
    d: &'a BlockDecomposition,
    /// Parent block of every non-root cut vertex.
    parent_block: Vec<Option<usize>>,
    /// Strict descendants of every cut vertex.
    descendants: Vec<u64>,
}

impl<'a> RootedTree<'a> {
    fn new(g: &Graph, d: &'a BlockDecomposition, root: usize) -> Self {
        let n = g.vertex_count();
        let mut parent_block = vec![None; n];
        let mut descendants = vec![0u64; n];
        let mut tree = RootedTree {
            d,
            parent_block: vec![],
            descendants: vec![],
        };
        tree.visit_cut(root, None, &mut parent_block, &mut descendants);
        tree.parent_block = parent_block;
        tree.descendants = descendants;
        tree
    }

    /// Returns the vertex set of the subtree at cut vertex `v`, `v` included.
    fn visit_cut(
        &self,
        v: usize,
        parent: Option<usize>,
        pb: &mut [Option<usize>],
        desc: &mut [u64],
    ) -> u64 {
        pb[v] = parent;
        let mut below = 0u64;
        for &b in self.d.blocks_at(v) {
            if Some(b) == parent {
                continue;
            }
            below |= self.d.blocks()[b].vertices() & !(1 << v);
            for w in bits(self.d.cuts_in(b) & !(1 << v)) {
                below |= self.visit_cut(w, Some(b), pb, desc);
            }
        }
        desc[v] = below;
        below | 1 << v
    }
}

/// End-cuts of `g` relative to the cut vertex `root`, with their profiles.
///
/// `u` descends from cut vertex `v` when every `u`-`root` path passes through
/// `v`; an end-cut is a cut vertex with no cut vertex among its descendants.
pub fn find_end_cuts(g: &Graph, root: usize) -> Result<Vec<EndCutProfile>> {
    let d = block_decompose(g)?;
    if d.cut_vertices() == 0 {
        return Err(Error::Domain("graph has no cut vertex"));
    }
    if root >= g.vertex_count() || !d.is_cut_vertex(root) {
        return Err(Error::Domain("root must be a cut vertex"));
    }
    let tree = RootedTree::new(g, &d, root);
    let mut out = Vec::new();
    for v in bits(d.cut_vertices()) {
        if tree.descendants[v] & d.cut_vertices() != 0 {
            continue;
        }
        let parent_neighbours = match tree.parent_block[v] {
            Some(b) => g.neighbours(v) & d.blocks()[b].vertices(),
            None => 0,
        };
        let mut profile = EndCutProfile {
            vertex: v,
            is_root: v == root,
            parent_neighbours,
            k2_leaves: Vec::new(),
            cycles: Vec::new(),
            other_blocks: 0,
        };
        for &b in d.blocks_at(v) {
            if Some(b) == tree.parent_block[v] {
                continue;
            }
            let block = &d.blocks()[b];
            if block.is_k2() {
                let (a, c) = g.edge(block.edges()[0]);
                profile.k2_leaves.push(if a == v { c } else { a });
            } else if block.is_cycle() {
                profile
                    .cycles
                    .push(cycle_order_from(g, block.vertices(), v));
            } else {
                profile.other_blocks += 1;
            }
        }
        out.push(profile);
    }
    Ok(out)
}

/// Walks the cycle on vertex set `within` from `start`, first stepping to
/// its smaller neighbour.
fn cycle_order_from(g: &Graph, within: u64, start: usize) -> Vec<usize> {
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = (g.neighbours(start) & within).trailing_zeros() as usize;
    while cur != start {
        order.push(cur);
        let next = (g.neighbours(cur) & within & !(1 << prev)).trailing_zeros() as usize;
        prev = cur;
        cur = next;
    }
    order
}

/// Colours a cycle from edge 0 onwards as red, red, blue, repeating.
pub fn cycle_colouring(g: &Graph) -> Result<EdgeColouring<'_>> {
    if !g.is_cycle() {
        return Err(Error::NotACycle);
    }
    let (a, b) = g.edge(0);
    let mut order = vec![a, b];
    while order.len() < g.vertex_count() {
        let (prev, cur) = (order[order.len() - 2], order[order.len() - 1]);
        let next = (g.neighbours(cur) & !(1 << prev)).trailing_zeros() as usize;
        order.push(next);
    }
    let mut blue = EdgeSubset::empty(g.edge_count());
    for i in 0..order.len() {
        if i % 3 == 2 {
            let e = g
                .edge_index(order[i], order[(i + 1) % order.len()])
                .expect("cycle edge");
            blue.insert(e);
        }
    }
    EdgeColouring::new(g, blue)
}

/// A colouring of part of the edges of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialColouring {
    pub coloured: EdgeSubset,
    pub blue: EdgeSubset,
}

impl PartialColouring {
    pub fn red(&self) -> EdgeSubset {
        let mut r = self.coloured.clone();
        for e in self.blue.iter() {
            r.remove(e);
        }
        r
    }

    pub fn red_matching_number(&self, g: &Graph) -> usize {
        matching_number(&g.edge_subgraph(&self.red()))
    }

    pub fn blue_contains(&self, g: &Graph, h: TargetPattern) -> bool {
        contains_target(&g.edge_subgraph(&self.blue), h)
    }
}

/// Colours every edge at the end-cut red and each opened cycle path, from one
/// end to the other, as blue, red, red, repeating.
pub fn end_cut_colouring(g: &Graph, profile: &EndCutProfile) -> Result<PartialColouring> {
    if profile.other_blocks > 0 {
        return Err(Error::Domain(
            "an end block at this end-cut is neither K2 nor a cycle",
        ));
    }
    let v = profile.vertex;
    if v >= g.vertex_count() {
        return Err(Error::Stale("end-cut vertex not in graph"));
    }
    let idx = |a: usize, b: usize| {
        g.edge_index(a, b)
            .ok_or(Error::Stale("profile edge missing from graph"))
    };
    let m = g.edge_count();
    let mut coloured = EdgeSubset::empty(m);
    let mut blue = EdgeSubset::empty(m);
    for w in bits(profile.parent_neighbours) {
        coloured.insert(idx(v, w)?);
    }
    for &w in &profile.k2_leaves {
        coloured.insert(idx(v, w)?);
    }
    for cyc in &profile.cycles {
        if cyc.len() < 3 || cyc[0] != v {
            return Err(Error::Stale(
                "cycle traversal does not start at the end-cut",
            ));
        }
        coloured.insert(idx(v, cyc[1])?);
        coloured.insert(idx(v, cyc[cyc.len() - 1])?);
        for (j, pair) in cyc[1..].windows(2).enumerate() {
            let e = idx(pair[0], pair[1])?;
            coloured.insert(e);
            if j % 3 == 0 {
                blue.insert(e);
            }
        }
    }
    Ok(PartialColouring { coloured, blue })
}
