//! Deciding `G -> (nK2, H)`.
//!
//! A good colouring has no red `nK2` and no blue `H`, i.e. a blue set `B` that
//! is `H`-free with `ν(G - B) <= n - 1`. Growing `B` never increases the red
//! matching number, so only inclusion-maximal `H`-free blue sets need to be
//! examined.

use crate::error::{Error, Result};
use crate::graph::{bits, EdgeSubset, Graph};
use crate::matching::{matching_number_masked, maximum_matching, Matching};
use crate::target::{
    contains_in, extension_ok, masked_adjacency, TargetPattern, EDGE_SEARCH_LIMIT,
};

/// Edge limit of the brute-force oracle.
pub const NAIVE_EDGE_LIMIT: usize = 18;

/// A red/blue colouring of the edges of a host graph; red is the complement
/// of the blue set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColouring<'g> {
    host: &'g Graph,
    blue: EdgeSubset,
}

impl<'g> EdgeColouring<'g> {
    pub fn new(host: &'g Graph, blue: EdgeSubset) -> Result<Self> {
        if !blue.is_valid_for(host) {
            return Err(Error::Stale("blue set belongs to a different host"));
        }
        Ok(EdgeColouring { host, blue })
    }

    pub fn from_blue_mask(host: &'g Graph, mask: u64) -> Result<Self> {
        Self::new(host, EdgeSubset::from_mask(mask, host.edge_count())?)
    }

    pub fn host(&self) -> &'g Graph {
        self.host
    }

    pub fn blue(&self) -> &EdgeSubset {
        &self.blue
    }

    pub fn red(&self) -> EdgeSubset {
        self.blue.complement()
    }

    pub fn is_blue(&self, e: usize) -> bool {
        self.blue.contains(e)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Search-tree nodes visited (colourings tried, for the oracle).
    pub nodes: u64,
    /// Complete maximal blue sets whose red matching number was computed.
    pub maximal_sets: u64,
}

/// Outcome of an arrowing query. `witness` is present iff `arrows` is false.
#[derive(Clone, Debug)]
pub struct ArrowingVerdict<'g> {
    pub arrows: bool,
    pub witness: Option<EdgeColouring<'g>>,
    pub stats: SearchStats,
}

fn check_query(g: &Graph, n: usize, limit: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("matching size n must be at least 1"));
    }
    if g.edge_count() > limit {
        return Err(Error::InstanceTooLarge {
            what: "edge count",
            size: g.edge_count(),
            limit,
        });
    }
    Ok(())
}

/// Decides whether `g` has a colouring with no red `nK2` and no blue `h`.
///
/// Depth-first search over edges in index order, trying blue before red.
/// A branch is cut when the blue side would contain `h`, or when a greedy
/// matching in the forced-red edges already reaches `n`. At the leaves,
/// non-maximal blue sets are skipped and the exact red matching number is
/// computed. The witness is the first good colouring in this order, which is
/// the lexicographically smallest colouring word (blue before red, by edge
/// index) among those with a maximal blue set.
pub fn has_good_colouring(g: &Graph, n: usize, h: TargetPattern) -> Result<ArrowingVerdict<'_>> {
    check_query(g, n, EDGE_SEARCH_LIMIT)?;
    let mut search = Search {
        g,
        n,
        h,
        stats: SearchStats::default(),
        blue_adj: [0; 64],
    };
    let found = search.dfs(0, 0, 0, 0);
    let witness =
        found.map(|mask| EdgeColouring::from_blue_mask(g, mask).expect("mask within host"));
    Ok(ArrowingVerdict {
        arrows: witness.is_none(),
        witness,
        stats: search.stats,
    })
}

struct Search<'g> {
    g: &'g Graph,
    n: usize,
    h: TargetPattern,
    stats: SearchStats,
    blue_adj: [u64; 64],
}

impl Search<'_> {
    fn dfs(&mut self, i: usize, blue: u64, red_used: u64, red_greedy: usize) -> Option<u64> {
        self.stats.nodes += 1;
        let m = self.g.edge_count();
        if i == m {
            return self.leaf(blue);
        }
        let (u, v) = self.g.edge(i);
        if extension_ok(&self.blue_adj, u, v, self.h) {
            self.blue_adj[u] |= 1 << v;
            self.blue_adj[v] |= 1 << u;
            let r = self.dfs(i + 1, blue | 1 << i, red_used, red_greedy);
            self.blue_adj[u] &= !(1 << v);
            self.blue_adj[v] &= !(1 << u);
            if r.is_some() {
                return r;
            }
        }
        let pair = 1u64 << u | 1 << v;
        let (used, greedy) = if red_used & pair == 0 {
            (red_used | pair, red_greedy + 1)
        } else {
            (red_used, red_greedy)
        };
        if greedy >= self.n {
            return None;
        }
        self.dfs(i + 1, blue, used, greedy)
    }

    fn leaf(&mut self, blue: u64) -> Option<u64> {
        let m = self.g.edge_count();
        let red = !blue & crate::graph::low_bits(m);
        for e in bits(red) {
            let (u, v) = self.g.edge(e);
            if extension_ok(&self.blue_adj, u, v, self.h) {
                return None;
            }
        }
        self.stats.maximal_sets += 1;
        (matching_number_masked(self.g, red) < self.n).then_some(blue)
    }
}

/// Brute force over all `2^|E|` colourings; returns the numerically smallest
/// good blue mask as witness.
pub fn naive_arrowing_oracle(g: &Graph, n: usize, h: TargetPattern) -> Result<ArrowingVerdict<'_>> {
    check_query(g, n, NAIVE_EDGE_LIMIT)?;
    let m = g.edge_count();
    let all = crate::graph::low_bits(m);
    let mut stats = SearchStats::default();
    for blue in 0..=all {
        stats.nodes += 1;
        let adj = masked_adjacency(g, blue);
        if contains_in(&adj[..g.vertex_count()], h) {
            continue;
        }
        if matching_number_masked(g, all & !blue) < n {
            let witness = EdgeColouring::from_blue_mask(g, blue)?;
            return Ok(ArrowingVerdict {
                arrows: false,
                witness: Some(witness),
                stats,
            });
        }
    }
    Ok(ArrowingVerdict {
        arrows: true,
        witness: None,
        stats,
    })
}

/// Classification of a colouring against `(nK2, h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColouringCheck {
    Good,
    /// A red matching with `n` edges, as host edge indices.
    RedViolation(Matching),
    /// The blue edges contain a copy of the target.
    BlueViolation,
}

/// Checks for a red `nK2` first, then for a blue `h`.
pub fn verify_colouring(c: &EdgeColouring<'_>, n: usize, h: TargetPattern) -> ColouringCheck {
    let g = c.host();
    let red = g.edge_subgraph(&c.red());
    let m = maximum_matching(&red);
    if m.len() >= n {
        let edges = m.edges()[..n]
            .iter()
            .map(|&e| {
                let (u, v) = red.edge(e);
                g.edge_index(u, v).expect("red edge belongs to host")
            })
            .collect();
        return ColouringCheck::RedViolation(
            Matching::new(g, edges).expect("subset of a matching"),
        );
    }
    if contains_in(g.edge_subgraph(c.blue()).adjacency(), h) {
        return ColouringCheck::BlueViolation;
    }
    ColouringCheck::Good
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::*;
    use alloc::vec::Vec;
    use rand::Rng;

    const P3: TargetPattern = TargetPattern::Path(3);
    const C3: TargetPattern = TargetPattern::Cycle(3);
    const C4: TargetPattern = TargetPattern::Cycle(4);

    fn two_triangles_bridged() -> Graph {
        Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3)]).unwrap()
    }

    #[test]
    fn engine_examples() {
        assert!(
            has_good_colouring(&Graph::cycle(4).unwrap(), 2, P3)
                .unwrap()
                .arrows
        );
        assert!(has_good_colouring(&k33_minus_e(), 2, C4).unwrap().arrows);
        assert!(
            has_good_colouring(&Graph::cycle(3).unwrap(), 1, C3)
                .unwrap()
                .arrows
        );

        let p4 = Graph::path(4).unwrap();
        let v = has_good_colouring(&p4, 2, P3).unwrap();
        assert!(!v.arrows);
        let w = v.witness.unwrap();
        assert_eq!(w.blue().iter().collect::<Vec<_>>(), [0, 2]);
        assert_eq!(verify_colouring(&w, 2, P3), ColouringCheck::Good);
    }

    #[test]
    fn p4_witness_matches_naive_enumeration() {
        // good colourings of P4 for (2K2, P3): blue {first}, {last} or both;
        // only the last is maximal
        let p4 = Graph::path(4).unwrap();
        let good: Vec<u64> = (0..8u64)
            .filter(|&b| {
                verify_colouring(&EdgeColouring::from_blue_mask(&p4, b).unwrap(), 2, P3)
                    == ColouringCheck::Good
            })
            .collect();
        assert_eq!(good, [0b001, 0b100, 0b101]);
    }

    #[test]
    fn oracle_examples() {
        assert!(
            naive_arrowing_oracle(&Graph::cycle(4).unwrap(), 2, P3)
                .unwrap()
                .arrows
        );
        let k2 = Graph::path(2).unwrap();
        let v = naive_arrowing_oracle(&k2, 1, C3).unwrap();
        assert!(!v.arrows);
        assert_eq!(v.witness.unwrap().blue().mask(), Some(1));
        assert!(
            naive_arrowing_oracle(&two_triangles_bridged(), 2, C3)
                .unwrap()
                .arrows
        );
        assert!(
            has_good_colouring(&two_triangles_bridged(), 2, C3)
                .unwrap()
                .arrows
        );
    }

    #[test]
    fn preconditions() {
        let g = Graph::cycle(4).unwrap();
        assert!(matches!(
            has_good_colouring(&g, 0, P3),
            Err(Error::Domain(_))
        ));
        let big = Graph::complete(9).unwrap();
        assert!(matches!(
            has_good_colouring(&big, 2, P3),
            Err(Error::InstanceTooLarge { .. })
        ));
        let mid = Graph::complete(7).unwrap();
        assert!(matches!(
            naive_arrowing_oracle(&mid, 2, P3),
            Err(Error::InstanceTooLarge { .. })
        ));
    }

    #[test]
    fn verify_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let all_red = EdgeColouring::from_blue_mask(&c4, 0).unwrap();
        match verify_colouring(&all_red, 2, P3) {
            ColouringCheck::RedViolation(m) => assert_eq!(m.len(), 2),
            other => panic!("{other:?}"),
        }
        let all_blue = EdgeColouring::from_blue_mask(&c4, 0b1111).unwrap();
        assert_eq!(
            verify_colouring(&all_blue, 2, P3),
            ColouringCheck::BlueViolation
        );
    }

    #[test]
    fn engine_agrees_with_oracle_on_random_graphs() {
        let mut rng = rng(31);
        let targets = [P3, C3, C4, TargetPattern::Path(4), TargetPattern::Cycle(5)];
        for _ in 0..1500 {
            let nv = rng.gen_range(2..=9);
            let max = nv * (nv - 1) / 2;
            let g = {
                let a0 = nv;
                let a1 = rng.gen_range(1..=max.min(14));
                random_graph_m(&mut rng, a0, a1)
            };
            for h in targets {
                for n in 1..=3 {
                    let a = has_good_colouring(&g, n, h).unwrap();
                    let b = naive_arrowing_oracle(&g, n, h).unwrap();
                    assert_eq!(a.arrows, b.arrows, "{g:?} n={n} {h}");
                    if let Some(w) = &a.witness {
                        assert_eq!(verify_colouring(w, n, h), ColouringCheck::Good);
                    }
                }
            }
        }
    }

    #[test]
    fn monotone_in_edges_and_in_n() {
        let mut rng = rng(32);
        for _ in 0..300 {
            let nv = rng.gen_range(3..=8);
            let g = random_graph(&mut rng, nv, 0.4);
            if g.edge_count() == 0 || g.edge_count() > 16 {
                continue;
            }
            for h in [P3, C3, C4] {
                for n in 1..=3 {
                    let arrows = has_good_colouring(&g, n, h).unwrap().arrows;
                    if arrows && n >= 2 {
                        assert!(has_good_colouring(&g, n - 1, h).unwrap().arrows);
                    }
                    if arrows {
                        let missing: Vec<(usize, usize)> = (0..nv)
                            .flat_map(|u| (u + 1..nv).map(move |v| (u, v)))
                            .filter(|&(u, v)| !g.has_edge(u, v))
                            .collect();
                        if let Some(&(u, v)) = missing.get(rng.gen_range(0..missing.len().max(1))) {
                            let bigger = g.with_edge(u, v).unwrap();
                            assert!(has_good_colouring(&bigger, n, h).unwrap().arrows);
                        }
                    }
                }
            }
        }
    }
}
