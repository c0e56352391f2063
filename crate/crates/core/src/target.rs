//! Blue target patterns (paths and cycles), subgraph containment, the
//! incremental "can this edge turn blue" test, and enumeration of the
//! inclusion-maximal target-free edge sets.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{bits, EdgeSubset, Graph};

/// Largest host edge count for the edge-set searches.
pub const EDGE_SEARCH_LIMIT: usize = 30;

/// The blue target: a path on `m >= 2` vertices or a cycle on `k >= 3` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TargetPattern {
    Path(usize),
    Cycle(usize),
}

impl TargetPattern {
    pub fn path(m: usize) -> Result<Self> {
        if !(2..=64).contains(&m) {
            return Err(Error::Domain("path target needs 2..=64 vertices"));
        }
        Ok(TargetPattern::Path(m))
    }

    pub fn cycle(k: usize) -> Result<Self> {
        if !(3..=64).contains(&k) {
            return Err(Error::Domain("cycle target needs 3..=64 vertices"));
        }
        Ok(TargetPattern::Cycle(k))
    }

    pub fn order(&self) -> usize {
        match *self {
            TargetPattern::Path(m) | TargetPattern::Cycle(m) => m,
        }
    }

    pub fn edge_count(&self) -> usize {
        match *self {
            TargetPattern::Path(m) => m - 1,
            TargetPattern::Cycle(k) => k,
        }
    }

    /// The pattern as a graph on `0..order`.
    pub fn to_graph(&self) -> Graph {
        match *self {
            TargetPattern::Path(m) => Graph::path(m),
            TargetPattern::Cycle(k) => Graph::cycle(k),
        }
        .expect("order validated at construction")
    }
}

impl fmt::Display for TargetPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TargetPattern::Path(m) => write!(f, "P{m}"),
            TargetPattern::Cycle(k) => write!(f, "C{k}"),
        }
    }
}

impl FromStr for TargetPattern {
    type Err = Error;

    /// Parses `P3`, `C4`, `p5` and so on.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let kind = chars.next().ok_or(Error::Domain("empty target"))?;
        let order: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Domain("target order is not a number"))?;
        match kind {
            'P' | 'p' => Self::path(order),
            'C' | 'c' => Self::cycle(order),
            _ => Err(Error::Domain("target must start with P or C")),
        }
    }
}

/// True iff `g` has a (not necessarily induced) subgraph isomorphic to `h`.
pub fn contains_target(g: &Graph, h: TargetPattern) -> bool {
    contains_in(g.adjacency(), h)
}

pub(crate) fn contains_in(adj: &[u64], h: TargetPattern) -> bool {
    let n = adj.len();
    match h {
        TargetPattern::Path(2) => adj.iter().any(|r| *r != 0),
        TargetPattern::Path(3) => adj.iter().any(|r| r.count_ones() >= 2),
        TargetPattern::Path(m) => m <= n && (0..n).any(|s| extend_path(adj, s, 1 << s, m - 1)),
        TargetPattern::Cycle(3) => {
            (0..n).any(|u| bits(adj[u]).any(|v| v > u && adj[u] & adj[v] != 0))
        }
        TargetPattern::Cycle(4) => {
            (0..n).any(|u| (u + 1..n).any(|v| (adj[u] & adj[v]).count_ones() >= 2))
        }
        TargetPattern::Cycle(k) => {
            k <= n
                && (0..n).any(|s| {
                    let above = !((2u64 << s) - 1);
                    bits(adj[s] & above)
                        .any(|w| path_between(adj, w, s, 1 << s | 1 << w, k - 1, above))
                })
        }
    }
}

/// Whether a simple path can be extended from `end` by `more` further vertices.
fn extend_path(adj: &[u64], end: usize, used: u64, more: usize) -> bool {
    if more == 0 {
        return true;
    }
    bits(adj[end] & !used).any(|w| extend_path(adj, w, used | 1 << w, more - 1))
}

/// Whether a simple path of exactly `edges` edges runs from `cur` to `goal`
/// with interior vertices drawn from `allowed` and outside `used`.
fn path_between(
    adj: &[u64],
    cur: usize,
    goal: usize,
    used: u64,
    edges: usize,
    allowed: u64,
) -> bool {
    if edges == 1 {
        return adj[cur] >> goal & 1 == 1;
    }
    bits(adj[cur] & allowed & !used & !(1 << goal))
        .any(|w| path_between(adj, w, goal, used | 1 << w, edges - 1, allowed))
}

/// Longest extension (in vertices) from `end`, capped at `cap`.
fn longest_extension(adj: &[u64], end: usize, used: u64, cap: usize) -> usize {
    if cap == 0 {
        return 0;
    }
    let mut best = 0;
    for w in bits(adj[end] & !used) {
        best = best.max(1 + longest_extension(adj, w, used | 1 << w, cap - 1));
        if best >= cap {
            break;
        }
    }
    best
}

/// For an `h`-free graph given by `adj` that does not contain the edge `uv`,
/// whether adding `uv` keeps it `h`-free.
pub(crate) fn extension_ok(adj: &[u64], u: usize, v: usize, h: TargetPattern) -> bool {
    match h {
        TargetPattern::Path(2) => false,
        TargetPattern::Path(3) => adj[u] | adj[v] == 0,
        TargetPattern::Path(m) => !path_through(adj, u, v, m),
        TargetPattern::Cycle(3) => adj[u] & adj[v] == 0,
        TargetPattern::Cycle(4) => {
            let left = adj[u] & !(1 << v);
            let right = adj[v] & !(1 << u);
            !bits(left).any(|a| adj[a] & right & !(1 << a) != 0)
        }
        TargetPattern::Cycle(k) => !path_between(adj, u, v, 1 << u, k - 1, u64::MAX),
    }
}

/// Whether `adj + uv` has a path on `m` vertices through `uv`.
fn path_through(adj: &[u64], u: usize, v: usize, m: usize) -> bool {
    // grow the u-side one vertex at a time, then ask how far the v-side reaches
    fn go(adj: &[u64], end: usize, v: usize, used: u64, have: usize, m: usize) -> bool {
        if have >= m {
            return true;
        }
        if have + longest_extension(adj, v, used, m - have) >= m {
            return true;
        }
        bits(adj[end] & !used).any(|w| go(adj, w, v, used | 1 << w, have + 1, m))
    }
    go(adj, u, v, 1 << u | 1 << v, 2, m)
}

/// Adjacency rows of the spanning subgraph of `g` on the edges in `mask`.
#[inline]
pub(crate) fn masked_adjacency(g: &Graph, mask: u64) -> [u64; 64] {
    let mut adj = [0u64; 64];
    for e in bits(mask) {
        let (u, v) = g.edge(e);
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

/// For a blue set that is `h`-free in `g`, whether `blue ∪ {e}` stays `h`-free.
pub fn blue_extension_ok(g: &Graph, blue: &EdgeSubset, e: usize, h: TargetPattern) -> bool {
    let n = g.vertex_count();
    let mut adj = alloc::vec![0u64; n];
    for i in blue.iter() {
        let (a, b) = g.edge(i);
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    debug_assert!(!blue.contains(e), "edge already blue");
    debug_assert!(
        !contains_in(&adj, h),
        "blue set already contains the target"
    );
    let (u, v) = g.edge(e);
    extension_ok(&adj, u, v, h)
}

/// Iterator over the inclusion-maximal `h`-free edge subsets of a graph,
/// produced by include-first binary branching over edge indices. Each leaf of
/// the branching is a distinct subset, so every maximal set appears once.
pub struct MaximalFreeSets<'g> {
    g: &'g Graph,
    h: TargetPattern,
    stack: Vec<(usize, u64)>,
}

/// All inclusion-maximal `h`-free edge subsets of `g`.
pub fn maximal_target_free_sets(g: &Graph, h: TargetPattern) -> Result<MaximalFreeSets<'_>> {
    if g.edge_count() > EDGE_SEARCH_LIMIT {
        return Err(Error::InstanceTooLarge {
            what: "edge count",
            size: g.edge_count(),
            limit: EDGE_SEARCH_LIMIT,
        });
    }
    Ok(MaximalFreeSets {
        g,
        h,
        stack: alloc::vec![(0, 0)],
    })
}

impl Iterator for MaximalFreeSets<'_> {
    type Item = EdgeSubset;

    fn next(&mut self) -> Option<EdgeSubset> {
        let m = self.g.edge_count();
        while let Some((i, mask)) = self.stack.pop() {
            let adj = masked_adjacency(self.g, mask);
            if i == m {
                let maximal = (0..m).filter(|&e| mask >> e & 1 == 0).all(|e| {
                    let (u, v) = self.g.edge(e);
                    !extension_ok(&adj, u, v, self.h)
                });
                if maximal {
                    return Some(EdgeSubset::from_mask(mask, m).expect("mask within host"));
                }
                continue;
            }
            self.stack.push((i + 1, mask));
            let (u, v) = self.g.edge(i);
            if extension_ok(&adj, u, v, self.h) {
                self.stack.push((i + 1, mask | 1 << i));
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::*;
    use alloc::string::ToString;
    use alloc::vec::Vec;
    use rand::Rng;

    /// Naive containment: try every injective map of the pattern's vertices.
    fn naive_contains(g: &Graph, h: TargetPattern) -> bool {
        let k = h.order();
        let n = g.vertex_count();
        if k > n {
            return false;
        }
        let hg = h.to_graph();
        let mut img = Vec::new();
        fn rec(g: &Graph, hg: &Graph, img: &mut Vec<usize>, n: usize) -> bool {
            let i = img.len();
            if i == hg.vertex_count() {
                return hg.edges().all(|(a, b)| g.has_edge(img[a], img[b]));
            }
            for x in 0..n {
                if img.contains(&x) {
                    continue;
                }
                // prune: edges back into the placed prefix must exist
                if (0..i).any(|j| hg.has_edge(j, i) && !g.has_edge(img[j], x)) {
                    continue;
                }
                img.push(x);
                if rec(g, hg, img, n) {
                    return true;
                }
                img.pop();
            }
            false
        }
        rec(g, &hg, &mut img, n)
    }

    const TARGETS: [TargetPattern; 7] = [
        TargetPattern::Path(2),
        TargetPattern::Path(3),
        TargetPattern::Path(4),
        TargetPattern::Path(5),
        TargetPattern::Cycle(3),
        TargetPattern::Cycle(4),
        TargetPattern::Cycle(5),
    ];

    #[test]
    fn parse_and_display() {
        assert_eq!(
            "P3".parse::<TargetPattern>().unwrap(),
            TargetPattern::Path(3)
        );
        assert_eq!(
            "c4".parse::<TargetPattern>().unwrap(),
            TargetPattern::Cycle(4)
        );
        assert!("C2".parse::<TargetPattern>().is_err());
        assert!("X3".parse::<TargetPattern>().is_err());
        assert_eq!(TargetPattern::Cycle(5).to_string(), "C5");
    }

    #[test]
    fn containment_examples() {
        assert!(contains_target(&k33_minus_e(), TargetPattern::Cycle(4)));
        let matching = Graph::new(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert!(!contains_target(&matching, TargetPattern::Path(3)));
        assert!(!contains_target(
            &Graph::cycle(4).unwrap(),
            TargetPattern::Cycle(3)
        ));
        let paw = Graph::new(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert!(contains_target(&paw, TargetPattern::Cycle(3)));
        // subgraph, not induced: K4 contains C4
        assert!(contains_target(
            &Graph::complete(4).unwrap(),
            TargetPattern::Cycle(4)
        ));
    }

    #[test]
    fn k33_minus_e_c4_by_four_vertex_scan() {
        // brute force over 4-subsets and their three cyclic orders
        let g = k33_minus_e();
        let mut found = false;
        for s in 0u64..64 {
            if s.count_ones() != 4 {
                continue;
            }
            let v: Vec<usize> = bits(s).collect();
            for [a, b, c, d] in [
                [v[0], v[1], v[2], v[3]],
                [v[0], v[1], v[3], v[2]],
                [v[0], v[2], v[1], v[3]],
            ] {
                found |=
                    g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) && g.has_edge(d, a);
            }
        }
        assert!(found);
    }

    #[test]
    fn containment_agrees_with_naive_embedding() {
        let mut rng = rng(21);
        for _ in 0..1500 {
            let n = rng.gen_range(2..=9);
            let max = n * (n - 1) / 2;
            let g = {
                let a0 = n;
                let a1 = rng.gen_range(0..=max.min(12));
                random_graph_m(&mut rng, a0, a1)
            };
            for h in TARGETS {
                assert_eq!(contains_target(&g, h), naive_contains(&g, h), "{g:?} {h}");
            }
        }
    }

    #[test]
    fn extension_examples() {
        let c4 = Graph::cycle(4).unwrap(); // edges 01 03 12 23
        let blue = EdgeSubset::from_indices([0], 4).unwrap();
        let p3 = TargetPattern::Path(3);
        assert!(blue_extension_ok(&c4, &blue, 3, p3));
        assert!(!blue_extension_ok(&c4, &blue, 1, p3));
        let c3 = Graph::cycle(3).unwrap();
        let blue = EdgeSubset::from_indices([0, 1], 3).unwrap();
        assert!(!blue_extension_ok(&c3, &blue, 2, TargetPattern::Cycle(3)));
    }

    #[test]
    fn extension_agrees_with_containment() {
        let mut rng = rng(22);
        for _ in 0..400 {
            let n = rng.gen_range(3..=9);
            let g = random_graph(&mut rng, n, 0.45);
            let m = g.edge_count();
            if m == 0 || m > 20 {
                continue;
            }
            for h in TARGETS {
                // grow a random h-free blue set, checking every attempted extension
                let mut blue = EdgeSubset::empty(m);
                let mut order: Vec<usize> = (0..m).collect();
                for i in (1..m).rev() {
                    order.swap(i, rng.gen_range(0..=i));
                }
                for e in order {
                    let mut bigger = blue.clone();
                    bigger.insert(e);
                    let expect = !contains_target(&g.edge_subgraph(&bigger), h);
                    assert_eq!(
                        blue_extension_ok(&g, &blue, e, h),
                        expect,
                        "{g:?} {h} {blue:?} +{e}"
                    );
                    if expect {
                        blue = bigger;
                    }
                }
            }
        }
    }

    fn brute_force_maximal(g: &Graph, h: TargetPattern) -> Vec<u64> {
        let m = g.edge_count();
        let free: Vec<u64> = (0u64..1 << m)
            .filter(|&s| {
                !contains_target(&g.edge_subgraph(&EdgeSubset::from_mask(s, m).unwrap()), h)
            })
            .collect();
        let mut out: Vec<u64> = free
            .iter()
            .copied()
            .filter(|&s| !free.iter().any(|&t| t != s && t & s == s))
            .collect();
        out.sort_unstable();
        out
    }

    #[test]
    fn maximal_sets_examples() {
        let c3 = Graph::cycle(3).unwrap();
        let sets: Vec<_> = maximal_target_free_sets(&c3, TargetPattern::Path(3))
            .unwrap()
            .collect();
        assert_eq!(sets.len(), 3);
        assert!(sets.iter().all(|s| s.len() == 1));

        let c4 = Graph::cycle(4).unwrap();
        let sets: Vec<_> = maximal_target_free_sets(&c4, TargetPattern::Cycle(3))
            .unwrap()
            .collect();
        assert_eq!(sets, [EdgeSubset::full(4)]);

        // K4 versus C3: the brute-force oracle gives 7 maximal sets, the three
        // 4-cycles and the four spanning stars
        let k4 = Graph::complete(4).unwrap();
        let oracle = brute_force_maximal(&k4, TargetPattern::Cycle(3));
        assert_eq!(oracle.len(), 7);
        let mut got: Vec<u64> = maximal_target_free_sets(&k4, TargetPattern::Cycle(3))
            .unwrap()
            .map(|s| s.mask().unwrap())
            .collect();
        got.sort_unstable();
        assert_eq!(got, oracle);
        assert_eq!(got.iter().filter(|s| s.count_ones() == 4).count(), 3);
        assert_eq!(got.iter().filter(|s| s.count_ones() == 3).count(), 4);
    }

    #[test]
    fn maximal_sets_agree_with_brute_force() {
        let mut rng = rng(23);
        for _ in 0..120 {
            let n = rng.gen_range(3..=7);
            let g = random_graph(&mut rng, n, 0.5);
            if g.edge_count() > 11 {
                continue;
            }
            for h in [
                TargetPattern::Path(3),
                TargetPattern::Cycle(3),
                TargetPattern::Cycle(4),
                TargetPattern::Path(4),
            ] {
                let mut got: Vec<u64> = maximal_target_free_sets(&g, h)
                    .unwrap()
                    .map(|s| s.mask().unwrap())
                    .collect();
                let len = got.len();
                got.sort_unstable();
                got.dedup();
                assert_eq!(got.len(), len, "duplicate maximal set");
                assert_eq!(got, brute_force_maximal(&g, h));
            }
        }
    }

    #[test]
    fn maximal_sets_guard() {
        let big = Graph::complete(9).unwrap();
        assert!(matches!(
            maximal_target_free_sets(&big, TargetPattern::Path(3)),
            Err(Error::InstanceTooLarge { .. })
        ));
    }
}
