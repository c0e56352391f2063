//! A sound but incomplete search for good colourings, built from the
//! constructive colouring steps of the lower-bound arguments:
//!
//! * colour a whole target-free part blue;
//! * split into components (or, for cycle targets, into blocks) and colour
//!   each part independently;
//! * colour edges that lie on no triangle blue (triangle target);
//! * colour a cycle red, red, blue around (`P3` target);
//! * peel a star red and recurse on the rest. With `P3` as target the rest's
//!   isolated edges then go blue, which is exactly the star-plus-matching
//!   extension step for deletable edge sets.
//!
//! Every candidate is a colouring whose blue part is target-free; the best
//! one is returned only if its red matching number is below `n` and it passes
//! [`verify_colouring`]. The refuter never claims arrowing.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::arrowing::{verify_colouring, ColouringCheck, EdgeColouring};
use crate::blocks::block_decompose;
use crate::decompose::{cycle_colouring, is_deletable_edge_set};
use crate::error::{Error, Result};
use crate::graph::{bits, low_bits, EdgeSubset, Graph};
use crate::matching::matching_number_masked;
use crate::target::{contains_in, masked_adjacency, TargetPattern};

/// Recursive calls allowed per query before falling back to cheap candidates.
const CALL_BUDGET: u32 = 20_000;
/// Star centres tried per subproblem.
const STAR_BRANCHING: usize = 4;

/// Tries to find a colouring of `g` with no red `nK2` and no blue `h`.
pub fn heuristic_refuter(
    g: &Graph,
    n: usize,
    h: TargetPattern,
) -> Result<Option<EdgeColouring<'_>>> {
    if n == 0 {
        return Err(Error::Domain("matching size n must be at least 1"));
    }
    if g.edge_count() > 64 {
        return Err(Error::InstanceTooLarge {
            what: "edge count",
            size: g.edge_count(),
            limit: 64,
        });
    }
    let mut r = Refuter {
        g,
        h,
        budget: CALL_BUDGET,
        memo: BTreeMap::new(),
    };
    let (blue, red_nu) = r.best(low_bits(g.edge_count()));
    if red_nu >= n {
        return Ok(None);
    }
    let c = EdgeColouring::new(g, EdgeSubset::from_mask(blue, g.edge_count())?)?;
    Ok((verify_colouring(&c, n, h) == ColouringCheck::Good).then_some(c))
}

/// Smallest red matching number the refuter reaches with an `h`-free blue set.
pub fn best_red_matching(g: &Graph, h: TargetPattern) -> Result<(EdgeSubset, usize)> {
    if g.edge_count() > 64 {
        return Err(Error::InstanceTooLarge {
            what: "edge count",
            size: g.edge_count(),
            limit: 64,
        });
    }
    let mut r = Refuter {
        g,
        h,
        budget: CALL_BUDGET,
        memo: BTreeMap::new(),
    };
    let (blue, nu) = r.best(low_bits(g.edge_count()));
    Ok((EdgeSubset::from_mask(blue, g.edge_count())?, nu))
}

struct Refuter<'g> {
    g: &'g Graph,
    h: TargetPattern,
    budget: u32,
    memo: BTreeMap<u64, (u64, usize)>,
}

impl Refuter<'_> {
    fn adjacency(&self, active: u64) -> [u64; 64] {
        masked_adjacency(self.g, active)
    }

    fn is_free(&self, mask: u64) -> bool {
        !contains_in(&self.adjacency(mask)[..self.g.vertex_count()], self.h)
    }

    /// Edge masks of the connected pieces of the active edges.
    fn components(&self, active: u64) -> Vec<u64> {
        let adj = self.adjacency(active);
        let mut out = Vec::new();
        let mut left = active;
        while left != 0 {
            let (s, _) = self.g.edge(left.trailing_zeros() as usize);
            let verts = crate::graph::reach(&adj, s, u64::MAX);
            let piece = bits(left)
                .filter(|&e| verts >> self.g.edge(e).0 & 1 == 1)
                .fold(0u64, |m, e| m | 1 << e);
            out.push(piece);
            left &= !piece;
        }
        out
    }

    /// The active edges as a standalone graph on the vertices they touch,
    /// with the host index of each of its edges.
    fn standalone(&self, active: u64) -> (Graph, Vec<usize>) {
        let touched = bits(active).fold(0u64, |m, e| {
            let (u, v) = self.g.edge(e);
            m | 1 << u | 1 << v
        });
        let sub = self
            .g
            .edge_subgraph(&EdgeSubset::from_mask(active, self.g.edge_count()).expect("host mask"));
        let sub = sub.induced(touched);
        let verts: Vec<usize> = bits(touched).collect();
        let host = sub
            .edges()
            .map(|(a, b)| self.g.edge_index(verts[a], verts[b]).expect("host edge"))
            .collect();
        (sub, host)
    }

    fn red_nu(&self, active: u64, blue: u64) -> usize {
        matching_number_masked(self.g, active & !blue)
    }

    fn best(&mut self, active: u64) -> (u64, usize) {
        if active == 0 {
            return (0, 0);
        }
        if self.is_free(active) {
            return (active, 0);
        }
        if let Some(&hit) = self.memo.get(&active) {
            return hit;
        }
        let result = self.search(active);
        self.memo.insert(active, result);
        result
    }

    fn search(&mut self, active: u64) -> (u64, usize) {
        let mut best = (0u64, self.red_nu(active, 0));
        let consider = |best: &mut (u64, usize), cand: (u64, usize)| {
            if cand.1 < best.1 {
                *best = cand;
            }
        };

        let parts = self.components(active);
        if parts.len() > 1 {
            let mut blue = 0;
            for p in parts {
                blue |= self.best(p).0;
            }
            consider(&mut best, (blue, self.red_nu(active, blue)));
            return best;
        }
        if self.budget == 0 {
            return best;
        }
        self.budget -= 1;

        if self.h == TargetPattern::Cycle(3) {
            let adj = self.adjacency(active);
            let loose = bits(active)
                .filter(|&e| {
                    let (u, v) = self.g.edge(e);
                    adj[u] & adj[v] == 0
                })
                .fold(0u64, |m, e| m | 1 << e);
            if loose != 0 {
                let (blue, _) = self.best(active & !loose);
                let blue = blue | loose;
                consider(&mut best, (blue, self.red_nu(active, blue)));
                return best;
            }
        }

        let (sub, host) = self.standalone(active);
        if let TargetPattern::Cycle(_) = self.h {
            // every cycle lies inside one block
            if let Ok(d) = block_decompose(&sub) {
                if d.blocks().len() > 1 {
                    let mut blue = 0;
                    for b in d.blocks() {
                        let mask = b.edges().iter().fold(0u64, |m, &e| m | 1 << host[e]);
                        blue |= self.best(mask).0;
                    }
                    consider(&mut best, (blue, self.red_nu(active, blue)));
                }
            }
        }
        if self.h == TargetPattern::Path(3) && sub.is_cycle() {
            let c = cycle_colouring(&sub).expect("checked cycle");
            let blue = c.blue().iter().fold(0u64, |m, e| m | 1 << host[e]);
            consider(&mut best, (blue, self.red_nu(active, blue)));
        }

        // star peeling, centres with a deletable star-plus-matching first, then by degree
        let mut centres: Vec<(bool, usize, usize)> = (0..sub.vertex_count())
            .filter(|&v| sub.degree(v) >= 2)
            .map(|v| {
                let star = sub.incident_edges(v);
                let rest = sub.delete_edges(&star);
                let mut e1 = star.clone();
                for (i, (a, b)) in rest.edges().enumerate() {
                    if rest.degree(a) == 1 && rest.degree(b) == 1 {
                        e1.insert(
                            sub.edge_index(rest.edge(i).0, rest.edge(i).1)
                                .expect("sub edge"),
                        );
                    }
                }
                let deletable =
                    self.h == TargetPattern::Path(3) && is_deletable_edge_set(&sub, &e1).is_some();
                (!deletable, usize::MAX - sub.degree(v), v)
            })
            .collect();
        centres.sort_unstable();
        for &(_, _, v) in centres.iter().take(STAR_BRANCHING) {
            if best.1 <= 1 {
                break;
            }
            let star = bits(sub.neighbours(v))
                .map(|w| host[sub.edge_index(v, w).expect("sub edge")])
                .fold(0u64, |m, e| m | 1 << e);
            let (blue, _) = self.best(active & !star);
            consider(&mut best, (blue, self.red_nu(active, blue)));
        }
        debug_assert!(self.is_free(best.0));
        best
    }
}
