//! Chained upper-bound constructions and the closed-form bounds.
//!
//! Each family is a disjoint union of small arrowing gadgets joined into a
//! path of components by bridges; a bridge joins the first vertex of one
//! component to the first vertex of the next.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::target::TargetPattern;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Copies of `C4` (plus a `P3` when `n` is odd); upper bound for `(nK2, P3)`.
    P3Chain,
    /// Copies of `K3,3 - e` (plus a `C4` when `n` is odd); upper bound for `(nK2, C4)`.
    C4Chain,
    /// `n` triangles; upper bound for `(nK2, C3)`.
    C3Chain,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::P3Chain, Family::C4Chain, Family::C3Chain];

    /// The blue target this family is built against.
    pub fn target(self) -> TargetPattern {
        match self {
            Family::P3Chain => TargetPattern::Path(3),
            Family::C4Chain => TargetPattern::Cycle(4),
            Family::C3Chain => TargetPattern::Cycle(3),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::P3Chain => "p3-chain",
            Family::C4Chain => "c4-chain",
            Family::C3Chain => "c3-chain",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "p3-chain" => Ok(Family::P3Chain),
            "c4-chain" => Ok(Family::C4Chain),
            "c3-chain" => Ok(Family::C3Chain),
            _ => Err(Error::Domain(
                "unknown family; expected p3-chain, c4-chain or c3-chain",
            )),
        }
    }
}

/// `K3,3` on sides `{0,1,2}`, `{3,4,5}` without the edge `0-3`.
pub fn k33_minus_e() -> Graph {
    let edges: Vec<_> = (0..3)
        .flat_map(|u| (3..6).map(move |v| (u, v)))
        .filter(|&e| e != (0, 3))
        .collect();
    Graph::new(6, &edges).expect("valid gadget")
}

/// Joins the components into a chain, bridging first vertices of consecutive parts.
fn chain(parts: &[Graph]) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut offset = 0;
    let mut firsts = Vec::with_capacity(parts.len());
    for p in parts {
        firsts.push(offset);
        edges.extend(p.edges().map(|(u, v)| (u + offset, v + offset)));
        offset += p.vertex_count();
    }
    for w in firsts.windows(2) {
        edges.push((w[0], w[1]));
    }
    Graph::new(offset, &edges)
}

/// Builds the family's graph for `n`; fails past 64 vertices or for `n = 0`.
pub fn build(family: Family, n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1"));
    }
    let mut parts = Vec::new();
    match family {
        Family::P3Chain => {
            parts.extend((0..n / 2).map(|_| Graph::cycle(4).expect("C4")));
            if n % 2 == 1 {
                parts.push(Graph::path(3)?);
            }
        }
        Family::C4Chain => {
            parts.extend((0..n / 2).map(|_| k33_minus_e()));
            if n % 2 == 1 {
                parts.push(Graph::cycle(4)?);
            }
        }
        Family::C3Chain => parts.extend((0..n).map(|_| Graph::cycle(3).expect("C3"))),
    }
    let total: usize = parts.iter().map(Graph::vertex_count).sum();
    if total > crate::graph::MAX_VERTICES {
        return Err(Error::TooManyVertices(total));
    }
    chain(&parts)
}

/// Bound targets with a closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundTarget {
    /// `P_m`, `m >= 3`: the general path bound.
    Path(usize),
    C3,
    C4,
}

/// General upper bound for `(nK2, P_m)`: `n(m+2)/2 - 1` for even `n`,
/// `(n+1)(m+2)/2 - 3` for odd `n`.
pub fn path_upper_bound(n: usize, m: usize) -> Result<usize> {
    if n == 0 || m < 3 {
        return Err(Error::Domain("path bound needs n >= 1 and m >= 3"));
    }
    Ok(if n.is_multiple_of(2) {
        n * (m + 2) / 2 - 1
    } else {
        (n + 1) * (m + 2) / 2 - 3
    })
}

/// Exact value for `(nK2, P3)`: `floor((5n - 1) / 2)`.
pub fn p3_exact(n: usize) -> usize {
    (5 * n - 1) / 2
}

/// Upper bound for `(nK2, C4)`: `floor((9n - 1) / 2)`.
pub fn c4_upper_bound(n: usize) -> usize {
    (9 * n - 1) / 2
}

/// Exact value for `(nK2, C3)`: `4n - 1`.
pub fn c3_exact(n: usize) -> usize {
    4 * n - 1
}

/// The closed-form bound for `target`; for `P_m` this is the general path bound.
pub fn upper_bound_formula(target: BoundTarget, n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1"));
    }
    match target {
        BoundTarget::Path(m) => path_upper_bound(n, m),
        BoundTarget::C3 => Ok(c3_exact(n)),
        BoundTarget::C4 => Ok(c4_upper_bound(n)),
    }
}

/// The formula value associated with a target pattern, where one exists.
pub fn formula_for(target: TargetPattern, n: usize) -> Option<usize> {
    match target {
        TargetPattern::Path(3) => Some(p3_exact(n)),
        TargetPattern::Path(m) if m > 3 => path_upper_bound(n, m).ok(),
        TargetPattern::Cycle(3) => Some(c3_exact(n)),
        TargetPattern::Cycle(4) => Some(c4_upper_bound(n)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrowing::has_good_colouring;
    use crate::blocks::block_decompose;

    #[test]
    fn examples() {
        let g = build(Family::C3Chain, 2).unwrap();
        assert_eq!(g.edge_count(), 7);
        assert!(g.is_connected());
        assert_eq!(build(Family::P3Chain, 1).unwrap(), Graph::path(3).unwrap());
        assert_eq!(build(Family::C4Chain, 2).unwrap(), k33_minus_e());
        let g = build(Family::P3Chain, 4).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (8, 9));
        assert!(g.has_edge(0, 4));
    }

    #[test]
    fn formula_examples() {
        assert_eq!(upper_bound_formula(BoundTarget::Path(3), 3).unwrap(), 7);
        assert_eq!(p3_exact(3), 7);
        assert_eq!(upper_bound_formula(BoundTarget::C3, 1).unwrap(), 3);
        assert_eq!(upper_bound_formula(BoundTarget::C4, 3).unwrap(), 13);
        assert!(upper_bound_formula(BoundTarget::Path(2), 3).is_err());
        assert!(upper_bound_formula(BoundTarget::C3, 0).is_err());
    }

    #[test]
    fn path_bound_at_m3_equals_p3_value() {
        for n in 1..=100 {
            assert_eq!(path_upper_bound(n, 3).unwrap(), p3_exact(n), "n={n}");
        }
    }

    /// (cycles, K2 blocks, K3,3-e blocks, other) block-shape counts.
    fn block_shape(g: &Graph) -> (usize, usize, usize, usize) {
        let d = block_decompose(g).unwrap();
        let mut shape = (0, 0, 0, 0);
        for b in d.blocks() {
            let sub = b.subgraph(g);
            if b.edges().len() == 1 {
                shape.1 += 1;
            } else if sub.is_cycle() {
                shape.0 += 1;
            } else if sub.edge_count() == 8 && sub.vertex_count() == 6 && sub.max_degree() == 3 {
                shape.2 += 1;
            } else {
                shape.3 += 1;
            }
        }
        shape
    }

    #[test]
    fn edge_counts_connectivity_and_blocks_up_to_20() {
        for n in 1..=20 {
            for fam in Family::ALL {
                let g = build(fam, n).unwrap();
                assert!(g.is_connected());
                assert_eq!(
                    g.edge_count(),
                    formula_for(fam.target(), n).unwrap(),
                    "{fam} n={n}"
                );
                let bridges = n.div_ceil(2) - 1;
                let expected = match fam {
                    Family::P3Chain => (n / 2, bridges + 2 * (n % 2), 0, 0),
                    Family::C4Chain => (n % 2, bridges, n / 2, 0),
                    Family::C3Chain => (n, n - 1, 0, 0),
                };
                assert_eq!(block_shape(&g), expected, "{fam} n={n}");
            }
        }
    }

    #[test]
    fn small_constructions_arrow() {
        for fam in Family::ALL {
            for n in 1.. {
                let g = build(fam, n).unwrap();
                if g.edge_count() > 18 {
                    break;
                }
                assert!(
                    has_good_colouring(&g, n, fam.target()).unwrap().arrows,
                    "{fam} n={n}"
                );
            }
        }
    }
}
