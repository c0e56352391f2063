//! Shared helpers and brute-force oracles for unit tests.

use alloc::vec::Vec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{bits, Graph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Random graph with exactly `m` edges on `n` vertices (`m <= n(n-1)/2`).
pub fn random_graph_m(rng: &mut impl Rng, n: usize, m: usize) -> Graph {
    let mut all = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            all.push((u, v));
        }
    }
    for i in 0..m {
        let j = rng.gen_range(i..all.len());
        all.swap(i, j);
    }
    Graph::new(n, &all[..m]).unwrap()
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}

pub fn k33_minus_e() -> Graph {
    let edges: Vec<_> = (0..3)
        .flat_map(|u| (3..6).map(move |v| (u, v)))
        .filter(|&e| e != (0, 3))
        .collect();
    Graph::new(6, &edges).unwrap()
}

/// Largest edge subset with pairwise disjoint edges, by exhaustion.
pub fn brute_force_matching_number(g: &Graph) -> usize {
    let m = g.edge_count();
    let mut best = 0;
    for s in 0u64..1 << m {
        let mut used = 0u64;
        let mut ok = true;
        for e in bits(s) {
            let (u, v) = g.edge(e);
            let b = 1 << u | 1 << v;
            if used & b != 0 {
                ok = false;
                break;
            }
            used |= b;
        }
        if ok {
            best = best.max(s.count_ones() as usize);
        }
    }
    best
}
