//! Canonical labelling by equitable partition refinement, individualization
//! and backtracking, with pruning by automorphisms discovered at the leaves.
//!
//! The canonical form is the lexicographically smallest packed upper-triangle
//! adjacency encoding among the labellings reached by the search tree. The
//! tree is built only from isomorphism-invariant choices, so isomorphic
//! graphs produce identical encodings.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{bits, Graph};

type Cells = Vec<Vec<usize>>;

/// Canonical byte string of `g`: the vertex count followed by the packed
/// upper triangle of the minimal adjacency matrix (column-major, MSB first).
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    Canonizer::new(g.adjacency()).run().0
}

/// `perm[v]` is the canonical label of vertex `v`.
pub fn canonical_labelling(g: &Graph) -> Vec<usize> {
    let order = Canonizer::new(g.adjacency()).run().1;
    let mut perm = vec![0; order.len()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    perm
}

/// `g` relabelled canonically, together with its canonical form.
pub fn canonical_graph(g: &Graph) -> (Vec<u8>, Graph) {
    let (code, order) = Canonizer::new(g.adjacency()).run();
    let mut perm = vec![0; order.len()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    (code, g.relabel(&perm).expect("permutation of own vertices"))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && canonical_form(a) == canonical_form(b)
}

fn encode(adj: &[u64], order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(8));
    out.push(n as u8);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        let row = adj[order[j]];
        for &vi in &order[..j] {
            acc = acc << 1 | (row >> vi & 1) as u8;
            k += 1;
            if k == 8 {
                out.push(acc);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push(acc << (8 - k));
    }
    out
}

struct Leaf {
    code: Vec<u8>,
    order: Vec<usize>,
}

struct Canonizer<'a> {
    adj: &'a [u64],
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl<'a> Canonizer<'a> {
    fn new(adj: &'a [u64]) -> Self {
        Canonizer {
            adj,
            first: None,
            best: None,
            generators: Vec::new(),
        }
    }

    fn run(mut self) -> (Vec<u8>, Vec<usize>) {
        let n = self.adj.len();
        if n == 0 {
            return (vec![0], Vec::new());
        }
        let mut cells: Cells = vec![(0..n).collect()];
        self.refine(&mut cells);
        let mut prefix = Vec::new();
        self.search(cells, &mut prefix);
        let best = self.best.expect("search visits at least one leaf");
        (best.code, best.order)
    }

    /// Splits cells by neighbour counts into each cell until the ordered
    /// partition is equitable.
    fn refine(&self, cells: &mut Cells) {
        'outer: loop {
            for s in 0..cells.len() {
                let splitter = cells[s].iter().fold(0u64, |m, &v| m | 1 << v);
                let mut next: Cells = Vec::with_capacity(cells.len() + 1);
                for cell in cells.iter() {
                    if cell.len() == 1 {
                        next.push(cell.clone());
                        continue;
                    }
                    let mut keyed: Vec<(u32, usize)> = cell
                        .iter()
                        .map(|&v| ((self.adj[v] & splitter).count_ones(), v))
                        .collect();
                    keyed.sort_unstable();
                    let mut start = 0;
                    for i in 1..=keyed.len() {
                        if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                            next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                            start = i;
                        }
                    }
                }
                if next.len() != cells.len() {
                    *cells = next;
                    continue 'outer;
                }
            }
            return;
        }
    }

    fn search(&mut self, cells: Cells, prefix: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            self.leaf(order);
            return;
        };
        let candidates = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &candidates {
            if !explored.is_empty() && self.same_orbit_as_any(prefix, v, &explored) {
                continue;
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            self.refine(&mut child);
            prefix.push(v);
            self.search(child, prefix);
            prefix.pop();
        }
    }

    /// Orbit test under the group generated by the known automorphisms that
    /// fix `prefix` pointwise.
    fn same_orbit_as_any(&self, prefix: &[usize], v: usize, explored: &[usize]) -> bool {
        let n = self.adj.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gen in &self.generators {
            if prefix.iter().all(|&p| gen[p] == p) {
                any = true;
                for (x, &y) in gen.iter().enumerate() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == rv)
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let code = encode(self.adj, &order);
        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                code: code.clone(),
                order: order.clone(),
            });
            self.first = Some(Leaf { code, order });
            return;
        };
        if code == first.code {
            let gen = automorphism(&first.order, &order);
            self.generators.push(gen);
            return;
        }
        let best = self.best.as_ref().expect("set with first");
        match code.cmp(&best.code) {
            core::cmp::Ordering::Less => self.best = Some(Leaf { code, order }),
            core::cmp::Ordering::Equal => {
                let gen = automorphism(&best.order, &order);
                self.generators.push(gen);
            }
            core::cmp::Ordering::Greater => {}
        }
    }
}

/// The permutation sending `from[i]` to `to[i]`.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut g = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        g[a] = b;
    }
    g
}

/// Degree sequence and triangle counts; a cheap isomorphism invariant used
/// by tests and enumeration sanity checks.
pub fn cheap_invariant(g: &Graph) -> Vec<u32> {
    let mut v: Vec<u32> = (0..g.vertex_count())
        .map(|x| {
            let tri: u32 = bits(g.neighbours(x))
                .map(|y| (g.neighbours(x) & g.neighbours(y)).count_ones())
                .sum();
            (g.degree(x) as u32) << 16 | tri
        })
        .collect();
    v.sort_unstable();
    v
}
