use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use ramsey_core::{has_good_colouring, naive_arrowing_oracle, Graph, TargetPattern};

const TARGETS: [TargetPattern; 5] = [
    TargetPattern::Path(3),
    TargetPattern::Cycle(3),
    TargetPattern::Cycle(4),
    TargetPattern::Path(4),
    TargetPattern::Cycle(5),
];

#[test]
fn engine_matches_oracle_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let cases: Vec<(Graph, usize)> = (0..10_000)
        .map(|_| {
            let n = rng.gen_range(2..=9);
            let mut pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            pairs.shuffle(&mut rng);
            pairs.truncate(rng.gen_range(0..=14));
            (Graph::new(n, &pairs).unwrap(), rng.gen_range(1..=3))
        })
        .collect();
    let mismatches: Vec<String> = cases
        .par_iter()
        .flat_map_iter(|(g, n)| TARGETS.iter().map(move |&h| (g, *n, h)))
        .filter(|&(g, n, h)| {
            has_good_colouring(g, n, h).unwrap().arrows
                != naive_arrowing_oracle(g, n, h).unwrap().arrows
        })
        .map(|(g, n, h)| format!("{g:?} n={n} {h}"))
        .collect();
    assert!(
        mismatches.is_empty(),
        "{} mismatches: {:?}",
        mismatches.len(),
        &mismatches[..mismatches.len().min(5)]
    );
}
