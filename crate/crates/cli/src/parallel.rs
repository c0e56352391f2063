//! Worker-pool version of the ascending search. Each level is scanned in
//! parallel, and the reported graph is the first arrowing one in canonical
//! order, so results do not depend on the number of workers.

use std::time::Instant;

use ramsey_core::refuter::heuristic_refuter;
use ramsey_core::search::{minimum_arrowing_size_with, SearchOptions, SearchRecord};
use ramsey_core::{has_good_colouring, Graph, Result, TargetPattern};
use rayon::prelude::*;

/// Runs the search on a pool of `jobs` threads (`0` picks the rayon default)
/// and stamps the record with its wall time.
pub fn search(
    target: TargetPattern,
    n: usize,
    opts: &SearchOptions,
    jobs: usize,
) -> Result<SearchRecord> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool starts");
    let start = Instant::now();
    let mut record = pool.install(|| {
        minimum_arrowing_size_with(target, n, opts, |level| first_arrowing(level, n, target))
    })?;
    record.wall_time = start.elapsed();
    Ok(record)
}

/// Index of the first graph in `level` that arrows `(nK2, target)`.
pub fn first_arrowing(level: &[Graph], n: usize, target: TargetPattern) -> Result<Option<usize>> {
    // errors count as hits so the scan stops there and the error is surfaced below
    let hit = level
        .par_iter()
        .position_first(|g| !has_cheap_or_exact_good_colouring(g, n, target));
    match hit {
        Some(i) => has_good_colouring(&level[i], n, target).map(|_| Some(i)),
        None => Ok(None),
    }
}

/// The heuristic refuter settles most non-arrowing graphs quickly; the
/// exhaustive search handles the rest.
fn has_cheap_or_exact_good_colouring(g: &Graph, n: usize, target: TargetPattern) -> bool {
    matches!(heuristic_refuter(g, n, target), Ok(Some(_)))
        || matches!(has_good_colouring(g, n, target), Ok(v) if !v.arrows)
}
