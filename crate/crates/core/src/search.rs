//! Ascending search for the least edge count of a (connected) graph that
//! arrows `(nK2, H)`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::time::Duration;

use crate::arrowing::has_good_colouring;
use crate::enumerate::{
    filter_level, EnumerationSpec, Enumerator, PruningProfile, ENUMERATION_EDGE_LIMIT,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::target::{TargetPattern, EDGE_SEARCH_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SearchStatus {
    Exact,
    LowerBoundOnly,
    UpperBoundOnly,
}

impl SearchStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchStatus::Exact => "exact",
            SearchStatus::LowerBoundOnly => "lower_bound_only",
            SearchStatus::UpperBoundOnly => "upper_bound_only",
        }
    }
}

/// Result of one `(target, n, connected_only)` query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchRecord {
    pub target: TargetPattern,
    pub n: usize,
    pub connected_only: bool,
    pub status: SearchStatus,
    /// Lower bound; equals the value when exact.
    pub lo: usize,
    /// Upper bound, if one is known; equals the value when exact.
    pub hi: Option<usize>,
    /// An arrowing graph with `hi` edges.
    pub witness: Option<Graph>,
    pub graphs_examined: u64,
    pub wall_time: Duration,
    pub engine_version: String,
}

impl SearchRecord {
    pub fn value(&self) -> Option<usize> {
        (self.status == SearchStatus::Exact).then_some(self.lo)
    }

    /// Checks the record's internal consistency and that its witness arrows.
    pub fn validate(&self) -> Result<()> {
        match self.status {
            SearchStatus::Exact => {
                if self.hi != Some(self.lo) {
                    return Err(Error::Stale("exact record with lo != hi"));
                }
            }
            SearchStatus::LowerBoundOnly => {
                if self.hi.is_some() || self.witness.is_some() {
                    return Err(Error::Stale("lower-bound record carries an upper bound"));
                }
                return Ok(());
            }
            SearchStatus::UpperBoundOnly => {
                if self.hi.is_none_or(|hi| hi < self.lo) {
                    return Err(Error::Stale(
                        "upper-bound record without a consistent upper bound",
                    ));
                }
            }
        }
        let hi = self.hi.expect("checked above");
        let w = self
            .witness
            .as_ref()
            .ok_or(Error::Stale("record lacks its witness"))?;
        if w.edge_count() != hi {
            return Err(Error::Stale(
                "witness edge count differs from the recorded value",
            ));
        }
        if self.connected_only && !w.is_connected() {
            return Err(Error::Stale("witness is not connected"));
        }
        if w.edge_count() <= EDGE_SEARCH_LIMIT
            && !has_good_colouring(w, self.n, self.target)?.arrows
        {
            return Err(Error::Stale("witness does not arrow"));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub connected_only: bool,
    pub max_edges: usize,
    /// Only allowed for the `C3` target on connected graphs; applied at edge
    /// counts up to `4n - 2`.
    pub pruning: PruningProfile,
    pub allow_large: bool,
}

impl SearchOptions {
    pub fn connected(max_edges: usize) -> Self {
        SearchOptions {
            connected_only: true,
            max_edges,
            pruning: PruningProfile::None,
            allow_large: false,
        }
    }
}

/// Sequential ascending search.
pub fn minimum_arrowing_size(
    target: TargetPattern,
    n: usize,
    opts: &SearchOptions,
) -> Result<SearchRecord> {
    minimum_arrowing_size_with(target, n, opts, |level| {
        for (i, g) in level.iter().enumerate() {
            if has_good_colouring(g, n, target)?.arrows {
                return Ok(Some(i));
            }
        }
        Ok(None)
    })
}

/// Ascending search with a caller-supplied level scan. `first_arrowing`
/// receives one level in canonical order and must return the index of the
/// first graph that arrows, so the result does not depend on how the scan is
/// scheduled.
pub fn minimum_arrowing_size_with<F>(
    target: TargetPattern,
    n: usize,
    opts: &SearchOptions,
    mut first_arrowing: F,
) -> Result<SearchRecord>
where
    F: FnMut(&[Graph]) -> Result<Option<usize>>,
{
    if n == 0 {
        return Err(Error::Domain("matching size n must be at least 1"));
    }
    if opts.max_edges > ENUMERATION_EDGE_LIMIT && !opts.allow_large {
        return Err(Error::InstanceTooLarge {
            what: "max edges",
            size: opts.max_edges,
            limit: ENUMERATION_EDGE_LIMIT,
        });
    }
    if opts.max_edges > EDGE_SEARCH_LIMIT {
        return Err(Error::InstanceTooLarge {
            what: "max edges",
            size: opts.max_edges,
            limit: EDGE_SEARCH_LIMIT,
        });
    }
    if opts.pruning != PruningProfile::None
        && (target != TargetPattern::Cycle(3) || !opts.connected_only)
    {
        return Err(Error::Domain(
            "pruning profiles apply only to the C3 target on connected graphs",
        ));
    }
    let pruned_up_to = if opts.pruning == PruningProfile::None {
        0
    } else {
        4 * n - 2
    };

    let mut examined = 0u64;
    let mut levels = Enumerator::new(opts.connected_only);
    for m in 1..=opts.max_edges {
        levels.advance();
        let spec = EnumerationSpec {
            edge_count: m,
            min_vertices: None,
            max_vertices: None,
            connected_only: opts.connected_only,
            pruning: if m <= pruned_up_to {
                opts.pruning
            } else {
                PruningProfile::None
            },
            allow_large: true,
        };
        let level: Vec<Graph> = filter_level(&spec, levels.graphs());
        let hit = first_arrowing(&level)?;
        examined += match hit {
            Some(i) => i as u64 + 1,
            None => level.len() as u64,
        };
        if let Some(i) = hit {
            // a hit inside the pruned range certifies an arrowing graph but not minimality
            let status = if m <= pruned_up_to {
                SearchStatus::UpperBoundOnly
            } else {
                SearchStatus::Exact
            };
            let lo = if status == SearchStatus::Exact { m } else { 1 };
            return Ok(SearchRecord {
                target,
                n,
                connected_only: opts.connected_only,
                status,
                lo,
                hi: Some(m),
                witness: Some(level[i].clone()),
                graphs_examined: examined,
                wall_time: Duration::ZERO,
                engine_version: crate::ENGINE_VERSION.to_string(),
            });
        }
    }
    Ok(SearchRecord {
        target,
        n,
        connected_only: opts.connected_only,
        status: SearchStatus::LowerBoundOnly,
        lo: opts.max_edges + 1,
        hi: None,
        witness: None,
        graphs_examined: examined,
        wall_time: Duration::ZERO,
        engine_version: crate::ENGINE_VERSION.to_string(),
    })
}
