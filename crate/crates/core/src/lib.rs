//! Search engine for the Ramsey arrowing relation `G -> (nK2, H)` where the
//! blue target `H` is a path or a cycle, together with the machinery needed to
//! compute connected size Ramsey numbers of a matching versus `H` by exhaustive,
//! isomorphism-reduced enumeration of small graphs.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, caching, the
//! worker pool and the command-line tool live in the `ramsey-cli` crate.
//!
//! Module map:
//!
//! * [`graph`]: bitset graphs, edge subsets, connectivity and edge/vertex deletion.
//! * [`matching`]: maximum matching in general graphs (blossom contraction).
//! * [`canon`]: canonical labelling by partition refinement and backtracking.
//! * [`target`]: blue-target containment and maximal target-free edge sets.
//! * [`arrowing`]: the arrowing decision, its brute-force oracle and colouring checks.
//! * [`constructions`]: the chained upper-bound graphs and closed-form bounds.
//! * [`enumerate`] and [`search`]: graph enumeration up to isomorphism and the
//!   ascending minimum-size search.
//! * [`blocks`], [`decompose`] and [`refuter`]: block structure, deletable edge
//!   sets, end-cut colourings and a sound heuristic colouring finder.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arrowing;
pub mod blocks;
pub mod canon;
pub mod constructions;
pub mod decompose;
pub mod enumerate;
mod error;
pub mod graph;
pub mod matching;
pub mod refuter;
pub mod search;
pub mod target;

#[cfg(test)]
pub(crate) mod testutil;

pub use arrowing::{
    has_good_colouring, naive_arrowing_oracle, verify_colouring, ArrowingVerdict, ColouringCheck,
    EdgeColouring, SearchStats,
};
pub use error::{Error, Result};
pub use graph::{EdgeSubset, Graph, MAX_VERTICES};
pub use matching::{matching_number, maximum_matching, Matching};
pub use target::TargetPattern;

/// Version string recorded in persisted search results.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
