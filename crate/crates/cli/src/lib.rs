//! Standard-library side of the arrowing engine: graph6 interop, the results
//! cache, the parallel search driver, report rendering and the `ramsey`
//! command-line tool built on them.

pub mod cache;
pub mod commands;
pub mod graph6;
pub mod parallel;
pub mod report;

pub use commands::{run, RunContext};
