//! The `ramsey` subcommands. Exit codes: 0 on success or when the graph
//! arrows, 1 when a good colouring exists or a check fails, 2 on errors.

use std::ffi::OsString;
use std::io::{self, BufRead, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ramsey_core::constructions::{build, formula_for, Family};
use ramsey_core::enumerate::{PruningProfile, ENUMERATION_EDGE_LIMIT};
use ramsey_core::search::{SearchOptions, SearchRecord, SearchStatus};
use ramsey_core::{
    has_good_colouring, naive_arrowing_oracle, verify_colouring, ColouringCheck, EdgeColouring,
    Graph, TargetPattern,
};
use thiserror::Error;

use crate::cache::{self, CacheError, CacheKey, CACHE_ENV};
use crate::graph6::{self, Graph6Error};
use crate::parallel;
use crate::report::{Format, Report, Row};

/// Largest edge count `construct --verify` checks for arrowing without `--allow-large`.
pub const VERIFY_EDGE_LIMIT: usize = 18;

/// Process-level settings that do not come from flags.
#[derive(Clone, Debug, Default)]
pub struct RunContext {
    /// Cache path taken from the environment; `--cache` wins over it.
    pub cache_env: Option<PathBuf>,
}

impl RunContext {
    pub fn from_env() -> Self {
        RunContext {
            cache_env: std::env::var_os(CACHE_ENV)
                .filter(|v| !v.is_empty())
                .map(PathBuf::from),
        }
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] ramsey_core::Error),
    #[error("{source}: {input:?}")]
    Graph6 { input: String, source: Graph6Error },
    #[error(transparent)]
    Cache(#[from] CacheError),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("{0}")]
    Usage(String),
    #[error("engine and naive oracle disagree on {0}")]
    OracleMismatch(String),
}

#[derive(Parser, Debug)]
#[command(
    name = "ramsey",
    version,
    about = "Decide G -> (nK2, H) and search for the least arrowing graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether graphs arrow (nK2, H); prints a good colouring when they do not.
    Arrows(ArrowsArgs),
    /// Least edge count of a graph arrowing (nK2, H), by exhaustive search.
    SearchMin(SearchArgs),
    /// Print a chained construction in graph6.
    Construct(ConstructArgs),
    /// Tabulate least sizes for a range of n next to the closed forms.
    Table(TableArgs),
}

#[derive(Args, Debug)]
struct ArrowsArgs {
    /// Graph in graph6; read one graph per line from stdin when absent.
    graph: Option<String>,
    #[arg(long)]
    n: usize,
    /// Blue target such as P3, C4.
    #[arg(long)]
    target: TargetPattern,
    /// Also run the brute-force oracle and fail on disagreement.
    #[arg(long)]
    oracle: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Prune {
    None,
    C3Minimal,
    C3Aggressive,
}

impl From<Prune> for PruningProfile {
    fn from(p: Prune) -> Self {
        match p {
            Prune::None => PruningProfile::None,
            Prune::C3Minimal => PruningProfile::C3Minimal,
            Prune::C3Aggressive => PruningProfile::C3Aggressive,
        }
    }
}

#[derive(Args, Debug)]
struct PoolArgs {
    /// Worker threads; 0 uses one per core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Results cache (JSON Lines); defaults to $RAMSEY_CACHE when set.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Lift the enumeration edge guard.
    #[arg(long)]
    allow_large: bool,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    target: TargetPattern,
    #[arg(long)]
    max_edges: usize,
    /// Search connected graphs only (the default).
    #[arg(long, conflicts_with = "disconnected")]
    connected: bool,
    /// Search all graphs without isolated vertices.
    #[arg(long)]
    disconnected: bool,
    #[arg(long, value_enum, default_value_t = Prune::None)]
    prune: Prune,
    #[command(flatten)]
    pool: PoolArgs,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    /// p3-chain, c4-chain or c3-chain.
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: usize,
    /// Check connectivity, the edge count against the closed form, and arrowing.
    #[arg(long)]
    verify: bool,
    /// Allow the arrowing check above 18 edges.
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long)]
    target: TargetPattern,
    /// Range such as 1..4 (inclusive) or a single value.
    #[arg(long, value_parser = parse_range)]
    n: RangeInclusive<usize>,
    /// Search limit per row; defaults to the closed-form value.
    #[arg(long)]
    max_edges: Option<usize>,
    #[command(flatten)]
    pool: PoolArgs,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("`{t}` is not a number"))
    };
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => (num(s)?, num(s)?),
    };
    if a == 0 || a > b {
        return Err(format!("`{s}` is not a range of positive integers"));
    }
    Ok(a..=b)
}

/// Parses `args` (program name first) and runs one subcommand, returning the
/// exit code.
pub fn run<I, T>(
    args: I,
    ctx: &RunContext,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Arrows(a) => cmd_arrows(&a, stdin, out),
        Command::SearchMin(a) => cmd_search_min(&a, ctx, out),
        Command::Construct(a) => cmd_construct(&a, out),
        Command::Table(a) => cmd_table(&a, ctx, out),
    };
    let _ = out.flush();
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn decode(input: &str) -> Result<Graph, CliError> {
    graph6::decode(input).map_err(|source| CliError::Graph6 {
        input: input.to_string(),
        source,
    })
}

fn write_colouring(out: &mut dyn Write, c: &EdgeColouring<'_>) -> io::Result<()> {
    for (e, (u, v)) in c.host().edges().enumerate() {
        writeln!(out, "{u}-{v}:{}", if c.is_blue(e) { "blue" } else { "red" })?;
    }
    Ok(())
}

fn cmd_arrows(
    a: &ArrowsArgs,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let inputs: Vec<String> = match &a.graph {
        Some(g) => vec![g.clone()],
        None => {
            let mut lines = Vec::new();
            for line in stdin.lines() {
                let line = line?;
                if !line.trim().is_empty() {
                    lines.push(line.trim().to_string());
                }
            }
            lines
        }
    };
    let labelled = a.graph.is_none();
    let mut code = 0;
    for input in &inputs {
        let g = decode(input)?;
        let verdict = has_good_colouring(&g, a.n, a.target)?;
        if a.oracle && naive_arrowing_oracle(&g, a.n, a.target)?.arrows != verdict.arrows {
            return Err(CliError::OracleMismatch(input.clone()));
        }
        let prefix = if labelled {
            format!("{input}: ")
        } else {
            String::new()
        };
        match &verdict.witness {
            None => writeln!(out, "{prefix}arrows")?,
            Some(w) => {
                debug_assert_eq!(verify_colouring(w, a.n, a.target), ColouringCheck::Good);
                writeln!(out, "{prefix}does not arrow; good colouring:")?;
                write_colouring(out, w)?;
                code = 1;
            }
        }
    }
    Ok(code)
}

fn cache_path(pool: &PoolArgs, ctx: &RunContext) -> Option<PathBuf> {
    pool.cache.clone().or_else(|| ctx.cache_env.clone())
}

fn cmd_search_min(a: &SearchArgs, ctx: &RunContext, out: &mut dyn Write) -> Result<u8, CliError> {
    let opts = SearchOptions {
        connected_only: !a.disconnected,
        max_edges: a.max_edges,
        pruning: a.prune.into(),
        allow_large: a.pool.allow_large,
    };
    let path = cache_path(&a.pool, ctx);
    // surface a broken cache before spending time on the search
    if let Some(p) = &path {
        cache::load(p)?;
    }
    let record = parallel::search(a.target, a.n, &opts, a.pool.jobs)?;
    if let Some(p) = &path {
        cache::store(p, record.clone())?;
    }
    let mut report = Report::new(vec![
        ("command".into(), "search-min".into()),
        ("target".into(), a.target.to_string()),
        ("n".into(), a.n.to_string()),
        ("max_edges".into(), a.max_edges.to_string()),
        ("connected_only".into(), opts.connected_only.to_string()),
        ("prune".into(), format!("{:?}", a.prune).to_lowercase()),
    ]);
    report.rows.push(Row::new(&record, "computed"));
    out.write_all(report.render(a.pool.format).as_bytes())?;
    Ok(0)
}

fn cmd_construct(a: &ConstructArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let g = build(a.family, a.n)?;
    let target = a.family.target();
    let formula = formula_for(target, a.n).expect("every family has a closed form");
    let connected = g.is_connected();
    if a.verify && g.edge_count() > VERIFY_EDGE_LIMIT && !a.allow_large {
        return Err(CliError::Usage(format!(
            "--verify checks arrowing only up to {VERIFY_EDGE_LIMIT} edges; this graph has {} (pass --allow-large)",
            g.edge_count()
        )));
    }
    writeln!(
        out,
        "{}",
        graph6::encode(&g).map_err(|source| CliError::Graph6 {
            input: String::new(),
            source
        })?
    )?;
    writeln!(
        out,
        "{} n={}: {} vertices, {} edges, {}",
        a.family,
        a.n,
        g.vertex_count(),
        g.edge_count(),
        if connected {
            "connected"
        } else {
            "not connected"
        }
    )?;
    writeln!(out, "formula for ({}K2, {target}): {formula}", a.n)?;
    if !a.verify {
        return Ok(0);
    }
    let mut failures = Vec::new();
    if !connected {
        failures.push("graph is not connected".to_string());
    }
    if g.edge_count() != formula {
        failures.push(format!(
            "edge count {} differs from the formula {formula}",
            g.edge_count()
        ));
    }
    if !has_good_colouring(&g, a.n, target)?.arrows {
        failures.push(format!("graph does not arrow ({}K2, {target})", a.n));
    }
    if failures.is_empty() {
        writeln!(
            out,
            "verified: connected, {formula} edges, arrows ({}K2, {target})",
            a.n
        )?;
        Ok(0)
    } else {
        for f in failures {
            writeln!(out, "verification failed: {f}")?;
        }
        Ok(1)
    }
}

fn cmd_table(a: &TableArgs, ctx: &RunContext, out: &mut dyn Write) -> Result<u8, CliError> {
    let path = cache_path(&a.pool, ctx);
    let mut table = match &path {
        Some(p) => cache::load(p)?,
        None => Default::default(),
    };
    let mut report = Report::new(vec![
        ("command".into(), "table".into()),
        ("target".into(), a.target.to_string()),
        ("n".into(), format!("{}..{}", a.n.start(), a.n.end())),
        (
            "max_edges".into(),
            a.max_edges
                .map_or_else(|| "formula".into(), |m| m.to_string()),
        ),
    ]);
    let mut dirty = false;
    for n in a.n.clone() {
        let key = CacheKey {
            target: a.target,
            n,
            connected_only: true,
        };
        let max_edges = match a.max_edges.or_else(|| formula_for(a.target, n)) {
            Some(m) => m,
            None => {
                return Err(CliError::Usage(format!(
                    "{} has no closed form; pass --max-edges",
                    a.target
                )))
            }
        };
        let cached = table.get(&key).filter(|r| settles(r, max_edges));
        let (record, source): (SearchRecord, _) = match cached {
            Some(r) => (r.clone(), "cache"),
            None => {
                if max_edges > ENUMERATION_EDGE_LIMIT && !a.pool.allow_large {
                    return Err(CliError::Usage(format!(
                        "n={n} needs graphs with {max_edges} edges; the guard is {ENUMERATION_EDGE_LIMIT} (pass --allow-large)"
                    )));
                }
                let r = parallel::search(
                    a.target,
                    n,
                    &SearchOptions::connected(max_edges),
                    a.pool.jobs,
                )?;
                cache::merge(&mut table, r.clone())?;
                dirty = true;
                (r, "computed")
            }
        };
        report.rows.push(Row::new(&record, source));
    }
    if let (Some(p), true) = (&path, dirty) {
        cache::save(p, &table)?;
    }
    out.write_all(report.render(a.pool.format).as_bytes())?;
    Ok(if report.any_mismatch() { 1 } else { 0 })
}

/// Whether a cached record answers a query searched up to `max_edges`.
fn settles(r: &SearchRecord, max_edges: usize) -> bool {
    match r.status {
        SearchStatus::Exact => true,
        SearchStatus::LowerBoundOnly => r.lo > max_edges,
        SearchStatus::UpperBoundOnly => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..4").unwrap(), 1..=4);
        assert_eq!(parse_range("2..=3").unwrap(), 2..=3);
        assert_eq!(parse_range("3").unwrap(), 3..=3);
        assert!(parse_range("0..2").is_err());
        assert!(parse_range("4..1").is_err());
        assert!(parse_range("a..b").is_err());
    }
}
