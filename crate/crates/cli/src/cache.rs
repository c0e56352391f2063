//! Results cache: a JSON Lines file holding one search record per
//! `(target, n, connected_only)` key, witnesses in graph6.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use ramsey_core::search::{SearchRecord, SearchStatus};
use ramsey_core::TargetPattern;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph6;

/// Environment variable that overrides the cache path.
pub const CACHE_ENV: &str = "RAMSEY_CACHE";

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cannot access cache {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("{path}:{line}: field `{field}`: {message}")]
    Field {
        path: PathBuf,
        line: usize,
        field: &'static str,
        message: String,
    },
    #[error("{path}:{line}: record for {key} conflicts with line {earlier}")]
    Conflict {
        path: PathBuf,
        line: usize,
        earlier: usize,
        key: String,
    },
    #[error("record for {key} conflicts with the cached one")]
    StoreConflict { key: String },
}

/// Cache key: target, matching size, connected-only flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CacheKey {
    pub target: TargetPattern,
    pub n: usize,
    pub connected_only: bool,
}

impl CacheKey {
    pub fn of(r: &SearchRecord) -> Self {
        CacheKey {
            target: r.target,
            n: r.n,
            connected_only: r.connected_only,
        }
    }
}

impl std::fmt::Display for CacheKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let kind = if self.connected_only {
            "connected"
        } else {
            "any"
        };
        write!(f, "({}, n={}, {kind})", self.target, self.n)
    }
}

pub type CacheTable = BTreeMap<CacheKey, SearchRecord>;

/// On-disk shape of one record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RecordLine {
    pub target: String,
    pub n: usize,
    pub connected_only: bool,
    pub status: String,
    #[serde(default)]
    pub value: Option<usize>,
    pub lo: usize,
    #[serde(default)]
    pub hi: Option<usize>,
    #[serde(default)]
    pub witness: Option<String>,
    pub graphs_examined: u64,
    pub wall_time_secs: f64,
    pub engine_version: String,
}

impl RecordLine {
    pub fn from_record(r: &SearchRecord) -> Self {
        RecordLine {
            target: r.target.to_string(),
            n: r.n,
            connected_only: r.connected_only,
            status: r.status.as_str().to_string(),
            value: r.value(),
            lo: r.lo,
            hi: r.hi,
            witness: r
                .witness
                .as_ref()
                .map(|w| graph6::encode(w).expect("witnesses have at most 31 vertices")),
            graphs_examined: r.graphs_examined,
            wall_time_secs: r.wall_time.as_secs_f64(),
            engine_version: r.engine_version.clone(),
        }
    }

    /// Converts back, naming the offending field on failure.
    pub fn to_record(&self) -> Result<SearchRecord, (&'static str, String)> {
        let target = self
            .target
            .parse()
            .map_err(|e| ("target", format!("{e}")))?;
        let status = match self.status.as_str() {
            "exact" => SearchStatus::Exact,
            "lower_bound_only" => SearchStatus::LowerBoundOnly,
            "upper_bound_only" => SearchStatus::UpperBoundOnly,
            other => return Err(("status", format!("unknown status `{other}`"))),
        };
        if self.n == 0 {
            return Err(("n", "must be at least 1".into()));
        }
        let witness = match &self.witness {
            Some(s) => Some(graph6::decode(s).map_err(|e| ("witness", e.to_string()))?),
            None => None,
        };
        if !self.wall_time_secs.is_finite() || self.wall_time_secs < 0.0 {
            return Err(("wall_time_secs", "must be a non-negative number".into()));
        }
        let record = SearchRecord {
            target,
            n: self.n,
            connected_only: self.connected_only,
            status,
            lo: self.lo,
            hi: self.hi,
            witness,
            graphs_examined: self.graphs_examined,
            wall_time: Duration::from_secs_f64(self.wall_time_secs),
            engine_version: self.engine_version.clone(),
        };
        if self.value != record.value() {
            return Err(("value", "disagrees with status and bounds".into()));
        }
        Ok(record)
    }
}

/// Closed interval of values compatible with a record.
fn interval(r: &SearchRecord) -> (usize, usize) {
    (r.lo, r.hi.unwrap_or(usize::MAX))
}

fn compatible(a: &SearchRecord, b: &SearchRecord) -> bool {
    let (alo, ahi) = interval(a);
    let (blo, bhi) = interval(b);
    alo.max(blo) <= ahi.min(bhi)
}

/// Reads the cache. A missing file is an empty table. Every record is
/// checked for consistency and exact witnesses are re-verified to arrow.
/// A key may repeat if the records agree; the later line wins.
pub fn load(path: &Path) -> Result<CacheTable, CacheError> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(CacheTable::new()),
        Err(source) => {
            return Err(CacheError::Io {
                path: path.to_path_buf(),
                source,
            })
        }
    };
    let mut table = CacheTable::new();
    let mut first_line = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let parsed: RecordLine = serde_json::from_str(raw).map_err(|e| CacheError::Parse {
            path: path.to_path_buf(),
            line,
            message: e.to_string(),
        })?;
        let field_err = |(field, message)| CacheError::Field {
            path: path.to_path_buf(),
            line,
            field,
            message,
        };
        let record = parsed.to_record().map_err(field_err)?;
        record
            .validate()
            .map_err(|e| field_err(("witness", e.to_string())))?;
        let key = CacheKey::of(&record);
        if let Some(old) = table.get(&key) {
            if !compatible(old, &record) {
                return Err(CacheError::Conflict {
                    path: path.to_path_buf(),
                    line,
                    earlier: first_line[&key],
                    key: key.to_string(),
                });
            }
        }
        first_line.insert(key, line);
        table.insert(key, record);
    }
    Ok(table)
}

/// Merges `record` into the table. It replaces the cached record for its key
/// unless the cached one is exact and the new one is only a bound, in which
/// case the exact one is kept. Incompatible records are rejected.
pub fn merge(table: &mut CacheTable, record: SearchRecord) -> Result<(), CacheError> {
    let key = CacheKey::of(&record);
    if let Some(old) = table.get(&key) {
        if !compatible(old, &record) {
            return Err(CacheError::StoreConflict {
                key: key.to_string(),
            });
        }
        if old.status == SearchStatus::Exact && record.status != SearchStatus::Exact {
            return Ok(());
        }
    }
    table.insert(key, record);
    Ok(())
}

/// Writes the whole table, one line per key in key order, via a temporary
/// file renamed into place.
pub fn save(path: &Path, table: &CacheTable) -> Result<(), CacheError> {
    let io_err = |source| CacheError::Io {
        path: path.to_path_buf(),
        source,
    };
    let mut buf = Vec::new();
    for r in table.values() {
        serde_json::to_writer(&mut buf, &RecordLine::from_record(r))
            .expect("record lines serialize");
        buf.push(b'\n');
    }
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    let mut f = fs::File::create(&tmp).map_err(io_err)?;
    f.write_all(&buf)
        .and_then(|_| f.sync_all())
        .map_err(io_err)?;
    fs::rename(&tmp, path).map_err(io_err)
}

/// Load, merge one record, save.
pub fn store(path: &Path, record: SearchRecord) -> Result<(), CacheError> {
    let mut table = load(path)?;
    merge(&mut table, record)?;
    save(path, &table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ramsey_core::search::{minimum_arrowing_size, SearchOptions};

    fn exact_p3(n: usize) -> SearchRecord {
        minimum_arrowing_size(TargetPattern::Path(3), n, &SearchOptions::connected(8)).unwrap()
    }

    #[test]
    fn round_trip_and_missing_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        assert!(load(&path).unwrap().is_empty());
        let mut a = exact_p3(2);
        a.wall_time = Duration::from_millis(250);
        let b = minimum_arrowing_size(TargetPattern::Cycle(3), 2, &SearchOptions::connected(5))
            .unwrap();
        store(&path, a.clone()).unwrap();
        store(&path, b.clone()).unwrap();
        let t = load(&path).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[&CacheKey::of(&a)], a);
        assert_eq!(t[&CacheKey::of(&b)], b);
    }

    #[test]
    fn exact_records_survive_weaker_bounds() {
        let mut t = CacheTable::new();
        let exact = exact_p3(2);
        merge(&mut t, exact.clone()).unwrap();
        let weak =
            minimum_arrowing_size(TargetPattern::Path(3), 2, &SearchOptions::connected(3)).unwrap();
        assert_eq!(weak.lo, 4);
        merge(&mut t, weak).unwrap();
        assert_eq!(t[&CacheKey::of(&exact)], exact);
        let mut wrong = exact.clone();
        wrong.status = SearchStatus::LowerBoundOnly;
        wrong.lo = 5;
        wrong.hi = None;
        wrong.witness = None;
        assert!(matches!(
            merge(&mut t, wrong),
            Err(CacheError::StoreConflict { .. })
        ));
    }

    #[test]
    fn load_rejects_conflicting_duplicates() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        let a = RecordLine::from_record(&exact_p3(2));
        let mut b = a.clone();
        b.status = "lower_bound_only".into();
        b.value = None;
        b.lo = 9;
        b.hi = None;
        b.witness = None;
        let text = format!(
            "{}\n{}\n",
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        fs::write(&path, text).unwrap();
        match load(&path).unwrap_err() {
            CacheError::Conflict { line, earlier, .. } => assert_eq!((line, earlier), (2, 1)),
            e => panic!("{e}"),
        }
    }

    #[test]
    fn load_names_line_and_field() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        let good = serde_json::to_string(&RecordLine::from_record(&exact_p3(1))).unwrap();
        fs::write(&path, format!("{good}\n{{not json\n")).unwrap();
        let e = load(&path).unwrap_err();
        assert!(matches!(e, CacheError::Parse { line: 2, .. }), "{e}");

        let mut bad = RecordLine::from_record(&exact_p3(1));
        bad.witness = Some("Bw".into()); // a triangle has 3 edges, not 2
        fs::write(&path, serde_json::to_string(&bad).unwrap()).unwrap();
        let e = load(&path).unwrap_err();
        assert!(
            matches!(
                e,
                CacheError::Field {
                    line: 1,
                    field: "witness",
                    ..
                }
            ),
            "{e}"
        );

        let mut bad = RecordLine::from_record(&exact_p3(1));
        bad.target = "Q3".into();
        fs::write(&path, serde_json::to_string(&bad).unwrap()).unwrap();
        assert!(matches!(
            load(&path).unwrap_err(),
            CacheError::Field {
                field: "target",
                ..
            }
        ));
    }
}
