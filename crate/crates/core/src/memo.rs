//! Canonical-key memoization of counts, with a line-oriented cache file.
//!
//! Each cache line is `v1|<engine>|d|g|alpha|beta|s|count`, sequences written
//! comma-separated and counts in decimal, sorted by key. The first line is the
//! header [`HEADER`].

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;
use std::str::FromStr;
use std::sync::RwLock;

use num_bigint::BigUint;

use crate::config::CurveConfig;
use crate::error::{Error, Result};
use crate::Count;

pub const FORMAT_VERSION: &str = "v1";
pub const HEADER: &str = "# severi count cache v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EngineTag {
    Irreducible,
    Reducible,
}

impl EngineTag {
    pub fn as_str(self) -> &'static str {
        match self {
            EngineTag::Irreducible => "irreducible",
            EngineTag::Reducible => "reducible",
        }
    }
}

impl fmt::Display for EngineTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EngineTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "irreducible" => Ok(EngineTag::Irreducible),
            "reducible" => Ok(EngineTag::Reducible),
            other => Err(Error::Parse {
                input: other.to_string(),
                reason: "unknown engine tag".into(),
            }),
        }
    }
}

/// An engine tag plus a configuration in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MemoKey {
    engine: EngineTag,
    config: CurveConfig,
}

impl MemoKey {
    /// Normalizes `config` so that point labels are erased.
    pub fn new(engine: EngineTag, config: &CurveConfig) -> Self {
        MemoKey {
            engine,
            config: config.normalize(),
        }
    }

    pub fn engine(&self) -> EngineTag {
        self.engine
    }

    pub fn config(&self) -> &CurveConfig {
        &self.config
    }
}

impl fmt::Display for MemoKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        write!(
            f,
            "{}|{}|{}|{}|{}|{}",
            self.engine, c.d, c.g, c.alpha, c.beta, c.s
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MemoEntry {
    pub key: MemoKey,
    pub value: Count,
}

impl MemoEntry {
    fn to_line(&self) -> String {
        format!("{FORMAT_VERSION}|{}|{}", self.key, self.value)
    }

    fn parse_line(line: &str, lineno: usize) -> Result<MemoEntry> {
        let bad = |reason: String| Error::CacheFormat {
            line: lineno,
            reason,
        };
        let fields: Vec<&str> = line.split('|').collect();
        if fields.len() != 8 {
            return Err(bad(format!("expected 8 fields, found {}", fields.len())));
        }
        if fields[0] != FORMAT_VERSION {
            return Err(bad(format!("unsupported version {:?}", fields[0])));
        }
        let engine: EngineTag = fields[1].parse().map_err(|e: Error| bad(e.to_string()))?;
        let d: u32 = fields[2].parse().map_err(|_| bad(format!("bad degree {:?}", fields[2])))?;
        let g: i64 = fields[3].parse().map_err(|_| bad(format!("bad genus {:?}", fields[3])))?;
        let parse_err = |e: Error| bad(e.to_string());
        let config = CurveConfig {
            d,
            g,
            alpha: fields[4].parse().map_err(parse_err)?,
            beta: fields[5].parse().map_err(parse_err)?,
            s: fields[6].parse().map_err(parse_err)?,
        };
        let value = BigUint::from_str(fields[7])
            .map_err(|_| bad(format!("bad count {:?}", fields[7])))?;

        if d == 0 {
            return Err(bad("degree must be positive".into()));
        }
        if !config.is_balanced() {
            return Err(bad(format!("unbalanced configuration {config}")));
        }
        if config.normalize() != config {
            return Err(bad(format!("configuration {config} is not canonical")));
        }
        if engine == EngineTag::Irreducible && g < 0 {
            return Err(bad("negative genus in an irreducible entry".into()));
        }
        Ok(MemoEntry {
            key: MemoKey { engine, config },
            value,
        })
    }
}

/// A thread-safe map from canonical keys to final counts.
///
/// Inserting a different value for an existing key is an error: the engines
/// are deterministic, so a conflict means a bug.
#[derive(Debug, Default)]
pub struct MemoStore {
    entries: RwLock<HashMap<MemoKey, Count>>,
}

impl MemoStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn lookup(&self, key: &MemoKey) -> Option<Count> {
        self.entries.read().unwrap().get(key).cloned()
    }

    pub fn insert(&self, key: MemoKey, value: Count) -> Result<()> {
        let mut map = self.entries.write().unwrap();
        if let Some(stored) = map.get(&key) {
            if *stored != value {
                return Err(Error::MemoConflict {
                    key: key.to_string(),
                    stored: stored.to_string(),
                    new: value.to_string(),
                });
            }
            return Ok(());
        }
        map.insert(key, value);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.entries.write().unwrap().clear();
    }

    /// All entries, sorted by key.
    pub fn entries(&self) -> Vec<MemoEntry> {
        let map = self.entries.read().unwrap();
        let mut out: Vec<MemoEntry> = map
            .iter()
            .map(|(k, v)| MemoEntry {
                key: k.clone(),
                value: v.clone(),
            })
            .collect();
        out.sort_by(|a, b| a.key.cmp(&b.key));
        out
    }

    pub fn write_to<W: Write>(&self, out: W) -> Result<()> {
        let mut out = BufWriter::new(out);
        writeln!(out, "{HEADER}")?;
        for entry in self.entries() {
            writeln!(out, "{}", entry.to_line())?;
        }
        out.flush()?;
        Ok(())
    }

    /// Parses and validates a whole cache before merging any of it; a single
    /// bad line rejects the file.
    pub fn read_from<R: Read>(&self, input: R) -> Result<usize> {
        let mut lines = BufReader::new(input).lines();
        match lines.next().transpose()? {
            Some(h) if h == HEADER => {}
            Some(h) => {
                return Err(Error::CacheFormat {
                    line: 1,
                    reason: format!("unexpected header {h:?}"),
                })
            }
            None => {
                return Err(Error::CacheFormat {
                    line: 1,
                    reason: "empty file".into(),
                })
            }
        }
        let mut parsed = Vec::new();
        for (i, line) in lines.enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            parsed.push(MemoEntry::parse_line(&line, i + 2)?);
        }
        let n = parsed.len();
        for e in parsed {
            self.insert(e.key, e.value)?;
        }
        Ok(n)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let tmp = path.with_extension("tmp");
        self.write_to(fs::File::create(&tmp)?)?;
        fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn load(&self, path: impl AsRef<Path>) -> Result<usize> {
        self.read_from(fs::File::open(path)?)
    }
}
