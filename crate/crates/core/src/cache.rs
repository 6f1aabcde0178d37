//! Append-only JSON-lines result cache.
//!
//! Each line is `{"key": <sha256 hex>, "input": <string>, "value": <json>}`.
//! Lookups scan the file and take the last matching line, so a rewritten
//! entry simply shadows the old one.

use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::monomial::{canonical_form, MonomialIdeal};
use crate::report::TOOL_VERSION;

pub const CACHE_DIR_ENV: &str = "TOGLIATTI_CACHE_DIR";
const FILE_NAME: &str = "cache.jsonl";

#[derive(Serialize, Deserialize)]
struct Line {
    key: String,
    input: String,
    value: Value,
}

#[derive(Clone, Debug)]
pub struct Cache {
    path: PathBuf,
}

fn digest(parts: &[&str]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update(p.as_bytes());
        h.update([0u8]);
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// Key for a reproduction target result.
pub fn target_key(target: &str) -> String {
    digest(&[TOOL_VERSION, "target", target])
}

/// Key for an analysis: the canonical ideal plus the selected checks.
pub fn ideal_key(ideal: &MonomialIdeal, checks: &str) -> String {
    digest(&[TOOL_VERSION, "analyze", &canonical_form(ideal).to_inline(), checks])
}

impl Cache {
    pub fn open(dir: impl AsRef<Path>) -> Result<Cache> {
        fs::create_dir_all(dir.as_ref())?;
        Ok(Cache {
            path: dir.as_ref().join(FILE_NAME),
        })
    }

    /// The cache named by the environment, if any.
    pub fn from_env() -> Result<Option<Cache>> {
        match std::env::var_os(CACHE_DIR_ENV) {
            Some(dir) if !dir.is_empty() => Cache::open(dir).map(Some),
            _ => Ok(None),
        }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn get(&self, key: &str, input: &str) -> Result<Option<Value>> {
        let file = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let mut found = None;
        for line in BufReader::new(file).lines() {
            let line = line?;
            // A torn final line from an interrupted write is skipped.
            if let Ok(entry) = serde_json::from_str::<Line>(&line) {
                if entry.key == key && entry.input == input {
                    found = Some(entry.value);
                }
            }
        }
        Ok(found)
    }

    pub fn put(&self, key: &str, input: &str, value: &impl Serialize) -> Result<()> {
        let line = Line {
            key: key.to_string(),
            input: input.to_string(),
            value: serde_json::to_value(value)?,
        };
        let mut text = serde_json::to_string(&line)?;
        text.push('\n');
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
        f.write_all(text.as_bytes())?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_shadowing() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let k = target_key("t");
        assert_eq!(cache.get(&k, "t").unwrap(), None);
        cache.put(&k, "t", &1).unwrap();
        cache.put(&k, "t", &2).unwrap();
        assert_eq!(cache.get(&k, "t").unwrap(), Some(Value::from(2)));
        assert_eq!(cache.get(&k, "u").unwrap(), None);
        assert_eq!(fs::read_to_string(cache.path()).unwrap().lines().count(), 2);
    }

    #[test]
    fn ideal_keys_are_orbit_invariant() {
        let a = MonomialIdeal::parse_inline("x0^3,x1^3,x2^3,x0^2*x1", None).unwrap();
        let b = MonomialIdeal::parse_inline("x0^3,x1^3,x2^3,x1*x2^2", None).unwrap();
        assert_eq!(ideal_key(&a, "all"), ideal_key(&b, "all"));
        assert_ne!(ideal_key(&a, "all"), ideal_key(&a, "wlp"));
    }
}
