//! Append-only JSON cache of solved rows.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::generators::FamilyKind;
use crate::solver::{Quantity, SumResult, SOLVER_VERSION};

const FORMAT: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CacheKey {
    pub family: FamilyKind,
    pub n: usize,
    pub quantity: Quantity,
    pub solver_version: String,
}

impl CacheKey {
    pub fn current(family: FamilyKind, n: usize, quantity: Quantity) -> Self {
        CacheKey {
            family,
            n,
            quantity,
            solver_version: SOLVER_VERSION.to_string(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Entry {
    #[serde(flatten)]
    key: CacheKey,
    result: SumResult,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format: u32,
    entries: Vec<Entry>,
}

#[derive(Debug, Default)]
pub struct ResultsCache {
    path: Option<PathBuf>,
    entries: BTreeMap<CacheKey, SumResult>,
    dirty: bool,
}

impl ResultsCache {
    /// Cache that never touches disk.
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Loads `path`; a missing file starts empty and an unreadable one is
    /// discarded with a warning.
    pub fn open(path: impl Into<PathBuf>) -> Self {
        let path = path.into();
        let entries = match fs::read_to_string(&path) {
            Ok(text) => match serde_json::from_str::<CacheFile>(&text) {
                Ok(file) if file.format == FORMAT => {
                    file.entries.into_iter().map(|e| (e.key, e.result)).collect()
                }
                Ok(file) => {
                    log::warn!(
                        "cache {} has format {}, expected {FORMAT}; rebuilding",
                        path.display(),
                        file.format
                    );
                    BTreeMap::new()
                }
                Err(e) => {
                    log::warn!("cache {} is corrupt ({e}); rebuilding", path.display());
                    BTreeMap::new()
                }
            },
            Err(_) => BTreeMap::new(),
        };
        ResultsCache {
            path: Some(path),
            entries,
            dirty: false,
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Hit only for the running solver version.
    pub fn get(&self, family: FamilyKind, n: usize, quantity: Quantity) -> Option<&SumResult> {
        self.entries.get(&CacheKey::current(family, n, quantity))
    }

    /// Existing entries are never replaced.
    pub fn insert(&mut self, key: CacheKey, result: SumResult) {
        if let std::collections::btree_map::Entry::Vacant(slot) = self.entries.entry(key) {
            slot.insert(result);
            self.dirty = true;
        }
    }

    pub fn save(&mut self) -> Result<()> {
        let Some(path) = &self.path else {
            return Ok(());
        };
        if !self.dirty && path.exists() {
            return Ok(());
        }
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir)?;
        }
        let file = CacheFile {
            format: FORMAT,
            entries: self
                .entries
                .iter()
                .map(|(k, r)| Entry {
                    key: k.clone(),
                    result: r.clone(),
                })
                .collect(),
        };
        let tmp = tmp_path(path);
        fs::write(&tmp, serde_json::to_string_pretty(&file)?)?;
        fs::rename(&tmp, path)?;
        self.dirty = false;
        Ok(())
    }
}

fn tmp_path(path: &Path) -> PathBuf {
    let mut name = path.file_name().unwrap_or_default().to_os_string();
    name.push(".tmp");
    path.with_file_name(name)
}
