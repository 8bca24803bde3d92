//! Shared store of `k`-Kostka matrices keyed by `(k, degree)`, optionally
//! persisted as a checksummed JSON file.
//!
//! A file that fails to parse, has the wrong format tag or version, or whose
//! checksum does not match is ignored wholesale; the cache simply starts empty.

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::ktableaux::KostkaMatrix;

pub const FORMAT: &str = "kschur-kostka";
pub const VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format: String,
    version: u32,
    checksum: String,
    matrices: Vec<KostkaMatrix>,
}

/// What happened when a cache file was opened.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LoadStatus {
    Missing,
    Loaded(usize),
    Rejected(String),
}

fn checksum(matrices: &[KostkaMatrix]) -> String {
    let body = serde_json::to_vec(matrices).expect("matrices serialize");
    hex::encode(Sha256::digest(&body))
}

#[derive(Default)]
pub struct KostkaCache {
    store: RwLock<HashMap<(usize, usize), Arc<KostkaMatrix>>>,
    path: Option<PathBuf>,
}

impl KostkaCache {
    pub fn in_memory() -> KostkaCache {
        KostkaCache::default()
    }

    /// Opens (or prepares to create) a cache backed by `path`.
    pub fn open(path: impl AsRef<Path>) -> (KostkaCache, LoadStatus) {
        let path = path.as_ref().to_path_buf();
        let (store, status) = match std::fs::read(&path) {
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => (HashMap::new(), LoadStatus::Missing),
            Err(e) => (HashMap::new(), LoadStatus::Rejected(e.to_string())),
            Ok(bytes) => match Self::decode(&bytes) {
                Ok(store) => {
                    let n = store.len();
                    (store, LoadStatus::Loaded(n))
                }
                Err(reason) => (HashMap::new(), LoadStatus::Rejected(reason)),
            },
        };
        (KostkaCache { store: RwLock::new(store), path: Some(path) }, status)
    }

    fn decode(bytes: &[u8]) -> std::result::Result<HashMap<(usize, usize), Arc<KostkaMatrix>>, String> {
        let file: CacheFile = serde_json::from_slice(bytes).map_err(|e| format!("unreadable: {e}"))?;
        if file.format != FORMAT || file.version != VERSION {
            return Err(format!("unsupported format {} v{}", file.format, file.version));
        }
        if checksum(&file.matrices) != file.checksum {
            return Err("checksum mismatch".into());
        }
        Ok(file.matrices.into_iter().map(|m| ((m.k, m.degree), Arc::new(m))).collect())
    }

    pub fn len(&self) -> usize {
        self.store.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, k: usize, degree: usize) -> Option<Arc<KostkaMatrix>> {
        self.store.read().expect("cache lock").get(&(k, degree)).cloned()
    }

    /// Cached matrix, computing and inserting it on a miss.
    pub fn matrix(&self, k: usize, degree: usize) -> Result<Arc<KostkaMatrix>> {
        if let Some(m) = self.get(k, degree) {
            return Ok(m);
        }
        let m = Arc::new(KostkaMatrix::compute(k, degree)?);
        let mut store = self.store.write().expect("cache lock");
        Ok(store.entry((k, degree)).or_insert(m).clone())
    }

    /// Writes the cache to its backing file, if it has one.
    pub fn save(&self) -> std::io::Result<()> {
        let Some(path) = &self.path else { return Ok(()) };
        let sorted: BTreeMap<(usize, usize), Arc<KostkaMatrix>> =
            self.store.read().expect("cache lock").iter().map(|(key, m)| (*key, m.clone())).collect();
        let matrices: Vec<KostkaMatrix> = sorted.into_values().map(|m| (*m).clone()).collect();
        let file = CacheFile { format: FORMAT.into(), version: VERSION, checksum: checksum(&matrices), matrices };
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, serde_json::to_vec(&file)?)?;
        std::fs::rename(tmp, path)
    }
}
