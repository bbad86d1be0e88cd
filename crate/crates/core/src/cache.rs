//! Process-wide cache of constructed modules, with an optional JSON store on
//! disk. Disk entries carry a format version and a checksum of their payload;
//! anything that fails to match is rebuilt and overwritten.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::combinatorics::SkewShape;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::schur::{Label, LabeledModule};
use crate::tensor::{Key, MultigradedSpace, TensorVec};

pub const CACHE_FORMAT_VERSION: u32 = 1;

/// Conventions baked into cached bases; part of every disk key.
pub const CONVENTIONS: &str = "sst=rows-strict;d=row-antisymmetrize;dprime=coefficient-one;entries=1-based";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleType {
    Schur,
    Weyl,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModuleKey {
    pub module: ModuleType,
    pub shape: SkewShape,
    pub n: usize,
}

impl ModuleKey {
    fn file_stem(&self) -> String {
        let text = format!("{}|{:?}|{}|{}", CONVENTIONS, self.module, self.shape, self.n);
        hex(&Sha256::digest(text.as_bytes()))
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Serialize, Deserialize)]
struct Payload {
    space: MultigradedSpace,
    labels: Vec<Label>,
    vectors: Vec<Vec<(Key, Rational)>>,
}

#[derive(Serialize, Deserialize)]
struct DiskEntry {
    version: u32,
    conventions: String,
    key: ModuleKey,
    checksum: String,
    payload: Payload,
}

fn payload_checksum(p: &Payload) -> Result<String> {
    Ok(hex(&Sha256::digest(serde_json::to_vec(p)?)))
}

#[derive(Default)]
pub struct ModuleCache {
    memory: RwLock<HashMap<ModuleKey, Arc<LabeledModule>>>,
    dir: RwLock<Option<PathBuf>>,
}

static GLOBAL: OnceLock<ModuleCache> = OnceLock::new();

impl ModuleCache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        ModuleCache { memory: RwLock::default(), dir: RwLock::new(dir) }
    }

    /// The shared cache; its disk directory starts as `ROOKERY_CACHE_DIR` if set.
    pub fn global() -> &'static ModuleCache {
        GLOBAL.get_or_init(|| ModuleCache::new(std::env::var_os("ROOKERY_CACHE_DIR").map(PathBuf::from)))
    }

    pub fn set_dir(&self, dir: Option<PathBuf>) {
        *self.dir.write().unwrap() = dir;
    }

    pub fn dir(&self) -> Option<PathBuf> {
        self.dir.read().unwrap().clone()
    }

    pub fn len(&self) -> usize {
        self.memory.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear_memory(&self) {
        self.memory.write().unwrap().clear();
    }

    pub fn get_or_build(
        &self,
        key: &ModuleKey,
        build: impl FnOnce() -> Result<LabeledModule>,
    ) -> Result<Arc<LabeledModule>> {
        if let Some(m) = self.memory.read().unwrap().get(key) {
            return Ok(m.clone());
        }
        let dir = self.dir();
        let module = match dir.as_deref().and_then(|d| load(d, key).ok().flatten()) {
            Some(m) => m,
            None => {
                let m = build()?;
                if let Some(d) = &dir {
                    store(d, key, &m)?;
                }
                m
            }
        };
        let mut mem = self.memory.write().unwrap();
        Ok(mem.entry(key.clone()).or_insert_with(|| Arc::new(module)).clone())
    }
}

fn path_for(dir: &Path, key: &ModuleKey) -> PathBuf {
    dir.join(format!("{}.json", key.file_stem()))
}

/// `Ok(None)` when the entry is missing or stale.
fn load(dir: &Path, key: &ModuleKey) -> Result<Option<LabeledModule>> {
    let path = path_for(dir, key);
    let Ok(text) = std::fs::read(&path) else { return Ok(None) };
    let entry: DiskEntry = match serde_json::from_slice(&text) {
        Ok(e) => e,
        Err(_) => return Ok(None),
    };
    if entry.version != CACHE_FORMAT_VERSION
        || entry.conventions != CONVENTIONS
        || &entry.key != key
        || entry.checksum != payload_checksum(&entry.payload)?
    {
        return Ok(None);
    }
    let Payload { space, labels, vectors } = entry.payload;
    let vectors: Vec<TensorVec> = vectors.into_iter().map(|v| v.into_iter().collect()).collect();
    LabeledModule::from_vectors(space, labels, vectors).map(Some)
}

fn store(dir: &Path, key: &ModuleKey, m: &LabeledModule) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let payload = Payload {
        space: m.space().clone(),
        labels: m.labels().to_vec(),
        vectors: m.vectors().iter().map(|v| v.iter().map(|(k, c)| (k.clone(), c.clone())).collect()).collect(),
    };
    let entry = DiskEntry {
        version: CACHE_FORMAT_VERSION,
        conventions: CONVENTIONS.to_string(),
        key: key.clone(),
        checksum: payload_checksum(&payload)?,
        payload,
    };
    let path = path_for(dir, key);
    let tmp = path.with_extension(format!("json.{}.tmp", std::process::id()));
    std::fs::write(&tmp, serde_json::to_vec(&entry)?)?;
    std::fs::rename(&tmp, &path).map_err(|e| Error::Cache(format!("cannot write {}: {e}", path.display())))
}
