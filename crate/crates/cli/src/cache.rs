//! Content-addressed on-disk store for computed `A_mu`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use plethygen::combinat::Partition;
use plethygen::FactoredRational;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Bumping this invalidates every existing entry.
pub const CACHE_VERSION: u32 = 1;

pub const DEFAULT_DIR: &str = ".plethygen-cache";

#[derive(Serialize, Deserialize)]
struct Entry {
    version: u32,
    mu: Partition,
    m: Option<u32>,
    result: serde_json::Value,
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    /// The directory named by `PLETHYGEN_CACHE`, or the default.
    pub fn from_env() -> Self {
        let dir = std::env::var_os("PLETHYGEN_CACHE")
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(DEFAULT_DIR));
        Cache { dir }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, mu: &Partition, m: Option<u32>) -> PathBuf {
        let mut h = Sha256::new();
        h.update(format!("A|v{CACHE_VERSION}|{mu}|{m:?}"));
        self.dir.join(format!("{}.json", hex::encode(h.finalize())))
    }

    /// A stored result, if present and readable with the current version.
    pub fn get(&self, mu: &Partition, m: Option<u32>) -> Option<FactoredRational> {
        let text = fs::read_to_string(self.path(mu, m)).ok()?;
        let entry: Entry = match serde_json::from_str(&text) {
            Ok(e) => e,
            Err(e) => {
                log::warn!("ignoring unreadable cache entry for {mu}: {e}");
                return None;
            }
        };
        if entry.version != CACHE_VERSION || &entry.mu != mu || entry.m != m {
            return None;
        }
        FactoredRational::from_json_value(entry.result).ok()
    }

    /// Stores a result; failures are logged and otherwise ignored.
    pub fn put(&self, mu: &Partition, m: Option<u32>, a: &FactoredRational) {
        let entry = Entry {
            version: CACHE_VERSION,
            mu: mu.clone(),
            m,
            result: a.to_json_value(),
        };
        let path = self.path(mu, m);
        let write = || -> std::io::Result<()> {
            fs::create_dir_all(&self.dir)?;
            let tmp = path.with_extension("tmp");
            let mut f = fs::File::create(&tmp)?;
            f.write_all(serde_json::to_string(&entry).expect("serialisable").as_bytes())?;
            fs::rename(tmp, &path)
        };
        if let Err(e) = write() {
            log::warn!("could not write cache entry {}: {e}", path.display());
        }
    }
}
