//! Persistent result cache for `solve` and `scan`.
//!
//! Records live in a single directory as JSON files keyed by a hash of
//! (command, canonical parameters, tool version). Writes are atomic
//! (write-then-rename), so a crashed run never leaves a torn record.

use std::fs;
use std::io;
use std::path::PathBuf;

use sha2::{Digest, Sha256};

use crate::record::TOOL_VERSION;

pub struct Cache {
    dir: PathBuf,
    enabled: bool,
}

impl Cache {
    pub fn new(dir_flag: Option<PathBuf>, enabled: bool) -> Self {
        let dir = dir_flag.unwrap_or_else(default_dir);
        Self { dir, enabled }
    }

    /// Hash of the canonical parameter tuple. `parameters` serializes with
    /// sorted keys, so equal parameter sets map to equal keys.
    pub fn key(command: &str, parameters: &serde_json::Value) -> String {
        let canonical = serde_json::to_string(parameters).expect("parameters serialize");
        let mut hasher = Sha256::new();
        hasher.update(command.as_bytes());
        hasher.update([0]);
        hasher.update(canonical.as_bytes());
        hasher.update([0]);
        hasher.update(TOOL_VERSION.as_bytes());
        let digest = hasher.finalize();
        digest.iter().take(16).map(|b| format!("{b:02x}")).collect()
    }

    pub fn path_for(&self, command: &str, key: &str) -> PathBuf {
        self.dir.join(format!("{command}-{key}.json"))
    }

    pub fn load(&self, command: &str, key: &str) -> Option<Vec<u8>> {
        if !self.enabled {
            return None;
        }
        fs::read(self.path_for(command, key)).ok()
    }

    pub fn store(&self, command: &str, key: &str, bytes: &[u8]) -> io::Result<PathBuf> {
        if !self.enabled {
            return Err(io::Error::other("cache disabled"));
        }
        fs::create_dir_all(&self.dir)?;
        let target = self.path_for(command, key);
        let tmp = target.with_extension("json.tmp");
        fs::write(&tmp, bytes)?;
        fs::rename(&tmp, &target)?;
        Ok(target)
    }
}

fn default_dir() -> PathBuf {
    if let Ok(xdg) = std::env::var("XDG_CACHE_HOME") {
        if !xdg.is_empty() {
            return PathBuf::from(xdg).join("lintersect");
        }
    }
    if let Ok(home) = std::env::var("HOME") {
        if !home.is_empty() {
            return PathBuf::from(home).join(".cache").join("lintersect");
        }
    }
    PathBuf::from(".lintersect-cache")
}
