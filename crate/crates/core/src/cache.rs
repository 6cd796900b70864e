//! Optional on-disk cache for expensive tables.
//!
//! Nothing is written unless a directory has been configured with
//! [`set_cache_dir`]. Files are written to a temporary file in the same
//! directory and renamed into place, so concurrent readers only ever see
//! complete files. Unreadable or corrupt entries are treated as misses.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::RwLock;

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::Result;

static CACHE_DIR: RwLock<Option<PathBuf>> = RwLock::new(None);

/// Sets (or with `None`, clears) the process-wide cache directory.
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *CACHE_DIR.write().unwrap_or_else(|e| e.into_inner()) = dir;
}

pub fn cache_dir() -> Option<PathBuf> {
    CACHE_DIR.read().unwrap_or_else(|e| e.into_inner()).clone()
}

/// Reads `name` from the cache directory, if configured and present.
pub fn load<T: DeserializeOwned>(name: &str) -> Option<T> {
    let dir = cache_dir()?;
    let bytes = fs::read(dir.join(name)).ok()?;
    serde_json::from_slice(&bytes).ok()
}

/// Writes `value` as `name` in the cache directory, if one is configured.
pub fn store<T: Serialize>(name: &str, value: &T) -> Result<()> {
    match cache_dir() {
        Some(dir) => write_atomic(&dir, name, value),
        None => Ok(()),
    }
}

pub fn write_atomic<T: Serialize>(dir: &Path, name: &str, value: &T) -> Result<()> {
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    serde_json::to_writer(&mut tmp, value)?;
    tmp.flush()?;
    tmp.persist(dir.join(name)).map_err(|e| e.error)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atomic_write_then_read() {
        let dir = tempfile::tempdir().unwrap();
        write_atomic(dir.path(), "x.json", &vec![1, 2, 3]).unwrap();
        let bytes = fs::read(dir.path().join("x.json")).unwrap();
        let back: Vec<i32> = serde_json::from_slice(&bytes).unwrap();
        assert_eq!(back, vec![1, 2, 3]);
        // overwriting keeps a single complete file
        write_atomic(dir.path(), "x.json", &vec![4]).unwrap();
        let entries = fs::read_dir(dir.path()).unwrap().count();
        assert_eq!(entries, 1);
    }
}
