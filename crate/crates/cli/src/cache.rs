//! Value tables kept on disk between runs.
//!
//! Each table lives in `<dir>/<name>.prn`. A manifest next to them records
//! the size and CRC-32 of every file the cache wrote, so a truncated or
//! edited file is rebuilt instead of being trusted.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use df_core::arithfun::{gen_table, TableFn, ValueTable};
use df_core::tables::{read_table, write_table};
use df_core::{Error, Result};
use serde::{Deserialize, Serialize};

const MANIFEST: &str = "manifest.json";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct Entry {
    limit: u64,
    crc32: u32,
}

/// A directory of cached tables.
pub struct TableCache {
    dir: PathBuf,
    regen: bool,
    manifest: BTreeMap<String, Entry>,
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io { path: path.to_path_buf(), source }
}

fn crc_of(path: &Path) -> Result<u32> {
    Ok(crc32fast::hash(&fs::read(path).map_err(io_err(path))?))
}

impl TableCache {
    /// Opens `dir`, creating it if needed. With `regen` every table is
    /// rebuilt the first time it is requested.
    pub fn open(dir: impl Into<PathBuf>, regen: bool) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(io_err(&dir))?;
        let path = dir.join(MANIFEST);
        // An unreadable manifest only costs a rebuild.
        let manifest = fs::read(&path)
            .ok()
            .and_then(|bytes| serde_json::from_slice(&bytes).ok())
            .unwrap_or_default();
        Ok(TableCache { dir, regen, manifest })
    }

    fn path(&self, func: TableFn) -> PathBuf {
        self.dir.join(format!("{}.prn", func.name()))
    }

    /// A table of `func` covering at least 1..=n, read from disk when the
    /// cached file is large enough and unchanged, generated otherwise.
    pub fn get(&mut self, func: TableFn, n: u64) -> Result<ValueTable> {
        let path = self.path(func);
        if !self.regen {
            if let Some(e) = self.manifest.get(func.name()) {
                if e.limit >= n && path.exists() && crc_of(&path)? == e.crc32 {
                    let t = read_table(&path, func)?;
                    if t.len() == e.limit {
                        return Ok(t);
                    }
                }
            }
        }
        let t = gen_table(func, n)?;
        write_table(&t, &path)?;
        let entry = Entry { limit: n, crc32: crc_of(&path)? };
        self.manifest.insert(func.name().to_string(), entry);
        self.save()?;
        Ok(t)
    }

    fn save(&self) -> Result<()> {
        let path = self.dir.join(MANIFEST);
        let text = serde_json::to_string_pretty(&self.manifest).expect("manifest serializes");
        fs::write(&path, text + "\n").map_err(io_err(&path))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reuses_then_rebuilds_after_tampering() {
        let dir = tempfile::tempdir().unwrap();
        let mut c = TableCache::open(dir.path(), false).unwrap();
        let t = c.get(TableFn::Phi, 100).unwrap();
        let path = dir.path().join("phi.prn");
        let stamp = fs::metadata(&path).unwrap().modified().unwrap();

        let mut c = TableCache::open(dir.path(), false).unwrap();
        assert_eq!(c.get(TableFn::Phi, 50).unwrap(), t);
        assert_eq!(fs::metadata(&path).unwrap().modified().unwrap(), stamp);

        fs::write(&path, "1\n1\n2\n").unwrap();
        let mut c = TableCache::open(dir.path(), false).unwrap();
        assert_eq!(c.get(TableFn::Phi, 100).unwrap(), t);
        assert_eq!(read_table(&path, TableFn::Phi).unwrap().len(), 100);
    }

    #[test]
    fn grows_when_asked_for_more() {
        let dir = tempfile::tempdir().unwrap();
        let mut c = TableCache::open(dir.path(), false).unwrap();
        c.get(TableFn::Eta, 10).unwrap();
        assert_eq!(c.get(TableFn::Eta, 30).unwrap().len(), 30);
    }
}
