//! File-backed result cache: one JSON document mapping keys to results.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
const FILE_NAME: &str = "ceresa-cache.json";

pub struct Cache {
    path: PathBuf,
}

impl Cache {
    pub fn open(dir: &Path) -> std::io::Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(Cache { path: dir.join(FILE_NAME) })
    }

    fn load(&self) -> Map<String, Value> {
        fs::read_to_string(&self.path)
            .ok()
            .and_then(|s| serde_json::from_str::<Value>(&s).ok())
            .and_then(|v| v.get("entries").and_then(Value::as_object).cloned())
            .unwrap_or_default()
    }

    /// The stored value, if it was written by this tool version.
    pub fn get(&self, key: &str) -> Option<Value> {
        let entries = self.load();
        let entry = entries.get(key)?;
        (entry.get("tool_version")? == TOOL_VERSION).then(|| entry.get("value").cloned())?
    }

    /// Writes to a temporary file in the same directory, then renames it over
    /// the cache file.
    pub fn put(&self, key: &str, value: &Value) -> std::io::Result<()> {
        let mut entries = self.load();
        entries.insert(
            key.to_string(),
            json!({ "key": key, "tool_version": TOOL_VERSION, "value": value }),
        );
        let doc = json!({ "entries": entries });
        let dir = self.path.parent().unwrap_or(Path::new("."));
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        tmp.write_all(serde_json::to_string(&doc)?.as_bytes())?;
        tmp.persist(&self.path).map_err(|e| e.error)?;
        Ok(())
    }
}
