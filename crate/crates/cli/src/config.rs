//! Flat key=value config files. Flags always win over file entries;
//! unknown keys are rejected so typos fail loudly.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::Failure;

const KNOWN_KEYS: &[&str] = &[
    "input",
    "budget",
    "d",
    "delta",
    "grid",
    "precision-cap",
    "jobs",
    "report",
    "format",
    "force",
    "assume-hypotheses",
    "omega-override",
    "x",
];

pub struct ConfigFile {
    entries: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn empty() -> ConfigFile {
        ConfigFile {
            entries: BTreeMap::new(),
        }
    }

    /// Parse `key = value` lines; `#` starts a comment, blanks ignored.
    pub fn load(path: &Path) -> Result<ConfigFile, String> {
        let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
        let mut entries = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key=value", idx + 1))?;
            let key = key.trim().to_string();
            if !KNOWN_KEYS.contains(&key.as_str()) {
                return Err(format!("line {}: unknown key {key:?}", idx + 1));
            }
            entries.insert(key, value.trim().to_string());
        }
        Ok(ConfigFile { entries })
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn get_path(&self, key: &str) -> Option<PathBuf> {
        self.get(key).map(PathBuf::from)
    }

    fn parse<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>, Failure> {
        self.get(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| Failure::param(format!("config {key}: bad value {v:?}")))
            })
            .transpose()
    }

    pub fn get_u64(&self, key: &str) -> Result<Option<u64>, Failure> {
        self.parse(key)
    }

    pub fn get_u32(&self, key: &str) -> Result<Option<u32>, Failure> {
        self.parse(key)
    }

    pub fn get_usize(&self, key: &str) -> Result<Option<usize>, Failure> {
        self.parse(key)
    }

    pub fn get_bool(&self, key: &str) -> Result<bool, Failure> {
        Ok(self.parse(key)?.unwrap_or(false))
    }
}
