//! Flat `key = value` run configuration.
//!
//! Files hold one assignment per line; `#` starts a comment. Overrides from
//! the command line (`--set key=value`) replace or append entries. The
//! resolved configuration serializes back to the same format so every run
//! can log exactly what it used.

use std::collections::BTreeMap;
use std::path::Path;

use super::IoError;

#[derive(Debug, Clone, Default)]
pub struct Config {
    entries: BTreeMap<String, String>,
}

impl Config {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self, IoError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn parse(text: &str) -> Result<Self, IoError> {
        let mut entries = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(IoError::BadConfigLine { line: i + 1, text: raw.into() });
            };
            entries.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(Self { entries })
    }

    /// Applies a `key=value` override.
    pub fn set(&mut self, assignment: &str) -> Result<(), IoError> {
        let Some((k, v)) = assignment.split_once('=') else {
            return Err(IoError::BadConfigLine { line: 0, text: assignment.into() });
        };
        self.entries.insert(k.trim().to_string(), v.trim().to_string());
        Ok(())
    }

    pub fn set_kv(&mut self, key: &str, value: impl ToString) {
        self.entries.insert(key.to_string(), value.to_string());
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(|s| s.as_str())
    }

    pub fn get_or<'a>(&'a self, key: &str, default: &'a str) -> &'a str {
        self.get(key).unwrap_or(default)
    }

    pub fn get_parsed<T: std::str::FromStr>(&self, key: &str, default: T) -> Result<T, IoError> {
        match self.get(key) {
            None => Ok(default),
            Some(s) => s.parse().map_err(|_| IoError::BadConfigValue {
                key: key.into(),
                msg: format!("cannot parse `{s}`"),
            }),
        }
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(|s| s.as_str())
    }

    /// The resolved configuration, one `key = value` per line, sorted keys.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            out.push_str(k);
            out.push_str(" = ");
            out.push_str(v);
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_set_and_serialize() {
        let mut cfg = Config::parse("seed = 3\n# comment\nsteps = 100 # trailing\n").unwrap();
        assert_eq!(cfg.get("seed"), Some("3"));
        assert_eq!(cfg.get_parsed("steps", 0usize).unwrap(), 100);
        cfg.set("lr=0.0001").unwrap();
        cfg.set("steps=200").unwrap();
        assert_eq!(cfg.to_text(), "lr = 0.0001\nseed = 3\nsteps = 200\n");
        assert_eq!(cfg.get_parsed("missing", 7u32).unwrap(), 7);
    }

    #[test]
    fn rejects_bad_lines_and_values() {
        assert!(Config::parse("this is not an assignment\n").is_err());
        let cfg = Config::parse("x = abc\n").unwrap();
        assert!(cfg.get_parsed::<f64>("x", 0.0).is_err());
    }
}
