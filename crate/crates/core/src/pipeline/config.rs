//! Run configuration: modular-polynomial files, externally supplied group
//! generators and prime caps.
//!
//! ```json
//! {
//!   "modular_polynomials": {"49": "data/phi49.txt"},
//!   "groups": {"G3_5": {"modulus": 5, "generators": [[[2,0],[0,3]]]}},
//!   "prime_caps": {"modpoly": 25}
//! }
//! ```

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::gl2::{GroupSpec, MatrixGroup};
use crate::{Error, Result};

/// Group names the registry knows, with their required modulus.
pub const KNOWN_GROUPS: [(&str, u32); 2] = [("G3_5", 5), ("level27", 27)];
/// Prime-cap keys the registry reads.
pub const KNOWN_CAPS: [&str; 1] = ["modpoly"];

/// The document as written.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(default)]
    pub modular_polynomials: BTreeMap<String, String>,
    #[serde(default)]
    pub groups: BTreeMap<String, GroupSpec>,
    #[serde(default)]
    pub prime_caps: BTreeMap<String, usize>,
}

/// A validated configuration.
#[derive(Clone, Debug)]
pub struct Config {
    pub file: ConfigFile,
    /// Modular-polynomial files by level, resolved against the config's directory.
    pub modpoly_paths: BTreeMap<u64, PathBuf>,
    pub groups: BTreeMap<String, MatrixGroup>,
    /// Hex SHA-256 of the canonical serialization of `file`.
    pub digest: String,
}

impl Default for Config {
    fn default() -> Self {
        Config::from_file(ConfigFile::default(), Path::new(".")).expect("empty config is valid")
    }
}

fn config_err(path: impl Into<String>, msg: impl Into<String>) -> Error {
    Error::Config { path: path.into(), msg: msg.into() }
}

impl Config {
    /// Validates `file`; relative paths are taken relative to `base`.
    pub fn from_file(file: ConfigFile, base: &Path) -> Result<Self> {
        let mut modpoly_paths = BTreeMap::new();
        for (key, path) in &file.modular_polynomials {
            let at = format!("modular_polynomials.{key}");
            let level: u64 = key.parse().map_err(|_| config_err(&at, "level must be a positive integer"))?;
            if level < 2 {
                return Err(config_err(&at, "level must be at least 2"));
            }
            let p = base.join(path);
            if !p.is_file() {
                return Err(config_err(&at, format!("file {} not found", p.display())));
            }
            modpoly_paths.insert(level, p);
        }
        let mut groups = BTreeMap::new();
        for (name, spec) in &file.groups {
            let at = format!("groups.{name}");
            let Some(&(_, modulus)) = KNOWN_GROUPS.iter().find(|(n, _)| n == name) else {
                return Err(config_err(&at, "unknown group name"));
            };
            if spec.modulus != modulus {
                let e = Error::ModulusMismatch { expected: modulus, found: spec.modulus };
                return Err(config_err(format!("{at}.modulus"), e.to_string()));
            }
            if spec.generators.is_empty() {
                return Err(config_err(format!("{at}.generators"), "at least one generator is required"));
            }
            groups.insert(name.clone(), spec.realize(&at)?);
        }
        for (key, &cap) in &file.prime_caps {
            let at = format!("prime_caps.{key}");
            if !KNOWN_CAPS.contains(&key.as_str()) {
                return Err(config_err(&at, "unknown prime cap"));
            }
            if cap == 0 {
                return Err(config_err(&at, "cap must be positive"));
            }
        }
        let canonical = serde_json::to_string(&file)?;
        let digest = hex::encode(Sha256::digest(canonical.as_bytes()));
        Ok(Config { file, modpoly_paths, groups, digest })
    }

    pub fn parse(text: &str, base: &Path, origin: &str) -> Result<Self> {
        let file: ConfigFile =
            serde_json::from_str(text).map_err(|e| config_err(origin, format!("line {} column {}: {e}", e.line(), e.column())))?;
        Config::from_file(file, base)
    }

    pub fn group(&self, name: &str) -> Option<&MatrixGroup> {
        self.groups.get(name)
    }

    pub fn prime_cap(&self, key: &str) -> Option<usize> {
        self.file.prime_caps.get(key).copied()
    }
}

/// Reads and validates a configuration file.
pub fn load_config(path: &Path) -> Result<Config> {
    let text = std::fs::read_to_string(path).map_err(|e| config_err(path.display().to_string(), e.to_string()))?;
    let base = path.parent().unwrap_or(Path::new("."));
    Config::parse(&text, base, &path.display().to_string())
}
