//! Optional TOML configuration.
//!
//! Looked up at the path given explicitly, else at `$KBONACCI_CONFIG`, else
//! at `./kbonacci.toml`; a missing default file means built-in defaults.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::construct::DEFAULT_LENGTH_CAP;
use crate::error::{Error, Result};
use crate::oracle::DEFAULT_ORACLE_GUARD;

pub const CONFIG_ENV: &str = "KBONACCI_CONFIG";
pub const DEFAULT_CONFIG_FILE: &str = "kbonacci.toml";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    /// Refuse to build words longer than this many symbols.
    pub length_cap: u64,
    /// Largest input accepted by the maximal-index oracle.
    pub oracle_guard: usize,
    /// Seed for randomized cross-checks.
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            length_cap: DEFAULT_LENGTH_CAP,
            oracle_guard: DEFAULT_ORACLE_GUARD,
            seed: 0x6b62_6f6e,
        }
    }
}

impl Config {
    pub fn from_toml(s: &str) -> Result<Config> {
        toml::from_str(s).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(explicit: Option<&Path>) -> Result<Config> {
        let (path, required): (PathBuf, bool) = match explicit {
            Some(p) => (p.to_path_buf(), true),
            None => match std::env::var_os(CONFIG_ENV) {
                Some(p) => (PathBuf::from(p), true),
                None => (PathBuf::from(DEFAULT_CONFIG_FILE), false),
            },
        };
        match std::fs::read_to_string(&path) {
            Ok(text) => Config::from_toml(&text),
            Err(e) if !required && e.kind() == std::io::ErrorKind::NotFound => {
                Ok(Config::default())
            }
            Err(e) => Err(Error::Config(format!("{}: {e}", path.display()))),
        }
    }
}
