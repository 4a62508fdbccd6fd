//! Scan ceilings, optionally loaded from a TOML file.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::Oracle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Limits {
    /// Largest `n` for scans over all subsets of `[n]`.
    pub max_n: usize,
    /// Largest power for oracle profiles.
    pub max_k: u32,
    /// Generator-count ceiling for the oracle.
    pub max_generators: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: 12,
            max_k: 6,
            max_generators: 5_000,
        }
    }
}

impl Limits {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::parse(format!("config: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::parse(format!("config {}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    pub fn oracle(&self) -> Oracle {
        Oracle::new(self.max_generators)
    }

    pub fn check_k(&self, k: u32) -> Result<()> {
        if k > self.max_k {
            return Err(Error::LimitExceeded {
                what: "power",
                limit: self.max_k as usize,
                actual: k as usize,
            });
        }
        Ok(())
    }
}
