//! Run manifests embedded in every persisted report: command, arguments,
//! seed, budget, tool version, input/output digests and wall time.

use serde::{Deserialize, Serialize};
use std::time::Instant;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub arguments: Vec<String>,
    pub seed: u64,
    pub budget_secs: u64,
    pub tool_version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_digest: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output_digest: Option<String>,
    pub wall_ms: u64,
}

impl RunManifest {
    pub fn new(command: &str, arguments: Vec<String>, seed: u64, budget_secs: u64) -> Self {
        RunManifest {
            command: command.to_string(),
            arguments,
            seed,
            budget_secs,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            input_digest: None,
            output_digest: None,
            wall_ms: 0,
        }
    }

    pub fn finish(&mut self, started: Instant) {
        self.wall_ms = started.elapsed().as_millis() as u64;
    }
}

/// FNV-1a content digest, hex encoded. Stable across runs and platforms.
pub fn digest(bytes: &[u8]) -> String {
    let mut hash: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    format!("{hash:016x}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_is_stable() {
        assert_eq!(digest(b"abc"), digest(b"abc"));
        assert_ne!(digest(b"abc"), digest(b"abd"));
        assert_eq!(digest(b""), "cbf29ce484222325");
    }
}
