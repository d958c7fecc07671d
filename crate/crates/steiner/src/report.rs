//! The single JSON object printed under `--json`.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    /// `HOLDS`, `FAILS`, `SATISFIES`, `DISAGREE`, `ERROR`, or null.
    pub verdict: Option<String>,
    pub counterexample: Option<serde_json::Value>,
    pub count: Option<u64>,
    pub items: Vec<String>,
    /// Null under `--no-timing`.
    pub elapsed_ms: Option<u64>,
}
