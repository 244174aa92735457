//! Machine-readable reports.
//!
//! Field order is fixed by the struct definitions, so two runs on the same
//! input serialize identically apart from `timings`.

use std::time::Duration;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::format::ComplexFile;

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: CommandEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputInfo>,
    pub result: Value,
    pub timings: Timings,
}

/// The subcommand and the options that affect its result.
#[derive(Clone, Debug, Serialize)]
pub struct CommandEcho {
    pub subcommand: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    pub options: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct InputInfo {
    /// Hex SHA-256 of the input bytes.
    pub sha256: String,
    pub vertices: usize,
    pub facets: usize,
    pub f_vector: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl InputInfo {
    pub fn new(bytes: &[u8], file: &ComplexFile) -> Self {
        InputInfo {
            sha256: format!("{:x}", Sha256::digest(bytes)),
            vertices: file.complex.num_vertices(),
            facets: file.complex.facets().len(),
            f_vector: file.complex.f_vector(),
            names: file.names.clone(),
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Timings {
    pub parse_ms: f64,
    pub compute_ms: f64,
}

pub fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// The report with `timings` zeroed, for comparisons.
    pub fn without_timings(&self) -> Self {
        Report {
            timings: Timings::default(),
            ..self.clone()
        }
    }
}
