use std::collections::BTreeMap;
use std::time::Duration;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::commands::Report;

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// One JSON line per run, written to stderr. Only `wall_time_ms` varies
/// between identical invocations.
#[derive(Serialize, Debug)]
pub struct RunManifest {
    pub command: String,
    pub parameters: serde_json::Value,
    pub inputs: BTreeMap<String, String>,
    pub outputs: BTreeMap<String, String>,
    pub exit_code: u8,
    pub wall_time_ms: f64,
    pub version: &'static str,
}

impl RunManifest {
    pub fn new(command: &str, parameters: serde_json::Value, report: &Report, elapsed: Duration, exit_code: u8) -> Self {
        let mut outputs: BTreeMap<String, String> = report.outputs.clone();
        outputs.insert("stdout".into(), sha256_hex(report.stdout.as_bytes()));
        RunManifest {
            command: command.to_string(),
            parameters,
            inputs: report.inputs.clone(),
            outputs,
            exit_code,
            wall_time_ms: elapsed.as_secs_f64() * 1e3,
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("manifest serializes")
    }
}
