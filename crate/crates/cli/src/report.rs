use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

/// Machine-readable record of one invocation.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub subcommand: &'static str,
    pub parameters: Value,
    pub results: Value,
    pub elapsed: f64,
    pub version: &'static str,
}

impl RunReport {
    pub fn new(
        subcommand: &'static str,
        parameters: impl Serialize,
        results: Value,
        started: Instant,
    ) -> Self {
        Self {
            subcommand,
            parameters: serde_json::to_value(parameters).expect("parameters serialize"),
            results,
            elapsed: started.elapsed().as_secs_f64(),
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
