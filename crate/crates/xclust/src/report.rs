//! Machine-readable run reports.

use serde::Serialize;
use serde_json::{Map, Value};

/// One command's result. Every field except `wall_time_ms` is a pure
/// function of the inputs.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub args: Vec<String>,
    pub n: Option<usize>,
    pub d: Option<usize>,
    pub k: Option<usize>,
    pub objective: Option<String>,
    pub cost: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tree: Option<Value>,
    #[serde(skip_serializing_if = "Map::is_empty")]
    pub details: Map<String, Value>,
    pub wall_time_ms: f64,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            args: Vec::new(),
            n: None,
            d: None,
            k: None,
            objective: None,
            cost: None,
            tree: None,
            details: Map::new(),
            wall_time_ms: 0.0,
        }
    }

    pub fn detail(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.details.insert(key.to_string(), value.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
