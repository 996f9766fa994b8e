use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct InstanceStats {
    pub n: usize,
    pub m: usize,
}

/// Vertex ids are 1-based, matching the graph file format.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Outcome {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub opt: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub feasible: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel_n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel_m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rounds: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rows: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: u32,
    pub command: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<InstanceStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub outcome: Outcome,
    pub timings_ms: BTreeMap<String, f64>,
    pub exit: i32,
}

impl RunReport {
    pub fn new(command: Vec<String>) -> Self {
        RunReport {
            schema: SCHEMA,
            command,
            instance: None,
            family: None,
            outcome: Outcome::default(),
            timings_ms: BTreeMap::new(),
            exit: 0,
        }
    }
}

/// Phase timer; records nothing when timing is disabled.
pub struct Timer {
    enabled: bool,
}

impl Timer {
    pub fn new(enabled: bool) -> Self {
        Timer { enabled }
    }

    pub fn time<T>(&self, report: &mut RunReport, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.enabled {
            let ms = start.elapsed().as_secs_f64() * 1e3;
            *report.timings_ms.entry(phase.to_string()).or_insert(0.0) += ms;
        }
        out
    }
}
