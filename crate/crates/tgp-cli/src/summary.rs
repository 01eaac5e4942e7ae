//! Experiment summary schema (`summary.json`).

use serde::{Deserialize, Serialize};

/// One experiment: configuration echo, per-run statistics and aggregates.
///
/// MOO runs fill `final_cm`/`final_dm`/`front_size`; classic runs fill
/// `final_q`. Field order is fixed, so serialization is byte-stable.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Summary {
    pub problem: String,
    pub variant: String,
    pub config: ConfigEcho,
    pub runs: Vec<RunStats>,
    pub aggregate: Aggregate,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub pop_size: usize,
    pub generations: usize,
    pub p_insert: f64,
    pub tournament_size: usize,
    pub function_set: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub archive_capacity: Option<usize>,
    pub runs: usize,
    pub metric_stride: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunStats {
    pub run: usize,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub final_cm: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub final_dm: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub final_q: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub front_size: Option<usize>,
    pub evaluations: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Aggregate {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mean_cm: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mean_dm: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mean_q: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mean_front_size: Option<f64>,
}

impl Summary {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("summary serializes");
        s.push('\n');
        s
    }
}
