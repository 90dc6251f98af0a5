//! Deterministic JSON run reports.
//!
//! Reports serialize through `serde_json::Value`, whose map type keeps keys
//! sorted, so identical inputs, seeds and budgets produce byte-identical
//! output. Wall-clock timing destroys that, so `timing_ms` stays null
//! unless the caller passed `--timing`.

use std::time::Instant;

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use oramsey_core::finders::SearchStats;

pub struct Report {
    fields: Map<String, Value>,
    started: Instant,
    timing: bool,
}

/// Exit status carried by the report: 0 definitive, 2 indeterminate.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Definitive,
    Indeterminate,
}

impl Report {
    pub fn new(command: &str, seed: u64, timing: bool) -> Self {
        let mut fields = Map::new();
        fields.insert("command".into(), json!(command));
        fields.insert("inputs".into(), json!({}));
        fields.insert("seed".into(), json!(seed));
        Report {
            fields,
            started: Instant::now(),
            timing,
        }
    }

    pub fn input(&mut self, name: &str, path: &str, contents: &str) {
        let digest = Sha256::digest(contents.as_bytes());
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        self.fields
            .get_mut("inputs")
            .and_then(Value::as_object_mut)
            .expect("inputs is an object")
            .insert(name.into(), json!({ "path": path, "sha256": hex }));
    }

    pub fn set(&mut self, key: &str, value: Value) {
        self.fields.insert(key.into(), value);
    }

    pub fn outcome(&mut self, outcome: &str) {
        self.set("outcome", json!(outcome));
    }

    pub fn stats(&mut self, stats: &SearchStats) {
        self.set(
            "stats",
            json!({ "nodes": stats.nodes, "prunes": stats.prunes }),
        );
    }

    /// Prints the report to stdout and returns the process exit code.
    pub fn finish(mut self, verdict: Verdict) -> i32 {
        let timing = if self.timing {
            json!(self.started.elapsed().as_millis() as u64)
        } else {
            Value::Null
        };
        self.fields.insert("timing_ms".into(), timing);
        println!(
            "{}",
            serde_json::to_string_pretty(&Value::Object(self.fields)).expect("serializable")
        );
        match verdict {
            Verdict::Definitive => 0,
            Verdict::Indeterminate => 2,
        }
    }
}

/// Serializes any `Serialize` value into a sorted-keys JSON value.
pub fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}
