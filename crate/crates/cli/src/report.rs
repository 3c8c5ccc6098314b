//! The report printed by every command, as `key: value` lines or JSON.

use std::time::Duration;

use serde::Serialize;
use sha2::{Digest, Sha256};
use wsc_core::graph::Graph;
use wsc_core::verdict::Verdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Holds,
    Fails,
    Inconclusive,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Holds => 0,
            Status::Fails => 1,
            Status::Inconclusive => 2,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub input: String,
    pub input_sha256: String,
    pub verdicts: Vec<Vec<(String, String)>>,
    pub results: Vec<(String, String)>,
    pub status: String,
    /// Why the run stopped without a verdict.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inconclusive: Option<String>,
    pub budget_used: u64,
    pub budget_limit: u64,
    pub seed: u64,
    pub threads: usize,
    pub wall_time_ms: u128,
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Collects verdicts and results while a command runs.
#[derive(Debug, Default)]
pub struct Outcome {
    pub verdicts: Vec<Vec<(String, String)>>,
    pub results: Vec<(String, String)>,
    failed: bool,
    pub inconclusive: Option<String>,
}

impl Outcome {
    pub fn verdict(&mut self, v: &Verdict, g: &Graph) {
        self.failed |= !v.holds;
        self.verdicts.push(v.fields(g));
    }

    pub fn result(&mut self, key: &str, value: impl ToString) {
        self.results.push((key.to_string(), value.to_string()));
    }

    pub fn status(&self) -> Status {
        if self.inconclusive.is_some() {
            Status::Inconclusive
        } else if self.failed {
            Status::Fails
        } else {
            Status::Holds
        }
    }
}

pub struct RunInfo {
    pub command: String,
    pub input: String,
    pub input_sha256: String,
    pub budget_used: u64,
    pub budget_limit: u64,
    pub seed: u64,
    pub threads: usize,
    pub wall_time: Duration,
}

impl Report {
    pub fn new(outcome: Outcome, info: RunInfo) -> Self {
        let status = outcome.status();
        Report {
            tool: "wsc".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: info.command,
            input: info.input,
            input_sha256: info.input_sha256,
            verdicts: outcome.verdicts,
            results: outcome.results,
            status: status.as_str().into(),
            inconclusive: outcome.inconclusive,
            budget_used: info.budget_used,
            budget_limit: info.budget_limit,
            seed: info.seed,
            threads: info.threads,
            wall_time_ms: info.wall_time.as_millis(),
        }
    }

    /// One `key: value` per line; verdict keys are prefixed `verdict.<i>.`, results `result.`.
    pub fn to_text(&self) -> String {
        let mut lines = vec![
            format!("tool: {} {}", self.tool, self.version),
            format!("command: {}", self.command),
            format!("input: {}", self.input),
            format!("input.sha256: {}", self.input_sha256),
        ];
        for (i, v) in self.verdicts.iter().enumerate() {
            lines.extend(v.iter().map(|(k, val)| format!("verdict.{i}.{k}: {val}")));
        }
        lines.extend(self.results.iter().map(|(k, v)| format!("result.{k}: {v}")));
        lines.push(format!("status: {}", self.status));
        if let Some(why) = &self.inconclusive {
            lines.push(format!("inconclusive: {why}"));
        }
        lines.push(format!("budget.used: {}", self.budget_used));
        lines.push(format!("budget.limit: {}", self.budget_limit));
        lines.push(format!("seed: {}", self.seed));
        lines.push(format!("threads: {}", self.threads));
        lines.push(format!("wall_time_ms: {}", self.wall_time_ms));
        lines.join("\n") + "\n"
    }

    pub fn to_json(&self) -> String {
        let pairs = |ps: &[(String, String)]| {
            serde_json::Value::Object(
                ps.iter()
                    .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
                    .collect(),
            )
        };
        let mut value = serde_json::to_value(self).expect("report serializes");
        value["verdicts"] = self.verdicts.iter().map(|v| pairs(v)).collect();
        value["results"] = pairs(&self.results);
        serde_json::to_string_pretty(&value).expect("report serializes") + "\n"
    }
}
