//! The JSON envelope shared by every report the crate emits.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    /// The weaker of two outcomes: fail beats inconclusive beats pass.
    pub fn and(self, other: Status) -> Status {
        match (self, other) {
            (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
            (Status::Inconclusive, _) | (_, Status::Inconclusive) => Status::Inconclusive,
            _ => Status::Pass,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub claim: String,
    pub parameters: Value,
    pub status: Status,
    pub data: Value,
}

impl Report {
    pub fn new(claim: impl Into<String>, parameters: Value, status: Status, data: &impl Serialize) -> Result<Self> {
        Ok(Report { schema_version: SCHEMA_VERSION, claim: claim.into(), parameters, status, data: serde_json::to_value(data)? })
    }

    /// A construction with nothing to assert.
    pub fn info(claim: impl Into<String>, parameters: Value, data: &impl Serialize) -> Result<Self> {
        Report::new(claim, parameters, Status::Pass, data)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}
