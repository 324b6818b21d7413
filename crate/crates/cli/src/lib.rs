//! Command implementations behind the `evenset` binary.
//!
//! Every command produces a [`Report`]; [`render::text`] and
//! [`render::json`] turn it into output. Node indices are 0-based in all
//! input and output.

pub mod args;
pub mod commands;
pub mod render;
pub mod verify;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Info => "info",
        }
    }

    /// 0 for pass/info, 1 for fail.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Fail => 1,
            Status::Pass | Status::Info => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub payload: serde_json::Value,
}

impl Report {
    pub fn new(command: &str, status: Status, payload: impl Serialize) -> anyhow::Result<Self> {
        Ok(Self {
            command: command.to_string(),
            status,
            payload: serde_json::to_value(payload)?,
        })
    }
}

pub use args::Cli;
pub use commands::run;
