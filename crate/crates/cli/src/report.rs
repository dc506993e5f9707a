//! Versioned report document. Numbers are written in shortest round-trip
//! form, so every value equals the library value bit for bit.

use serde::Serialize;

use gruss_core::measure::EstimatedBracket;
use gruss_core::sharpness::{SharpnessResult, ViolationReport};
use gruss_core::{BoundReport, Bracket, CompanionReport};

use crate::config::Command;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub tool: &'static str,
    pub tool_version: &'static str,
    pub config: Command,
    pub certified: bool,
    pub exit_code: i32,
    pub result: RunResult,
}

impl ReportDocument {
    pub fn new(config: Command, certified: bool, exit_code: i32, result: RunResult) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            tool: "gruss",
            tool_version: env!("CARGO_PKG_VERSION"),
            config,
            certified,
            exit_code,
            result,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report is serializable");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum RunResult {
    Check(CheckResult),
    Estimate(EstimateResult),
    Fuzz(ViolationReport),
    Sharpness(SharpnessResult),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricInfo {
    pub dim: usize,
    pub total_mass: f64,
    pub weights: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BracketSource {
    Explicit,
    Estimated,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ColumnBracket {
    pub column: usize,
    pub name: Option<String>,
    pub bracket: Bracket,
    pub radius: f64,
    pub cover_slack: f64,
}

impl ColumnBracket {
    pub fn new(column: usize, name: Option<String>, est: &EstimatedBracket) -> Self {
        Self {
            column,
            name,
            bracket: est.bracket,
            radius: est.bracket.radius(),
            cover_slack: est.cover_slack,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairBracket {
    pub source: BracketSource,
    pub bracket: Bracket,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairReport {
    pub x: usize,
    pub y: usize,
    pub bracket_x: PairBracket,
    pub bracket_y: PairBracket,
    /// Covers both half-sum and half-difference columns.
    pub companion_bracket: Bracket,
    pub gruss: Option<BoundReport>,
    pub companion: Option<CompanionReport>,
    pub errors: Vec<String>,
    pub certified: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub rows: usize,
    pub metric: MetricInfo,
    pub pairs: Vec<PairReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EstimateResult {
    pub rows: usize,
    pub columns: Vec<ColumnBracket>,
}
