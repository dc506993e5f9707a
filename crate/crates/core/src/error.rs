use thiserror::Error;

use crate::condition::ConditionReport;

/// Which argument of a two-vector evaluation failed its bracket condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Operand {
    X,
    Y,
    /// `(x + y) / 2` in the companion inequality.
    HalfSum,
    /// `(x - y) / 2` in the companion inequality.
    HalfDifference,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GrussError {
    #[error("vectors live in different metrics (dimensions {left} and {right})")]
    MetricMismatch { left: usize, right: usize },

    #[error("reference vector must have unit norm, got {norm}")]
    NotUnitVector { norm: f64 },

    #[error("bracket condition violated for {operand:?}: quad_value = {}", report.quad_value)]
    ConditionViolated {
        operand: Operand,
        report: Box<ConditionReport>,
    },

    #[error(
        "dual precondition violated: <x,e> lies strictly inside the bracket disk (value {value})"
    )]
    DualPreconditionViolated { value: f64 },

    #[error("internal identity violated: radicand {radicand} is negative beyond tolerance")]
    InternalIdentityViolated { radicand: f64 },

    #[error("space must have at least one point")]
    EmptySpace,

    #[error("invalid quadrature rule: {0}")]
    BadRule(String),

    #[error("zero vector cannot be normalized")]
    ZeroVector,

    #[error("non-finite value at coordinate {index}")]
    NonFinite { index: usize },

    #[error("weight {index} must be positive and finite, got {value}")]
    InvalidWeight { index: usize, value: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("real field requested but coordinate {index} has imaginary part {imag}")]
    ImaginaryPart { index: usize, imag: f64 },
}

pub type Result<T> = std::result::Result<T, GrussError>;
