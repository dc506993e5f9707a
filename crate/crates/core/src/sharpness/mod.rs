//! Numerical witnesses for the sharpness of the ¼ constants, admissible-input
//! generators and a seeded fuzzing suite over every certified inequality.

mod fuzz;
mod sampler;
mod search;
mod witness;

use serde::{Deserialize, Serialize};

use crate::error::{GrussError, Result};
use crate::scalar::Field;

pub use fuzz::{fuzz_all, CheckStat, ViolationReport, CHECK_NAMES};
pub use sampler::{
    random_bracket, random_direction, random_metric, random_scalar, sample_admissible,
    sample_on_boundary,
};
pub use search::{sharpness_search, SearchKind, SharpnessResult};
pub use witness::{equality_witness, equality_witness_in, Witness, WitnessKind};

pub const DEFAULT_DIMS: [usize; 5] = [1, 2, 4, 8, 16];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzConfig {
    pub seed: u64,
    pub dims: Vec<usize>,
    pub field: Field,
    pub samples: usize,
    /// Relative tolerance for inequalities; identities always use `1e-12`.
    pub tolerance: f64,
}

impl FuzzConfig {
    pub fn new(
        seed: u64,
        dims: Vec<usize>,
        field: Field,
        samples: usize,
        tolerance: f64,
    ) -> Result<Self> {
        let cfg = Self {
            seed,
            dims,
            field,
            samples,
            tolerance,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.dims.is_empty() || self.dims.contains(&0) {
            return Err(GrussError::InvalidConfig(
                "dims must be a non-empty set of positive integers".into(),
            ));
        }
        if !(self.tolerance.is_finite() && self.tolerance >= 0.0) {
            return Err(GrussError::InvalidConfig(format!(
                "tolerance must be finite and non-negative, got {}",
                self.tolerance
            )));
        }
        Ok(())
    }
}

impl Default for FuzzConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            dims: DEFAULT_DIMS.to_vec(),
            field: Field::Real,
            samples: 10_000,
            tolerance: crate::tolerance::INEQUALITY_RTOL,
        }
    }
}
