use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{GrussError, Result};

/// Positive point-mass weights defining `<x, y> = Σ wᵢ xᵢ conj(yᵢ)`.
///
/// Cheap to clone; clones share the same weight buffer.
#[derive(Debug, Clone)]
pub struct SpaceMetric {
    weights: Arc<[f64]>,
}

impl SpaceMetric {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(GrussError::EmptySpace);
        }
        for (index, &value) in weights.iter().enumerate() {
            if !(value.is_finite() && value > 0.0) {
                return Err(GrussError::InvalidWeight { index, value });
            }
        }
        let total: f64 = weights.iter().sum();
        if !total.is_finite() {
            return Err(GrussError::InvalidWeight {
                index: 0,
                value: total,
            });
        }
        Ok(Self {
            weights: weights.into(),
        })
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn total_mass(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// The same space with weights rescaled to total mass 1. Returns a clone
    /// sharing storage when the mass is already exactly 1.
    pub fn normalized(&self) -> Self {
        let mass = self.total_mass();
        if mass == 1.0 {
            return self.clone();
        }
        Self {
            weights: self.weights.iter().map(|w| w / mass).collect(),
        }
    }

    /// Two metrics are compatible when they are the same buffer or carry
    /// identical weights.
    pub fn same_as(&self, other: &SpaceMetric) -> bool {
        Arc::ptr_eq(&self.weights, &other.weights) || self.weights == other.weights
    }

    pub(crate) fn ensure_same(&self, other: &SpaceMetric) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(GrussError::MetricMismatch {
                left: self.dim(),
                right: other.dim(),
            })
        }
    }
}

impl PartialEq for SpaceMetric {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Serialize for SpaceMetric {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.weights.serialize(s)
    }
}
