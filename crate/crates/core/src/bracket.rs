use serde::{Deserialize, Serialize};

use crate::error::{GrussError, Result};
use crate::scalar::{check_finite, real, Scalar};

/// Endpoint pair `(lo, hi)` describing the closed disk of centre
/// `(lo + hi) / 2` and radius `|hi - lo| / 2`.
///
/// No ordering of the endpoints is assumed; swapping them describes the same
/// disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bracket {
    lo: Scalar,
    hi: Scalar,
}

impl Bracket {
    pub fn new(lo: Scalar, hi: Scalar) -> Result<Self> {
        check_finite(&[lo, hi])?;
        Ok(Self { lo, hi })
    }

    pub fn real(lo: f64, hi: f64) -> Result<Self> {
        Self::new(real(lo), real(hi))
    }

    /// Bracket whose disk has the given centre and radius, with the diameter
    /// laid along the real axis.
    pub fn from_disk(center: Scalar, radius: f64) -> Result<Self> {
        if !(radius.is_finite() && radius >= 0.0) {
            return Err(GrussError::NonFinite { index: 1 });
        }
        Self::new(center - radius, center + radius)
    }

    pub fn lo(&self) -> Scalar {
        self.lo
    }

    pub fn hi(&self) -> Scalar {
        self.hi
    }

    pub fn mid(&self) -> Scalar {
        (self.lo + self.hi) * 0.5
    }

    pub fn radius(&self) -> f64 {
        (self.hi - self.lo).norm() * 0.5
    }

    /// `|hi - lo|`, the factor appearing in the Grüss constants.
    pub fn width(&self) -> f64 {
        (self.hi - self.lo).norm()
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn swapped(&self) -> Self {
        Self {
            lo: self.hi,
            hi: self.lo,
        }
    }

    pub fn scaled(&self, alpha: Scalar) -> Self {
        Self {
            lo: alpha * self.lo,
            hi: alpha * self.hi,
        }
    }
}

impl std::fmt::Display for Bracket {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}
