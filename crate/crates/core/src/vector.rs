use serde::{Serialize, Serializer};

use crate::error::{GrussError, Result};
use crate::metric::SpaceMetric;
use crate::scalar::{check_finite, real, Scalar};
use crate::tolerance::UNIT_NORM_TOL;

/// A finite coordinate array interpreted in a [`SpaceMetric`].
#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    coords: Vec<Scalar>,
    metric: SpaceMetric,
}

impl Vector {
    pub fn new(metric: &SpaceMetric, coords: Vec<Scalar>) -> Result<Self> {
        if coords.len() != metric.dim() {
            return Err(GrussError::MetricMismatch {
                left: coords.len(),
                right: metric.dim(),
            });
        }
        check_finite(&coords)?;
        Ok(Self {
            coords,
            metric: metric.clone(),
        })
    }

    pub fn from_real(metric: &SpaceMetric, coords: &[f64]) -> Result<Self> {
        Self::new(metric, coords.iter().copied().map(real).collect())
    }

    pub fn zeros(metric: &SpaceMetric) -> Self {
        Self::constant(metric, Scalar::new(0.0, 0.0))
    }

    pub fn constant(metric: &SpaceMetric, value: Scalar) -> Self {
        Self {
            coords: vec![value; metric.dim()],
            metric: metric.clone(),
        }
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn metric(&self) -> &SpaceMetric {
        &self.metric
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// `Σ wᵢ xᵢ conj(yᵢ)`.
    pub fn inner(&self, other: &Vector) -> Result<Scalar> {
        self.metric.ensure_same(&other.metric)?;
        Ok(self.inner_unchecked(other))
    }

    pub(crate) fn inner_unchecked(&self, other: &Vector) -> Scalar {
        self.metric
            .weights()
            .iter()
            .zip(self.coords.iter().zip(&other.coords))
            .map(|(w, (a, b))| *w * a * b.conj())
            .sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.metric
            .weights()
            .iter()
            .zip(&self.coords)
            .map(|(w, a)| w * a.norm_sqr())
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Copy of `self` with coordinate `index` replaced.
    pub fn with_coord(&self, index: usize, value: Scalar) -> Vector {
        let mut out = self.clone();
        out.coords[index] = value;
        out
    }

    pub fn scaled(&self, alpha: Scalar) -> Vector {
        self.map(|c| alpha * c)
    }

    /// `self + alpha * other`.
    pub fn axpy(&self, alpha: Scalar, other: &Vector) -> Result<Vector> {
        self.metric.ensure_same(&other.metric)?;
        Ok(self.zip_with(other, |a, b| a + alpha * b))
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        self.metric.ensure_same(&other.metric)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        self.metric.ensure_same(&other.metric)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    /// `(self + other) / 2` or `(self - other) / 2`.
    pub fn half_sum(&self, other: &Vector) -> Result<Vector> {
        self.metric.ensure_same(&other.metric)?;
        Ok(self.zip_with(other, |a, b| (a + b) * 0.5))
    }

    pub fn half_difference(&self, other: &Vector) -> Result<Vector> {
        self.metric.ensure_same(&other.metric)?;
        Ok(self.zip_with(other, |a, b| (a - b) * 0.5))
    }

    /// `self / ‖self‖`.
    pub fn normalized(&self) -> Result<Vector> {
        let n = self.norm();
        if n == 0.0 {
            return Err(GrussError::ZeroVector);
        }
        Ok(self.map(|c| c / n))
    }

    /// Fails with [`GrussError::NotUnitVector`] unless `|‖self‖ - 1| <= 1e-9`.
    pub fn ensure_unit(&self) -> Result<()> {
        let norm = self.norm();
        if (norm - 1.0).abs() <= UNIT_NORM_TOL {
            Ok(())
        } else {
            Err(GrussError::NotUnitVector { norm })
        }
    }

    fn map(&self, f: impl Fn(Scalar) -> Scalar) -> Vector {
        Vector {
            coords: self.coords.iter().map(|&c| f(c)).collect(),
            metric: self.metric.clone(),
        }
    }

    fn zip_with(&self, other: &Vector, f: impl Fn(Scalar, Scalar) -> Scalar) -> Vector {
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| f(a, b))
                .collect(),
            metric: self.metric.clone(),
        }
    }
}

impl Serialize for Vector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(s)
    }
}

/// How evaluators treat a reference vector that is not exactly unit-norm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum UnitPolicy {
    /// Accept only `|‖e‖ - 1| <= 1e-9`.
    #[default]
    Require,
    /// Divide `e` by its norm first.
    Normalize,
}

impl UnitPolicy {
    pub fn apply(self, e: &Vector) -> Result<Vector> {
        match self {
            UnitPolicy::Require => e.ensure_unit().map(|()| e.clone()),
            UnitPolicy::Normalize => e.normalized(),
        }
    }
}
