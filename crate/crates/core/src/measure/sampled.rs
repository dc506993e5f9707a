use serde::Serialize;

use crate::bracket::Bracket;
use crate::error::{GrussError, Result};
use crate::metric::SpaceMetric;
use crate::scalar::{check_finite, real, Scalar};
use crate::vector::Vector;

/// Values of a function at the points of a measure.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct SampledFunction {
    values: Vec<Scalar>,
}

impl SampledFunction {
    pub fn new(values: Vec<Scalar>) -> Result<Self> {
        check_finite(&values)?;
        Ok(Self { values })
    }

    pub fn from_real(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().copied().map(real).collect())
    }

    pub fn constant(len: usize, value: Scalar) -> Self {
        Self {
            values: vec![value; len],
        }
    }

    /// Samples `f` at `nodes`.
    pub fn sample(nodes: &[f64], f: impl Fn(f64) -> Scalar) -> Result<Self> {
        Self::new(nodes.iter().map(|&s| f(s)).collect())
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn to_vector(&self, metric: &SpaceMetric) -> Result<Vector> {
        Vector::new(metric, self.values.clone())
    }

    pub fn zip_with(&self, other: &Self, f: impl Fn(Scalar, Scalar) -> Scalar) -> Result<Self> {
        if self.len() != other.len() {
            return Err(GrussError::MetricMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Self {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }
}

/// Rescales `h` to unit `L²(metric)` norm. Functions already of unit norm up
/// to rounding are returned unchanged.
pub fn normalize_unit(h: &SampledFunction, metric: &SpaceMetric) -> Result<SampledFunction> {
    let v = h.to_vector(metric)?;
    let norm_sqr = v.norm_sqr();
    if norm_sqr == 0.0 {
        return Err(GrussError::ZeroVector);
    }
    if (norm_sqr - 1.0).abs() <= 1e-15 {
        return Ok(h.clone());
    }
    let norm = norm_sqr.sqrt();
    Ok(SampledFunction {
        values: h.values.iter().map(|&c| c / norm).collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PointwiseCheck {
    pub holds: bool,
    /// Index of the largest excess when the check fails.
    pub worst_index: Option<usize>,
    /// `max_s |f(s) - mid·h(s)| - radius·|h(s)|`.
    pub worst_excess: f64,
}

/// Pointwise sufficient condition `|f(s) - mid·h(s)| <= radius·|h(s)|` at
/// every point, within `tol`.
pub fn pointwise_condition(
    f: &SampledFunction,
    h: &SampledFunction,
    br: &Bracket,
    tol: f64,
) -> Result<PointwiseCheck> {
    if f.len() != h.len() {
        return Err(GrussError::MetricMismatch {
            left: f.len(),
            right: h.len(),
        });
    }
    let (mid, radius) = (br.mid(), br.radius());
    let (index, worst_excess) = f
        .values
        .iter()
        .zip(&h.values)
        .map(|(&fv, &hv)| (fv - mid * hv).norm() - radius * hv.norm())
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |best, cur| {
            if cur.1 > best.1 {
                cur
            } else {
                best
            }
        });
    let holds = worst_excess <= tol;
    Ok(PointwiseCheck {
        holds,
        worst_index: (!holds).then_some(index),
        worst_excess,
    })
}
