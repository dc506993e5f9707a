//! Concrete measures: the uniform mean, user weights and quadrature grids,
//! with the integral and mean forms of the Grüss-type bounds on top.

mod disk;
mod integral;
mod quadrature;
mod sampled;

pub use disk::{estimate_bracket, minimal_enclosing_disk, Disk, EstimatedBracket};
pub use integral::{integral_companion, integral_gruss, mean_companion, mean_gruss, mean_metric};
pub use quadrature::{quadrature_metric, quadrature_metric_raw, GridSpec, Rule};
pub use sampled::{normalize_unit, pointwise_condition, PointwiseCheck, SampledFunction};
