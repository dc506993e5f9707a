//! Chebyshev functional, bracket conditions and certified Grüss-type bounds
//! on finite weighted inner-product spaces over ℝ or ℂ.
//!
//! The inner product is `<x, y> = Σ wᵢ xᵢ conj(yᵢ)` for positive weights
//! `wᵢ`; this covers `𝕂ⁿ`, the `1/n` mean and quadrature approximations of
//! `L²` on an interval. For a unit vector `e` the Chebyshev functional is
//! `T(x, y) = <x, y> - <x, e><e, y>`, and every bound in this crate is
//! certified only when the bracket hypotheses on its arguments hold.

pub mod bounds;
pub mod bracket;
pub mod companion;
pub mod condition;
pub mod dual;
pub mod error;
pub mod functional;
pub mod measure;
pub mod metric;
pub mod scalar;
pub mod sharpness;
pub mod tolerance;
pub mod vector;

pub use bounds::{classic_bound, evaluate_gruss, refined_bound, BoundReport, Context, Mode};
pub use bracket::Bracket;
pub use companion::{companion_bound, evaluate_companion, CompanionReport, CompanionSign};
pub use condition::{condition_check, ConditionReport};
pub use dual::{dual_chain, DualChain};
pub use error::{GrussError, Operand, Result};
pub use functional::{
    chebyshev_functional, companion_value, identity_residual, inner, schwarz_gap,
};
pub use metric::SpaceMetric;
pub use scalar::{real, Field, Scalar};
pub use vector::{UnitPolicy, Vector};
