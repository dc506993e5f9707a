//! Tolerance ladder.
//!
//! Identities are checked at `IDENTITY_RTOL * scale`, inequalities at
//! `INEQUALITY_RTOL * scale`, where `scale` is at least 1 and grows with the
//! squared magnitudes entering the computation.

use crate::bracket::Bracket;

/// Absolute tolerance on `|‖e‖ - 1|`.
pub const UNIT_NORM_TOL: f64 = 1e-9;
pub const IDENTITY_RTOL: f64 = 1e-12;
pub const INEQUALITY_RTOL: f64 = 1e-9;
/// Largest imaginary part accepted in real-field mode.
pub const REAL_FIELD_IMAG_TOL: f64 = 1e-12;

/// `max(1, v_1, v_2, ...)`.
pub fn scale(values: &[f64]) -> f64 {
    values.iter().copied().fold(1.0, f64::max)
}

/// Default tolerance for certifying a bracket condition: `1e-9 * max(1, radius²)`.
pub fn condition_tolerance(br: &Bracket) -> f64 {
    INEQUALITY_RTOL * scale(&[br.radius() * br.radius()])
}
