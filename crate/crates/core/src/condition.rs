//! Bracket conditions in their two equivalent forms.
//!
//! The quadratic form `Re<Δe - x, x - δe> >= 0` and the disk form
//! `‖x - mid·e‖ <= radius` agree because
//! `Re<Δe - x, x - δe> = radius² - ‖x - mid·e‖²` identically.

use serde::Serialize;

use crate::bracket::Bracket;
use crate::error::Result;
use crate::vector::Vector;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConditionReport {
    /// `Re<Δe - x, x - δe>`.
    pub quad_value: f64,
    /// `radius - ‖x - mid·e‖`.
    pub norm_slack: f64,
    /// `quad_value - (radius² - ‖x - mid·e‖²)`; zero up to rounding.
    pub equiv_residual: f64,
    pub satisfied: bool,
    pub tolerance: f64,
}

/// Evaluates both forms of the bracket condition for `x` against `br`.
///
/// A degenerate bracket (`lo == hi`) is satisfied iff `‖x - lo·e‖ <= tol`.
pub fn condition_check(x: &Vector, e: &Vector, br: &Bracket, tol: f64) -> Result<ConditionReport> {
    x.metric().ensure_same(e.metric())?;
    e.ensure_unit()?;
    Ok(condition_unchecked(x, e, br, tol))
}

pub(crate) fn condition_unchecked(
    x: &Vector,
    e: &Vector,
    br: &Bracket,
    tol: f64,
) -> ConditionReport {
    let radius = br.radius();
    let upper = e
        .scaled(br.hi())
        .zip_sub_scaled(crate::scalar::real(1.0), x);
    let lower = x.zip_sub_scaled(br.lo(), e);
    let quad_value = upper.inner_unchecked(&lower).re;

    let dist = x.zip_sub_scaled(br.mid(), e).norm();
    let norm_slack = radius - dist;
    let equiv_residual = quad_value - (radius * radius - dist * dist);

    let satisfied = if br.is_degenerate() {
        dist <= tol
    } else {
        quad_value >= -tol
    };
    ConditionReport {
        quad_value,
        norm_slack,
        equiv_residual,
        satisfied,
        tolerance: tol,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::SpaceMetric;
    use crate::scalar::{real, Scalar};
    use approx::assert_abs_diff_eq;

    fn m2() -> SpaceMetric {
        SpaceMetric::new(vec![0.5, 0.5]).unwrap()
    }

    #[test]
    fn boundary_point_is_admissible() {
        let m = m2();
        let e = Vector::from_real(&m, &[1.0, 1.0]).unwrap();
        let x = Vector::from_real(&m, &[0.0, 1.0]).unwrap();
        let r = condition_check(&x, &e, &Bracket::real(0.0, 1.0).unwrap(), 0.0).unwrap();
        assert_eq!(r.quad_value, 0.0);
        assert_eq!(r.norm_slack, 0.0);
        assert_eq!(r.equiv_residual, 0.0);
        assert!(r.satisfied);
    }

    #[test]
    fn disk_centre_has_full_slack() {
        let m = m2();
        let e = Vector::from_real(&m, &[1.0, 1.0]).unwrap();
        let br = Bracket::new(Scalar::new(-1.0, 2.0), Scalar::new(3.0, -1.0)).unwrap();
        let x = e.scaled(br.mid());
        let r = condition_check(&x, &e, &br, 1e-9).unwrap();
        assert_abs_diff_eq!(r.quad_value, br.radius().powi(2), epsilon = 1e-12);
        assert_abs_diff_eq!(r.norm_slack, br.radius(), epsilon = 1e-12);
        assert!(r.satisfied);
    }

    #[test]
    fn interior_point_matches_both_forms() {
        let m = m2();
        let e = Vector::from_real(&m, &[1.0, 1.0]).unwrap();
        let x = Vector::from_real(&m, &[0.2, 0.8]).unwrap();
        let r = condition_check(&x, &e, &Bracket::real(0.0, 1.0).unwrap(), 1e-9).unwrap();
        assert_abs_diff_eq!(r.quad_value, 0.16, epsilon = 1e-15);
        assert_abs_diff_eq!(r.quad_value, 0.25 - 0.09, epsilon = 1e-15);
        assert_abs_diff_eq!(r.norm_slack, 0.5 - 0.3, epsilon = 1e-15);
        assert!(r.equiv_residual.abs() < 1e-15);
        assert!(r.satisfied);
    }

    #[test]
    fn outside_point_fails() {
        let m = m2();
        let e = Vector::from_real(&m, &[1.0, 1.0]).unwrap();
        let x = Vector::from_real(&m, &[0.0, 1.0]).unwrap();
        let r = condition_check(&x, &e, &Bracket::real(0.0, 0.5).unwrap(), 1e-9).unwrap();
        assert!(!r.satisfied);
        assert!(r.quad_value < 0.0 && r.norm_slack < 0.0);
    }

    #[test]
    fn degenerate_bracket_forces_x_on_the_line() {
        let m = m2();
        let e = Vector::from_real(&m, &[1.0, 1.0]).unwrap();
        let br = Bracket::real(0.7, 0.7).unwrap();
        assert!(
            condition_check(&e.scaled(real(0.7)), &e, &br, 1e-9)
                .unwrap()
                .satisfied
        );
        let off = Vector::from_real(&m, &[0.7, 0.7 + 1e-6]).unwrap();
        let r = condition_check(&off, &e, &br, 1e-9).unwrap();
        // quad form alone would accept this within tolerance
        assert!(r.quad_value >= -1e-9);
        assert!(!r.satisfied);
    }
}
