//! Exact formula layer: inner products, the Chebyshev functional and the
//! quantities derived from the projection onto `span{e}`.

use crate::bracket::Bracket;
use crate::error::Result;
use crate::scalar::Scalar;
use crate::vector::Vector;

pub fn inner(x: &Vector, y: &Vector) -> Result<Scalar> {
    x.inner(y)
}

fn check_space(vs: &[&Vector], e: &Vector) -> Result<()> {
    for v in vs {
        v.metric().ensure_same(e.metric())?;
    }
    e.ensure_unit()
}

/// `T(x, y) = <x, y> - <x, e><e, y>` for a unit vector `e`.
pub fn chebyshev_functional(x: &Vector, y: &Vector, e: &Vector) -> Result<Scalar> {
    check_space(&[x, y], e)?;
    Ok(functional_unchecked(x, y, e))
}

pub(crate) fn functional_unchecked(x: &Vector, y: &Vector, e: &Vector) -> Scalar {
    x.inner_unchecked(y) - x.inner_unchecked(e) * e.inner_unchecked(y)
}

/// `‖x‖² - |<x, e>|²`, the squared distance from `x` to `span{e}`.
///
/// Computed as `‖x - <x,e> e‖²` so the result is never negative.
pub fn schwarz_gap(x: &Vector, e: &Vector) -> Result<f64> {
    check_space(&[x], e)?;
    Ok(gap_unchecked(x, e))
}

pub(crate) fn gap_unchecked(x: &Vector, e: &Vector) -> f64 {
    let c = x.inner_unchecked(e);
    x.zip_sub_scaled(c, e).norm_sqr()
}

/// The same quantity by the difference formula `‖x‖² - |<x, e>|²`.
pub fn schwarz_gap_by_difference(x: &Vector, e: &Vector) -> Result<f64> {
    check_space(&[x], e)?;
    Ok(x.norm_sqr() - x.inner_unchecked(e).norm_sqr())
}

/// `Re T(x, y)`.
pub fn companion_value(x: &Vector, y: &Vector, e: &Vector) -> Result<f64> {
    chebyshev_functional(x, y, e).map(|t| t.re)
}

/// `Re[(Φ - <x,e>)(conj<x,e> - conj φ)]` for the bracket `(φ, Φ)`.
pub fn projected_quad(x: &Vector, e: &Vector, br: &Bracket) -> Result<f64> {
    check_space(&[x], e)?;
    Ok(projected_quad_unchecked(x.inner_unchecked(e), br))
}

pub(crate) fn projected_quad_unchecked(c: Scalar, br: &Bracket) -> f64 {
    ((br.hi() - c) * (c.conj() - br.lo().conj())).re
}

/// `Re<x - Φe, x - φe>`.
pub(crate) fn outer_quad_unchecked(x: &Vector, e: &Vector, br: &Bracket) -> f64 {
    let a = x.zip_sub_scaled(br.hi(), e);
    let b = x.zip_sub_scaled(br.lo(), e);
    a.inner_unchecked(&b).re
}

/// Residual of the decomposition
/// `‖x‖² - |<x,e>|² = Re[(Φ - <x,e>)(conj<x,e> - conj φ)] + Re<x - Φe, x - φe>`.
///
/// Zero up to rounding for every input; used as a self-test.
pub fn identity_residual(x: &Vector, e: &Vector, br: &Bracket) -> Result<f64> {
    check_space(&[x], e)?;
    let c = x.inner_unchecked(e);
    let gap = x.norm_sqr() - c.norm_sqr();
    Ok(gap - projected_quad_unchecked(c, br) - outer_quad_unchecked(x, e, br))
}

impl Vector {
    /// `self - alpha * e` without a metric check.
    pub(crate) fn zip_sub_scaled(&self, alpha: Scalar, e: &Vector) -> Vector {
        self.axpy(-alpha, e).expect("metric checked by caller")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::GrussError;
    use crate::metric::SpaceMetric;
    use crate::scalar::real;
    use approx::assert_abs_diff_eq;

    fn m2() -> SpaceMetric {
        SpaceMetric::new(vec![0.5, 0.5]).unwrap()
    }

    fn v(m: &SpaceMetric, c: &[f64]) -> Vector {
        Vector::from_real(m, c).unwrap()
    }

    #[test]
    fn inner_examples() {
        let m = m2();
        assert_eq!(
            inner(&v(&m, &[0.0, 1.0]), &v(&m, &[0.0, 1.0])).unwrap(),
            real(0.5)
        );
        assert_eq!(
            inner(&v(&m, &[0.3, -2.0]), &Vector::zeros(&m)).unwrap(),
            real(0.0)
        );
        let p = inner(&v(&m, &[0.2, 0.8]), &v(&m, &[0.1, 0.9])).unwrap();
        assert_abs_diff_eq!(p.re, 0.37, epsilon = 1e-15);
        assert_eq!(p.im, 0.0);
    }

    #[test]
    fn inner_is_conjugate_symmetric() {
        let m = m2();
        let x = Vector::new(&m, vec![Scalar::new(1.0, 2.0), Scalar::new(-0.5, 0.25)]).unwrap();
        let y = Vector::new(&m, vec![Scalar::new(0.0, -1.0), Scalar::new(3.0, 1.0)]).unwrap();
        assert_eq!(inner(&x, &y).unwrap(), inner(&y, &x).unwrap().conj());
    }

    #[test]
    fn functional_examples() {
        let m = m2();
        let e = v(&m, &[1.0, 1.0]);
        let y = v(&m, &[0.3, 0.7]);
        assert_eq!(chebyshev_functional(&e, &y, &e).unwrap(), real(0.0));
        let x = v(&m, &[0.0, 1.0]);
        assert_eq!(chebyshev_functional(&x, &x, &e).unwrap(), real(0.25));
        let t = chebyshev_functional(&v(&m, &[0.2, 0.8]), &v(&m, &[0.1, 0.9]), &e).unwrap();
        assert_abs_diff_eq!(t.re, 0.12, epsilon = 1e-15);
    }

    #[test]
    fn functional_requires_unit_e() {
        let m = m2();
        let x = v(&m, &[0.0, 1.0]);
        let e = v(&m, &[1.0, 0.0]);
        match chebyshev_functional(&x, &x, &e) {
            Err(GrussError::NotUnitVector { norm }) => assert_abs_diff_eq!(norm, 0.5f64.sqrt()),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            schwarz_gap(&x, &e),
            Err(GrussError::NotUnitVector { .. })
        ));
    }

    #[test]
    fn schwarz_gap_examples() {
        let m = m2();
        let e = v(&m, &[1.0, 1.0]);
        assert_eq!(
            schwarz_gap(&e.scaled(Scalar::new(-3.0, 2.0)), &e).unwrap(),
            0.0
        );
        assert_abs_diff_eq!(
            schwarz_gap(&v(&m, &[0.0, 1.0]), &e).unwrap(),
            0.25,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            schwarz_gap(&v(&m, &[0.2, 0.8]), &e).unwrap(),
            0.09,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            schwarz_gap_by_difference(&v(&m, &[0.2, 0.8]), &e).unwrap(),
            0.09,
            epsilon = 1e-15
        );
    }

    #[test]
    fn companion_value_examples() {
        let m = m2();
        let e = v(&m, &[1.0, 1.0]);
        let x = v(&m, &[0.3, 1.7]);
        assert_abs_diff_eq!(
            companion_value(&x, &x, &e).unwrap(),
            schwarz_gap(&x, &e).unwrap(),
            epsilon = 1e-15
        );
        assert_eq!(
            companion_value(&v(&m, &[0.0, 1.0]), &v(&m, &[1.0, 0.0]), &e).unwrap(),
            -0.25
        );
        assert_abs_diff_eq!(
            companion_value(&v(&m, &[0.2, 0.8]), &v(&m, &[0.1, 0.9]), &e).unwrap(),
            0.12,
            epsilon = 1e-15
        );
    }

    #[test]
    fn identity_residual_examples() {
        let m = m2();
        let e = v(&m, &[1.0, 1.0]);
        let br01 = Bracket::real(0.0, 1.0).unwrap();
        let br69 = Bracket::real(0.6, 0.9).unwrap();
        assert_abs_diff_eq!(
            identity_residual(&e.scaled(real(2.5)), &e, &br69).unwrap(),
            0.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            identity_residual(&v(&m, &[0.2, 0.8]), &e, &br01).unwrap(),
            0.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            identity_residual(&v(&m, &[0.0, 1.0]), &e, &br69).unwrap(),
            0.0,
            epsilon = 1e-15
        );
        // the two non-trivial terms for the second example
        assert_abs_diff_eq!(
            projected_quad(&v(&m, &[0.2, 0.8]), &e, &br01).unwrap(),
            0.25
        );
        assert_abs_diff_eq!(
            outer_quad_unchecked(&v(&m, &[0.2, 0.8]), &e, &br01),
            -0.16,
            epsilon = 1e-15
        );
    }
}
