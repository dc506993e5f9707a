use serde::Serialize;

use crate::bracket::Bracket;
use crate::error::{GrussError, Result};
use crate::functional::{gap_unchecked, outer_quad_unchecked, projected_quad_unchecked};
use crate::vector::Vector;

/// The three terms of the dual chain, valid when `<x, e>` lies outside the
/// bracket disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DualChain {
    /// `‖x - <x,e> e‖`.
    pub distance: f64,
    /// `sqrt(Re<x - Φe, x - φe>)`.
    pub middle: f64,
    /// `(√2/2)·sqrt(‖x - Φe‖² + ‖x - φe‖²)`.
    pub upper: f64,
    /// `Re[(Φ - <x,e>)(conj<x,e> - conj φ)]`, required `<= tol`.
    pub precondition: f64,
}

impl DualChain {
    pub fn as_tuple(&self) -> (f64, f64, f64) {
        (self.distance, self.middle, self.upper)
    }

    pub fn is_monotone(&self, tol: f64) -> bool {
        self.distance <= self.middle + tol && self.middle <= self.upper + tol
    }
}

pub fn dual_chain(x: &Vector, e: &Vector, br: &Bracket, tol: f64) -> Result<DualChain> {
    x.metric().ensure_same(e.metric())?;
    e.ensure_unit()?;

    let c = x.inner_unchecked(e);
    let precondition = projected_quad_unchecked(c, br);
    if precondition > tol {
        return Err(GrussError::DualPreconditionViolated {
            value: precondition,
        });
    }

    let distance = gap_unchecked(x, e).sqrt();
    let radicand = outer_quad_unchecked(x, e, br);
    if radicand < -tol {
        return Err(GrussError::InternalIdentityViolated { radicand });
    }
    let middle = radicand.max(0.0).sqrt();

    let to_hi = x.zip_sub_scaled(br.hi(), e).norm_sqr();
    let to_lo = x.zip_sub_scaled(br.lo(), e).norm_sqr();
    let upper = std::f64::consts::FRAC_1_SQRT_2 * (to_hi + to_lo).sqrt();

    Ok(DualChain {
        distance,
        middle,
        upper,
        precondition,
    })
}
