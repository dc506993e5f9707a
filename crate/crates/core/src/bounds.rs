//! Classic and refined Grüss bounds and the packaged evaluation report.

use serde::{Deserialize, Serialize};

use crate::bracket::Bracket;
use crate::condition::{condition_unchecked, ConditionReport};
use crate::error::{GrussError, Operand, Result};
use crate::functional::functional_unchecked;
use crate::scalar::{Field, Scalar};
use crate::tolerance::condition_tolerance;
use crate::vector::Vector;

/// Whether evaluators refuse to report on violated hypotheses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Condition violations are errors.
    #[default]
    Strict,
    /// Values are computed formally and the report is marked not certified.
    Diagnostic,
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "strict" => Ok(Mode::Strict),
            "diagnostic" => Ok(Mode::Diagnostic),
            other => Err(format!(
                "unknown mode `{other}` (expected strict or diagnostic)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundReport {
    pub functional: Scalar,
    pub abs_functional: f64,
    pub classic_bound: f64,
    pub refined_bound: f64,
    pub slack_classic: f64,
    pub slack_refined: f64,
    pub cond_x: ConditionReport,
    pub cond_y: ConditionReport,
    /// Both conditions hold and both slacks are non-negative within tolerance.
    pub certified: bool,
}

/// `¼|Φ - φ|·|Γ - γ|`.
pub fn classic_bound(brx: &Bracket, bry: &Bracket) -> f64 {
    0.25 * brx.width() * bry.width()
}

/// Clamps a radicand that is negative only by rounding.
fn clamp_radicand(q: f64, tol: f64) -> Option<f64> {
    if q >= 0.0 {
        Some(q)
    } else if q >= -tol {
        Some(0.0)
    } else {
        None
    }
}

/// `¼|Φ - φ||Γ - γ| - sqrt(Re<Φe - x, x - φe>)·sqrt(Re<Γe - y, y - γe>)`.
///
/// Both bracket conditions must hold within the default condition tolerance.
pub fn refined_bound(
    x: &Vector,
    y: &Vector,
    e: &Vector,
    brx: &Bracket,
    bry: &Bracket,
) -> Result<f64> {
    check_triple(x, y, e)?;
    let cx = condition_unchecked(x, e, brx, condition_tolerance(brx));
    let cy = condition_unchecked(y, e, bry, condition_tolerance(bry));
    refined_from_conditions(brx, bry, &cx, &cy)
}

fn refined_from_conditions(
    brx: &Bracket,
    bry: &Bracket,
    cx: &ConditionReport,
    cy: &ConditionReport,
) -> Result<f64> {
    let qx = match (cx.satisfied, clamp_radicand(cx.quad_value, cx.tolerance)) {
        (true, Some(q)) => q,
        _ => return Err(violated(Operand::X, cx)),
    };
    let qy = match (cy.satisfied, clamp_radicand(cy.quad_value, cy.tolerance)) {
        (true, Some(q)) => q,
        _ => return Err(violated(Operand::Y, cy)),
    };
    Ok(refined_formula(brx, bry, qx, qy))
}

fn refined_formula(brx: &Bracket, bry: &Bracket, qx: f64, qy: f64) -> f64 {
    (classic_bound(brx, bry) - qx.sqrt() * qy.sqrt()).max(0.0)
}

pub(crate) fn violated(operand: Operand, report: &ConditionReport) -> GrussError {
    GrussError::ConditionViolated {
        operand,
        report: Box::new(*report),
    }
}

pub(crate) fn check_triple(x: &Vector, y: &Vector, e: &Vector) -> Result<()> {
    x.metric().ensure_same(e.metric())?;
    y.metric().ensure_same(e.metric())?;
    e.ensure_unit()
}

/// Evaluation context: the ground field and the certification mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Context {
    pub field: Field,
    pub mode: Mode,
}

impl Context {
    pub fn new(field: Field, mode: Mode) -> Self {
        Self { field, mode }
    }

    pub(crate) fn admit(&self, vectors: &[&Vector], brackets: &[&Bracket]) -> Result<()> {
        for v in vectors {
            self.field.admit(v.coords())?;
        }
        for b in brackets {
            self.field.admit(&[b.lo(), b.hi()])?;
        }
        Ok(())
    }

    /// Functional, classic and refined bounds, slacks and both condition
    /// diagnostics for one `(x, y)` pair.
    pub fn gruss(
        &self,
        x: &Vector,
        y: &Vector,
        e: &Vector,
        brx: &Bracket,
        bry: &Bracket,
    ) -> Result<BoundReport> {
        check_triple(x, y, e)?;
        self.admit(&[x, y, e], &[brx, bry])?;

        let cond_x = condition_unchecked(x, e, brx, condition_tolerance(brx));
        let cond_y = condition_unchecked(y, e, bry, condition_tolerance(bry));
        let functional = functional_unchecked(x, y, e);
        let abs_functional = functional.norm();
        let classic = classic_bound(brx, bry);

        let refined = match refined_from_conditions(brx, bry, &cond_x, &cond_y) {
            Ok(r) => r,
            Err(err) if self.mode == Mode::Strict => return Err(err),
            Err(_) => refined_formula(
                brx,
                bry,
                cond_x.quad_value.max(0.0),
                cond_y.quad_value.max(0.0),
            ),
        };

        let slack_classic = classic - abs_functional;
        let slack_refined = refined - abs_functional;
        let tol = crate::tolerance::INEQUALITY_RTOL * crate::tolerance::scale(&[classic]);
        let certified =
            cond_x.satisfied && cond_y.satisfied && slack_classic >= -tol && slack_refined >= -tol;

        Ok(BoundReport {
            functional,
            abs_functional,
            classic_bound: classic,
            refined_bound: refined,
            slack_classic,
            slack_refined,
            cond_x,
            cond_y,
            certified,
        })
    }
}

/// [`Context::gruss`] over the complex field.
pub fn evaluate_gruss(
    x: &Vector,
    y: &Vector,
    e: &Vector,
    brx: &Bracket,
    bry: &Bracket,
    mode: Mode,
) -> Result<BoundReport> {
    Context::new(Field::Complex, mode).gruss(x, y, e, brx, bry)
}
