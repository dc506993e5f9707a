//! One-bracket companion bounds on `Re T(x, y)` via conditions on `(x ± y)/2`.

use serde::{Deserialize, Serialize};

use crate::bounds::{check_triple, violated, Context, Mode};
use crate::bracket::Bracket;
use crate::condition::{condition_unchecked, ConditionReport};
use crate::error::{Operand, Result};
use crate::functional::functional_unchecked;
use crate::scalar::{Field, Scalar};
use crate::tolerance::{scale, INEQUALITY_RTOL};
use crate::vector::Vector;

/// Which of the half-sum / half-difference conditions a caller requires.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CompanionSign {
    /// `(x + y)/2` admissible: certifies `Re T <= ¼|Γ - γ|²`.
    Plus,
    /// `(x - y)/2` admissible: certifies `Re T >= -¼|Γ - γ|²`.
    Minus,
    /// Both: certifies `|Re T| <= ¼|Γ - γ|²`.
    Both,
    /// At least one of the two.
    #[default]
    Any,
}

impl std::str::FromStr for CompanionSign {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "plus" => Ok(Self::Plus),
            "minus" => Ok(Self::Minus),
            "both" => Ok(Self::Both),
            "any" => Ok(Self::Any),
            other => Err(format!("unknown sign `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CompanionReport {
    pub functional: Scalar,
    /// `Re T(x, y)`.
    pub companion_value: f64,
    /// `¼|Γ - γ|²`.
    pub bound: f64,
    pub cond_plus: ConditionReport,
    pub cond_minus: ConditionReport,
    /// `bound - Re T`.
    pub slack_upper: f64,
    /// `bound + Re T`.
    pub slack_lower: f64,
    pub upper_certified: bool,
    pub lower_certified: bool,
    pub abs_certified: bool,
    /// Real field with both conditions: `|T| <= ¼(M - m)²`.
    pub real_abs_certified: bool,
    pub certified: bool,
}

/// `¼|Γ - γ|²`.
pub fn companion_bound(br: &Bracket) -> f64 {
    0.25 * br.width() * br.width()
}

impl Context {
    pub fn companion(
        &self,
        x: &Vector,
        y: &Vector,
        e: &Vector,
        br: &Bracket,
        tol: f64,
        required: CompanionSign,
    ) -> Result<CompanionReport> {
        check_triple(x, y, e)?;
        self.admit(&[x, y, e], &[br])?;

        let plus = x.half_sum(y)?;
        let minus = x.half_difference(y)?;
        let cond_plus = condition_unchecked(&plus, e, br, tol);
        let cond_minus = condition_unchecked(&minus, e, br, tol);

        if self.mode == Mode::Strict {
            let need_plus = matches!(required, CompanionSign::Plus | CompanionSign::Both);
            let need_minus = matches!(required, CompanionSign::Minus | CompanionSign::Both);
            if need_plus && !cond_plus.satisfied {
                return Err(violated(Operand::HalfSum, &cond_plus));
            }
            if need_minus && !cond_minus.satisfied {
                return Err(violated(Operand::HalfDifference, &cond_minus));
            }
            if required == CompanionSign::Any && !cond_plus.satisfied && !cond_minus.satisfied {
                return Err(violated(Operand::HalfSum, &cond_plus));
            }
        }

        let functional = functional_unchecked(x, y, e);
        let value = functional.re;
        let bound = companion_bound(br);
        let slack_upper = bound - value;
        let slack_lower = bound + value;
        let ineq_tol = INEQUALITY_RTOL * scale(&[bound, x.norm() * y.norm()]);

        let upper_certified = cond_plus.satisfied && slack_upper >= -ineq_tol;
        let lower_certified = cond_minus.satisfied && slack_lower >= -ineq_tol;
        let abs_certified = upper_certified && lower_certified;
        let real_abs_certified =
            self.field == Field::Real && abs_certified && functional.norm() <= bound + ineq_tol;
        let certified = match required {
            CompanionSign::Plus => upper_certified,
            CompanionSign::Minus => lower_certified,
            CompanionSign::Both => abs_certified,
            CompanionSign::Any => upper_certified || lower_certified,
        };

        Ok(CompanionReport {
            functional,
            companion_value: value,
            bound,
            cond_plus,
            cond_minus,
            slack_upper,
            slack_lower,
            upper_certified,
            lower_certified,
            abs_certified,
            real_abs_certified,
            certified,
        })
    }
}

/// Strict complex-field companion evaluation requiring at least one of the
/// two conditions.
pub fn evaluate_companion(
    x: &Vector,
    y: &Vector,
    e: &Vector,
    br: &Bracket,
    tol: f64,
) -> Result<CompanionReport> {
    Context::default().companion(x, y, e, br, tol, CompanionSign::Any)
}
