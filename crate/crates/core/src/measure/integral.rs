use crate::bounds::{BoundReport, Context};
use crate::bracket::Bracket;
use crate::companion::{CompanionReport, CompanionSign};
use crate::error::{GrussError, Result};
use crate::metric::SpaceMetric;
use crate::scalar::real;
use crate::tolerance::condition_tolerance;

use super::sampled::{normalize_unit, SampledFunction};

/// Uniform weights `1/n`; the all-ones vector is a unit vector.
pub fn mean_metric(n: usize) -> Result<SpaceMetric> {
    if n == 0 {
        return Err(GrussError::EmptySpace);
    }
    SpaceMetric::new(vec![1.0 / n as f64; n])
}

/// Bounds for `∫ f conj(g) dμ - ∫ f conj(h) dμ · ∫ h conj(g) dμ` with
/// `∫ |h|² dμ = 1`.
pub fn integral_gruss(
    f: &SampledFunction,
    g: &SampledFunction,
    h: &SampledFunction,
    brf: &Bracket,
    brg: &Bracket,
    metric: &SpaceMetric,
    ctx: &Context,
) -> Result<BoundReport> {
    let x = f.to_vector(metric)?;
    let y = g.to_vector(metric)?;
    let e = h.to_vector(metric)?;
    ctx.gruss(&x, &y, &e, brf, brg)
}

/// The mean form: the metric is rescaled to total mass 1 and `h ≡ 1`.
pub fn mean_gruss(
    f: &SampledFunction,
    g: &SampledFunction,
    brf: &Bracket,
    brg: &Bracket,
    metric: &SpaceMetric,
    ctx: &Context,
) -> Result<BoundReport> {
    let (unit, h) = mean_setup(metric)?;
    integral_gruss(f, g, &h, brf, brg, &unit, ctx)
}

/// `I = ∫ Re[f conj(g)] dμ - Re[∫ f conj(h) dμ · ∫ h conj(g) dμ]` against
/// `¼|Γ - γ|²`, with conditions on `(f ± g)/2` relative to `h`.
pub fn integral_companion(
    f: &SampledFunction,
    g: &SampledFunction,
    h: &SampledFunction,
    br: &Bracket,
    sign: CompanionSign,
    metric: &SpaceMetric,
    ctx: &Context,
) -> Result<CompanionReport> {
    let x = f.to_vector(metric)?;
    let y = g.to_vector(metric)?;
    let e = h.to_vector(metric)?;
    ctx.companion(&x, &y, &e, br, condition_tolerance(br), sign)
}

/// `J`, the mean form of [`integral_companion`].
pub fn mean_companion(
    f: &SampledFunction,
    g: &SampledFunction,
    br: &Bracket,
    sign: CompanionSign,
    metric: &SpaceMetric,
    ctx: &Context,
) -> Result<CompanionReport> {
    let (unit, h) = mean_setup(metric)?;
    integral_companion(f, g, &h, br, sign, &unit, ctx)
}

fn mean_setup(metric: &SpaceMetric) -> Result<(SpaceMetric, SampledFunction)> {
    let unit = metric.normalized();
    let h = normalize_unit(&SampledFunction::constant(unit.dim(), real(1.0)), &unit)?;
    Ok((unit, h))
}
