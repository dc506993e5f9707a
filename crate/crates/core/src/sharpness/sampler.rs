use rand::Rng;
use rand_distr::StandardNormal;

use crate::bracket::Bracket;
use crate::error::Result;
use crate::metric::SpaceMetric;
use crate::scalar::{Field, Scalar};
use crate::vector::Vector;

pub fn random_scalar<R: Rng + ?Sized>(field: Field, rng: &mut R) -> Scalar {
    let re: f64 = rng.sample(StandardNormal);
    match field {
        Field::Real => Scalar::new(re, 0.0),
        Field::Complex => Scalar::new(re, rng.sample(StandardNormal)),
    }
}

/// Uniform direction on the unit sphere of `metric`: independent standard
/// normals in orthonormal coordinates, normalized.
pub fn random_direction<R: Rng + ?Sized>(
    metric: &SpaceMetric,
    field: Field,
    rng: &mut R,
) -> Vector {
    loop {
        let coords = metric
            .weights()
            .iter()
            .map(|w| random_scalar(field, rng) / w.sqrt())
            .collect();
        let v = Vector::new(metric, coords).expect("finite by construction");
        if let Ok(u) = v.normalized() {
            return u;
        }
    }
}

/// Positive weights drawn from `[0.1, 2)`.
pub fn random_metric<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> SpaceMetric {
    let weights = (0..dim).map(|_| rng.gen_range(0.1..2.0)).collect();
    SpaceMetric::new(weights).expect("positive weights")
}

/// Endpoints are standard normal scalars scaled by `magnitude`.
pub fn random_bracket<R: Rng + ?Sized>(field: Field, magnitude: f64, rng: &mut R) -> Bracket {
    let lo = random_scalar(field, rng) * magnitude;
    let hi = random_scalar(field, rng) * magnitude;
    Bracket::new(lo, hi).expect("finite endpoints")
}

fn real_dimension(e: &Vector, field: Field) -> f64 {
    match field {
        Field::Real => e.dim() as f64,
        Field::Complex => 2.0 * e.dim() as f64,
    }
}

/// Uniform point of the admissible ball `‖x - mid·e‖ <= radius·(1 - 1e-12)`.
pub fn sample_admissible<R: Rng + ?Sized>(
    e: &Vector,
    br: &Bracket,
    field: Field,
    rng: &mut R,
) -> Vector {
    let centre = e.scaled(br.mid());
    if br.radius() == 0.0 {
        return centre;
    }
    let u: f64 = rng.gen();
    let rho = br.radius() * (1.0 - 1e-12) * u.powf(1.0 / real_dimension(e, field));
    offset(&centre, e, field, rho, rng)
}

/// Point at distance exactly `radius` from `mid·e`, the equality case of the
/// disk form.
pub fn sample_on_boundary<R: Rng + ?Sized>(
    e: &Vector,
    br: &Bracket,
    field: Field,
    rng: &mut R,
) -> Vector {
    let centre = e.scaled(br.mid());
    offset(&centre, e, field, br.radius(), rng)
}

fn offset<R: Rng + ?Sized>(
    centre: &Vector,
    e: &Vector,
    field: Field,
    rho: f64,
    rng: &mut R,
) -> Vector {
    let w = random_direction(e.metric(), field, rng).scaled(Scalar::new(rho, 0.0));
    centre.add(&w).expect("same metric")
}

/// Moves `x` radially onto the admissible ball of `br` if it lies outside.
pub(crate) fn project_into(x: &Vector, e: &Vector, br: &Bracket) -> Result<Vector> {
    let centre = e.scaled(br.mid());
    let w = x.sub(&centre)?;
    let n = w.norm();
    let limit = br.radius() * (1.0 - 1e-12);
    if n <= limit {
        return Ok(x.clone());
    }
    if n == 0.0 || limit == 0.0 {
        return Ok(centre);
    }
    centre.axpy(Scalar::new(limit / n, 0.0), &w)
}
