use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::refined_bound;
use crate::condition::condition_unchecked;
use crate::functional::functional_unchecked;
use crate::scalar::{Field, Scalar};
use crate::tolerance::condition_tolerance;

use super::sampler::{
    project_into, random_bracket, random_direction, random_metric, random_scalar,
    sample_admissible, sample_on_boundary,
};
use super::witness::{equality_witness_in, Witness, WitnessKind};
use super::FuzzConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchKind {
    Classic,
    Refined,
    Companion,
}

impl std::str::FromStr for SearchKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "classic" => Ok(Self::Classic),
            "refined" => Ok(Self::Refined),
            "companion" => Ok(Self::Companion),
            other => Err(format!("unknown kind `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SharpnessResult {
    pub kind: SearchKind,
    pub best_ratio: f64,
    pub dim: usize,
    pub witness: Witness,
    pub iterations: u64,
}

/// Ratio of the bounded quantity to the bound, zero when the bound vanishes.
pub(crate) fn ratio(kind: SearchKind, w: &Witness) -> f64 {
    match kind {
        SearchKind::Classic => w.ratio(WitnessKind::Classic),
        SearchKind::Companion => w.ratio(WitnessKind::Companion),
        SearchKind::Refined => {
            let t = functional_unchecked(&w.x, &w.y, &w.e).norm();
            match refined_bound(&w.x, &w.y, &w.e, &w.brx, &w.bry) {
                Ok(b) if b > 0.0 => t / b,
                _ => 0.0,
            }
        }
    }
}

fn admissible(kind: SearchKind, w: &Witness) -> bool {
    match kind {
        SearchKind::Classic | SearchKind::Refined => {
            condition_unchecked(&w.x, &w.e, &w.brx, condition_tolerance(&w.brx)).satisfied
                && condition_unchecked(&w.y, &w.e, &w.bry, condition_tolerance(&w.bry)).satisfied
        }
        SearchKind::Companion => {
            let u = w.x.half_sum(&w.y).expect("same metric");
            condition_unchecked(&u, &w.e, &w.bry, condition_tolerance(&w.bry)).satisfied
        }
    }
}

fn witness_kind(kind: SearchKind) -> WitnessKind {
    match kind {
        SearchKind::Companion => WitnessKind::Companion,
        _ => WitnessKind::Classic,
    }
}

fn random_tuple(kind: SearchKind, dim: usize, field: Field, rng: &mut ChaCha8Rng) -> Witness {
    let metric = random_metric(dim, rng);
    let e = random_direction(&metric, field, rng);
    let draw = |br, rng: &mut ChaCha8Rng| {
        if rng.gen_bool(0.5) {
            sample_on_boundary(&e, br, field, rng)
        } else {
            sample_admissible(&e, br, field, rng)
        }
    };
    match kind {
        SearchKind::Classic | SearchKind::Refined => {
            let brx = random_bracket(field, 1.0, rng);
            let bry = random_bracket(field, 1.0, rng);
            let x = draw(&brx, rng);
            let y = draw(&bry, rng);
            Witness {
                metric: metric.clone(),
                e: e.clone(),
                x,
                y,
                brx,
                bry,
            }
        }
        SearchKind::Companion => {
            let br = random_bracket(field, 1.0, rng);
            let u = draw(&br, rng);
            let v = random_direction(&metric, field, rng)
                .scaled(Scalar::new(br.radius() * rng.gen::<f64>(), 0.0));
            let x = u.add(&v).expect("same metric");
            let y = u.sub(&v).expect("same metric");
            Witness {
                metric: metric.clone(),
                e: e.clone(),
                x,
                y,
                brx: br,
                bry: br,
            }
        }
    }
}

/// One coordinate of `x` or `y` moves by `step`, then the tuple is pulled
/// back into its admissible set.
fn perturb(
    kind: SearchKind,
    w: &Witness,
    step: f64,
    field: Field,
    rng: &mut ChaCha8Rng,
) -> Witness {
    let i = rng.gen_range(0..w.x.dim());
    let delta = random_scalar(field, rng) * step;
    let mut next = w.clone();
    if rng.gen_bool(0.5) {
        next.x = w.x.with_coord(i, w.x.coords()[i] + delta);
    } else {
        next.y = w.y.with_coord(i, w.y.coords()[i] + delta);
    }
    match kind {
        SearchKind::Classic | SearchKind::Refined => {
            next.x = project_into(&next.x, &w.e, &w.brx).expect("same metric");
            next.y = project_into(&next.y, &w.e, &w.bry).expect("same metric");
        }
        SearchKind::Companion => {
            let u = next.x.half_sum(&next.y).expect("same metric");
            let v = next.x.half_difference(&next.y).expect("same metric");
            let u = project_into(&u, &w.e, &w.bry).expect("same metric");
            next.x = u.add(&v).expect("same metric");
            next.y = u.sub(&v).expect("same metric");
        }
    }
    next
}

struct DimResult {
    best_ratio: f64,
    witness: Witness,
    iterations: u64,
}

fn search_dim(kind: SearchKind, dim: usize, field: Field, budget: usize, seed: u64) -> DimResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = equality_witness_in(witness_kind(kind), dim);
    let mut best_ratio = ratio(kind, &best);
    let mut iterations = 0u64;

    let restarts = budget / 2;
    let mut current = best.clone();
    let mut current_ratio = best_ratio;
    for _ in 0..restarts {
        let cand = random_tuple(kind, dim, field, &mut rng);
        iterations += 1;
        let r = ratio(kind, &cand);
        if r > current_ratio && admissible(kind, &cand) {
            current = cand;
            current_ratio = r;
        }
    }
    if current_ratio > best_ratio {
        best = current.clone();
        best_ratio = current_ratio;
    }

    let mut step = 0.1 * best.brx.radius().max(best.bry.radius()).max(1e-3);
    let mut failures = 0;
    for _ in restarts..budget {
        let cand = perturb(kind, &best, step, field, &mut rng);
        iterations += 1;
        let r = ratio(kind, &cand);
        if r > best_ratio && admissible(kind, &cand) {
            best = cand;
            best_ratio = r;
            failures = 0;
        } else {
            failures += 1;
            if failures == 20 {
                step = (step * 0.5).max(1e-9);
                failures = 0;
            }
        }
    }
    DimResult {
        best_ratio,
        witness: best,
        iterations,
    }
}

/// Maximizes the ratio of the bounded quantity to its bound over admissible
/// tuples, starting from the equality witness in each configured dimension.
///
/// The sample budget is split evenly across dimensions and, within each,
/// evenly between random restarts and coordinate-wise refinement with a
/// shrinking step.
pub fn sharpness_search(cfg: &FuzzConfig, kind: SearchKind) -> SharpnessResult {
    let per_dim = cfg.samples / cfg.dims.len();
    let extra = cfg.samples % cfg.dims.len();
    let results: Vec<(usize, DimResult)> = cfg
        .dims
        .par_iter()
        .enumerate()
        .map(|(k, &dim)| {
            let budget = per_dim + usize::from(k < extra);
            let seed = cfg.seed ^ (dim as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
            (dim, search_dim(kind, dim, cfg.field, budget, seed))
        })
        .collect();

    let iterations = results.iter().map(|(_, r)| r.iterations).sum();
    let (dim, best) = results
        .into_iter()
        .reduce(|a, b| {
            if b.1.best_ratio > a.1.best_ratio {
                b
            } else {
                a
            }
        })
        .expect("dims is non-empty");
    SharpnessResult {
        kind,
        best_ratio: best.best_ratio,
        dim,
        witness: best.witness,
        iterations,
    }
}
