//! Seeded oracle suite over every certified inequality and identity.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{classic_bound, Context, Mode};
use crate::bracket::Bracket;
use crate::companion::{companion_bound, CompanionSign};
use crate::condition::condition_unchecked;
use crate::dual::dual_chain;
use crate::functional::{
    functional_unchecked, gap_unchecked, identity_residual, projected_quad_unchecked,
};
use crate::scalar::{Field, Scalar};
use crate::tolerance::{condition_tolerance, scale, IDENTITY_RTOL};
use crate::vector::Vector;

use super::sampler::{
    random_bracket, random_direction, random_metric, random_scalar, sample_admissible,
    sample_on_boundary,
};
use super::FuzzConfig;

/// Checks in report order.
pub const CHECK_NAMES: [&str; 15] = [
    "generator_soundness",
    "condition_equivalence",
    "decomposition_identity",
    "infimum_representation",
    "schwarz_premise",
    "classic_bound",
    "refined_bound",
    "refinement_order",
    "refinement_strict",
    "radicand_bound",
    "companion_chain",
    "companion_upper",
    "companion_abs",
    "companion_real",
    "dual_chain",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckStat {
    pub name: String,
    pub evaluated: u64,
    pub violations: u64,
    /// Largest `(lhs - rhs) / scale` seen, violation or not.
    pub max_excess: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ViolationReport {
    pub seed: u64,
    pub field: Field,
    pub dims: Vec<usize>,
    pub samples: u64,
    pub tolerance: f64,
    pub checks: Vec<CheckStat>,
}

impl ViolationReport {
    fn empty(cfg: &FuzzConfig) -> Self {
        Self {
            seed: cfg.seed,
            field: cfg.field,
            dims: cfg.dims.clone(),
            samples: 0,
            tolerance: cfg.tolerance,
            checks: CHECK_NAMES
                .iter()
                .map(|n| CheckStat {
                    name: n.to_string(),
                    evaluated: 0,
                    violations: 0,
                    max_excess: None,
                })
                .collect(),
        }
    }

    /// Associative and commutative.
    pub fn merge(mut self, other: &ViolationReport) -> Self {
        self.samples += other.samples;
        for (a, b) in self.checks.iter_mut().zip(&other.checks) {
            a.evaluated += b.evaluated;
            a.violations += b.violations;
            a.max_excess = match (a.max_excess, b.max_excess) {
                (Some(p), Some(q)) => Some(p.max(q)),
                (p, q) => p.or(q),
            };
        }
        self
    }

    pub fn total_violations(&self) -> u64 {
        self.checks.iter().map(|c| c.violations).sum()
    }

    pub fn check(&self, name: &str) -> Option<&CheckStat> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Recorder<'a> {
    report: &'a mut ViolationReport,
    ineq_rtol: f64,
}

impl Recorder<'_> {
    /// Records `lhs <= rhs` within `rtol * scale`.
    fn leq(&mut self, id: usize, lhs: f64, rhs: f64, rtol: f64, scale: f64) {
        let stat = &mut self.report.checks[id];
        let excess = (lhs - rhs) / scale;
        stat.evaluated += 1;
        if excess.is_nan() || excess > rtol {
            stat.violations += 1;
        }
        stat.max_excess = Some(stat.max_excess.map_or(excess, |m| m.max(excess)));
    }

    fn ineq(&mut self, id: usize, lhs: f64, rhs: f64, scale: f64) {
        let rtol = self.ineq_rtol;
        self.leq(id, lhs, rhs, rtol, scale);
    }

    fn identity(&mut self, id: usize, residual: f64, scale: f64) {
        self.leq(id, residual.abs(), 0.0, IDENTITY_RTOL, scale);
    }

    fn flag(&mut self, id: usize, ok: bool) {
        self.leq(id, if ok { 0.0 } else { 1.0 }, 0.0, 0.0, 1.0);
    }
}

const SHARD: usize = 512;

fn shard_seed(seed: u64, shard: usize) -> u64 {
    seed ^ (shard as u64 + 1).wrapping_mul(0xD1B5_4A32_D192_ED03)
}

/// Runs every invariant on `cfg.samples` generated tuples. Violations are
/// counted, never raised.
///
/// Shards of 512 samples draw from their own sub-seed, so the report depends
/// only on the configuration.
pub fn fuzz_all(cfg: &FuzzConfig) -> ViolationReport {
    let shards = cfg.samples.div_ceil(SHARD);
    let parts: Vec<ViolationReport> = (0..shards)
        .into_par_iter()
        .map(|k| {
            let mut part = ViolationReport::empty(cfg);
            let mut rng = ChaCha8Rng::seed_from_u64(shard_seed(cfg.seed, k));
            let start = k * SHARD;
            let end = (start + SHARD).min(cfg.samples);
            for i in start..end {
                let dim = cfg.dims[i % cfg.dims.len()];
                run_sample(cfg, dim, &mut rng, &mut part);
                part.samples += 1;
            }
            part
        })
        .collect();
    parts
        .iter()
        .fold(ViolationReport::empty(cfg), |acc, p| acc.merge(p))
}

fn pick_bracket(field: Field, rng: &mut ChaCha8Rng) -> Bracket {
    let magnitude = [0.1, 1.0, 10.0][rng.gen_range(0..3)];
    if rng.gen_ratio(1, 20) {
        let c = random_scalar(field, rng) * magnitude;
        Bracket::new(c, c).expect("finite")
    } else {
        random_bracket(field, magnitude, rng)
    }
}

fn pick_admissible(e: &Vector, br: &Bracket, field: Field, rng: &mut ChaCha8Rng) -> Vector {
    match rng.gen_range(0..8) {
        0 => e.scaled(br.mid()),
        1 | 2 => sample_on_boundary(e, br, field, rng),
        _ => sample_admissible(e, br, field, rng),
    }
}

fn run_sample(cfg: &FuzzConfig, dim: usize, rng: &mut ChaCha8Rng, report: &mut ViolationReport) {
    let field = cfg.field;
    let metric = if rng.gen_bool(0.5) {
        crate::measure::mean_metric(dim).expect("dim > 0")
    } else {
        random_metric(dim, rng)
    };
    let e = random_direction(&metric, field, rng);
    let brx = pick_bracket(field, rng);
    let bry = pick_bracket(field, rng);
    let x = pick_admissible(&e, &brx, field, rng);
    let y = pick_admissible(&e, &bry, field, rng);
    let mut rec = Recorder {
        report,
        ineq_rtol: cfg.tolerance,
    };

    let tx = condition_tolerance(&brx);
    let ty = condition_tolerance(&bry);
    let cx = condition_unchecked(&x, &e, &brx, tx);
    let cy = condition_unchecked(&y, &e, &bry, ty);
    rec.flag(0, cx.satisfied && cy.satisfied);

    let (rx, ry) = (brx.radius(), bry.radius());
    let sx = scale(&[x.norm_sqr(), rx * rx]);
    let sy = scale(&[y.norm_sqr(), ry * ry]);
    rec.identity(1, cx.equiv_residual, sx);
    rec.identity(1, cy.equiv_residual, sy);

    // identities hold for arbitrary inputs, not only admissible ones
    let free = random_direction(&metric, field, rng).scaled(random_scalar(field, rng) * 3.0);
    for (v, br) in [(&x, &brx), (&y, &bry), (&free, &brx)] {
        let r = identity_residual(v, &e, br).expect("unit e");
        let s = scale(&[v.norm_sqr(), br.lo().norm_sqr(), br.hi().norm_sqr()]);
        rec.identity(2, r, s);
    }

    let gap_x = gap_unchecked(&x, &e);
    let gap_y = gap_unchecked(&y, &e);
    let c = x.inner_unchecked(&e);
    let gap_diff = x.norm_sqr() - c.norm_sqr();
    rec.identity(3, gap_x - gap_diff, sx);
    for _ in 0..4 {
        let lambda = c + random_scalar(field, rng) * rng.gen_range(0.0..2.0);
        let d = x.axpy(-lambda, &e).expect("same metric").norm_sqr();
        rec.leq(
            3,
            gap_x,
            d,
            IDENTITY_RTOL,
            scale(&[x.norm_sqr(), lambda.norm_sqr()]),
        );
    }

    let t = functional_unchecked(&x, &y, &e);
    let sxy = scale(&[sx, sy, sx * sy]);
    rec.ineq(4, t.norm_sqr(), gap_x * gap_y, sxy);

    let ctx = Context::new(field, Mode::Strict);
    let classic = classic_bound(&brx, &bry);
    let sb = scale(&[classic, x.norm() * y.norm()]);
    match ctx.gruss(&x, &y, &e, &brx, &bry) {
        Ok(rep) => {
            rec.ineq(5, rep.abs_functional, rep.classic_bound, sb);
            rec.ineq(6, rep.abs_functional, rep.refined_bound, sb);
            rec.ineq(7, rep.refined_bound, rep.classic_bound, sb);
            rec.ineq(7, 0.0, rep.refined_bound, sb);
            if cx.quad_value > 1e-6 && cy.quad_value > 1e-6 {
                rec.flag(8, rep.refined_bound < rep.classic_bound);
            }
        }
        Err(_) => rec.flag(6, false),
    }

    let quarter_x = 0.25 * brx.width() * brx.width();
    rec.ineq(9, cx.quad_value, quarter_x, sx);
    rec.ineq(9, projected_quad_unchecked(c, &brx), quarter_x, sx);

    // arbitrary pair for the chain step, no bracket involved
    let u = random_direction(&metric, field, rng).scaled(random_scalar(field, rng));
    let w = random_direction(&metric, field, rng).scaled(random_scalar(field, rng));
    let half = u.half_sum(&w).expect("same metric");
    rec.ineq(
        10,
        functional_unchecked(&u, &w, &e).re,
        gap_unchecked(&half, &e),
        scale(&[u.norm_sqr(), w.norm_sqr()]),
    );

    run_companion(cfg, &e, rng, &mut rec);
    run_dual(cfg, &e, rng, &mut rec);
}

fn run_companion(cfg: &FuzzConfig, e: &Vector, rng: &mut ChaCha8Rng, rec: &mut Recorder<'_>) {
    let field = cfg.field;
    let br = pick_bracket(field, rng);
    let plus = pick_admissible(e, &br, field, rng);
    let ctx = Context::new(field, Mode::Strict);
    let tol = condition_tolerance(&br);
    let bound = companion_bound(&br);

    // only (x + y)/2 admissible
    let v = random_direction(e.metric(), field, rng).scaled(random_scalar(field, rng) * 2.0);
    let (x, y) = (plus.add(&v).unwrap(), plus.sub(&v).unwrap());
    let s = scale(&[bound, x.norm_sqr(), y.norm_sqr()]);
    match ctx.companion(&x, &y, e, &br, tol, CompanionSign::Plus) {
        Ok(r) => rec.ineq(11, r.companion_value, r.bound, s),
        Err(_) => rec.flag(11, false),
    }

    // both (x ± y)/2 admissible
    let minus = pick_admissible(e, &br, field, rng);
    let (x, y) = (plus.add(&minus).unwrap(), plus.sub(&minus).unwrap());
    let s = scale(&[bound, x.norm_sqr(), y.norm_sqr()]);
    match ctx.companion(&x, &y, e, &br, tol, CompanionSign::Both) {
        Ok(r) => {
            rec.ineq(11, r.companion_value, r.bound, s);
            rec.ineq(12, r.companion_value.abs(), r.bound, s);
            if field == Field::Real {
                rec.ineq(13, r.functional.norm(), r.bound, s);
            }
        }
        Err(_) => rec.flag(12, false),
    }
}

fn run_dual(cfg: &FuzzConfig, e: &Vector, rng: &mut ChaCha8Rng, rec: &mut Recorder<'_>) {
    let field = cfg.field;
    let x = if rng.gen_ratio(1, 10) {
        e.scaled(random_scalar(field, rng))
    } else {
        random_direction(e.metric(), field, rng).scaled(random_scalar(field, rng) * 2.0)
    };
    let c = x.inner_unchecked(e);
    // disk that leaves <x, e> outside or on its boundary
    let radius = rng.gen_range(0.0..2.0);
    let dir = match field {
        Field::Real => Scalar::new(if rng.gen_bool(0.5) { 1.0 } else { -1.0 }, 0.0),
        Field::Complex => Scalar::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU)),
    };
    let gap = if rng.gen_ratio(1, 10) {
        0.0
    } else {
        rng.gen_range(0.0..2.0)
    };
    let br = Bracket::from_disk(c + dir * (radius + gap), radius).expect("finite");
    let s = scale(&[x.norm_sqr(), br.lo().norm_sqr(), br.hi().norm_sqr()]);
    match dual_chain(&x, e, &br, IDENTITY_RTOL * s) {
        Ok(d) => {
            rec.ineq(14, d.distance, d.middle, s.sqrt());
            rec.ineq(14, d.middle, d.upper, s.sqrt());
        }
        Err(_) => rec.flag(14, false),
    }
}
