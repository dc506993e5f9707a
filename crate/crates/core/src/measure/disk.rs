//! Minimal enclosing disk by randomized incremental construction, and
//! bracket estimation from data.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bracket::Bracket;
use crate::error::{GrussError, Result};
use crate::scalar::{real, Field, Scalar};

// fixed so that estimation is a pure function of its input
const SHUFFLE_SEED: u64 = 0x6472_7573_7321;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Disk {
    pub center: Scalar,
    pub radius: f64,
}

impl Disk {
    fn from_point(p: Scalar) -> Self {
        Self {
            center: p,
            radius: 0.0,
        }
    }

    fn from_pair(a: Scalar, b: Scalar) -> Self {
        let center = (a + b) * 0.5;
        Self {
            center,
            radius: (a - center).norm().max((b - center).norm()),
        }
    }

    /// Circumcircle, or the disk on the farthest pair for collinear input.
    fn from_triple(a: Scalar, b: Scalar, c: Scalar) -> Self {
        let (bx, by) = (b.re - a.re, b.im - a.im);
        let (cx, cy) = (c.re - a.re, c.im - a.im);
        let d = 2.0 * (bx * cy - by * cx);
        let span = (bx * bx + by * by).max(cx * cx + cy * cy);
        if d.abs() <= f64::EPSILON * span {
            let candidates = [
                Self::from_pair(a, b),
                Self::from_pair(a, c),
                Self::from_pair(b, c),
            ];
            return candidates
                .into_iter()
                .max_by(|p, q| p.radius.total_cmp(&q.radius))
                .unwrap();
        }
        let b2 = bx * bx + by * by;
        let c2 = cx * cx + cy * cy;
        let ux = (cy * b2 - by * c2) / d;
        let uy = (bx * c2 - cx * b2) / d;
        let center = a + Scalar::new(ux, uy);
        let radius = [a, b, c]
            .iter()
            .map(|p| (p - center).norm())
            .fold(0.0, f64::max);
        Self { center, radius }
    }

    fn contains(&self, p: Scalar) -> bool {
        let slack = 1e-12 * self.radius.max(self.center.norm()).max(f64::MIN_POSITIVE);
        (p - self.center).norm() <= self.radius + slack
    }
}

/// Smallest closed disk containing every point.
///
/// The returned radius is the exact maximum distance from the computed
/// centre, so every input point is covered.
pub fn minimal_enclosing_disk(points: &[Scalar]) -> Result<Disk> {
    if points.is_empty() {
        return Err(GrussError::EmptySpace);
    }
    let mut pts = points.to_vec();
    pts.shuffle(&mut ChaCha8Rng::seed_from_u64(SHUFFLE_SEED));

    let mut disk = Disk::from_point(pts[0]);
    for i in 1..pts.len() {
        if disk.contains(pts[i]) {
            continue;
        }
        disk = Disk::from_point(pts[i]);
        for j in 0..i {
            if disk.contains(pts[j]) {
                continue;
            }
            disk = Disk::from_pair(pts[i], pts[j]);
            for k in 0..j {
                if !disk.contains(pts[k]) {
                    disk = Disk::from_triple(pts[i], pts[j], pts[k]);
                }
            }
        }
    }
    let radius = points
        .iter()
        .map(|p| (p - disk.center).norm())
        .fold(0.0, f64::max);
    Ok(Disk {
        center: disk.center,
        radius,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EstimatedBracket {
    pub bracket: Bracket,
    /// `max_s |v(s) - mid| - radius`; non-positive up to rounding.
    pub cover_slack: f64,
}

/// Bracket covering every value: `(min, max)` in the real field, and the
/// minimal enclosing disk laid along the real axis in the complex field.
pub fn estimate_bracket(values: &[Scalar], field: Field) -> Result<EstimatedBracket> {
    if values.is_empty() {
        return Err(GrussError::EmptySpace);
    }
    crate::scalar::check_finite(values)?;
    field.admit(values)?;
    let bracket = match field {
        Field::Real => {
            let (lo, hi) = values
                .iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                    (lo.min(v.re), hi.max(v.re))
                });
            Bracket::new(real(lo), real(hi))?
        }
        Field::Complex => {
            let disk = minimal_enclosing_disk(values)?;
            Bracket::from_disk(disk.center, disk.radius)?
        }
    };
    let (mid, radius) = (bracket.mid(), bracket.radius());
    let cover_slack = values
        .iter()
        .map(|v| (v - mid).norm() - radius)
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(EstimatedBracket {
        bracket,
        cover_slack,
    })
}
