use serde::{Deserialize, Serialize};

use crate::bounds::classic_bound;
use crate::bracket::Bracket;
use crate::companion::companion_bound;
use crate::functional::functional_unchecked;
use crate::measure::mean_metric;
use crate::metric::SpaceMetric;
use crate::scalar::real;
use crate::vector::Vector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    Classic,
    Companion,
}

/// A full input tuple. For companion tuples `brx` and `bry` coincide and
/// bracket `(x + y)/2`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub metric: SpaceMetric,
    pub e: Vector,
    pub x: Vector,
    pub y: Vector,
    pub brx: Bracket,
    pub bry: Bracket,
}

impl Witness {
    /// `|T| / ¼|Φ-φ||Γ-γ|` or `Re T / ¼|Γ-γ|²`; zero when the bound vanishes.
    pub fn ratio(&self, kind: WitnessKind) -> f64 {
        let t = functional_unchecked(&self.x, &self.y, &self.e);
        let (num, den) = match kind {
            WitnessKind::Classic => (t.norm(), classic_bound(&self.brx, &self.bry)),
            WitnessKind::Companion => (t.re, companion_bound(&self.bry)),
        };
        if den > 0.0 {
            num / den
        } else {
            0.0
        }
    }
}

/// The two-point equality case: mean metric on two points, `e = (1, 1)`,
/// `x = y = (0, 1)` and brackets `(0, 1)`.
pub fn equality_witness(kind: WitnessKind) -> Witness {
    equality_witness_in(kind, 2)
}

/// Equality case embedded in dimension `dim`.
///
/// For `dim >= 2` the first coordinate carries mass ½ and the remaining
/// `dim - 1` share the other ½, with `x = y` the indicator of the latter; the
/// ratio is 1 in exact arithmetic. In dimension 1 `e` spans the space and
/// the functional vanishes identically.
/// Both kinds share the same tuple.
pub fn equality_witness_in(_kind: WitnessKind, dim: usize) -> Witness {
    let br = Bracket::real(0.0, 1.0).expect("finite");
    let metric = if dim == 2 {
        mean_metric(2).expect("non-empty")
    } else if dim <= 1 {
        mean_metric(1).expect("non-empty")
    } else {
        let rest = 0.5 / (dim - 1) as f64;
        let weights = std::iter::once(0.5)
            .chain(std::iter::repeat_n(rest, dim - 1))
            .collect();
        SpaceMetric::new(weights).expect("positive weights")
    };
    let n = metric.dim();
    let ones = Vector::constant(&metric, real(1.0));
    let e = if (ones.norm_sqr() - 1.0).abs() <= 1e-15 {
        ones
    } else {
        ones.normalized().expect("non-zero")
    };
    let x = if n == 1 {
        e.clone()
    } else {
        let coords: Vec<f64> = (0..n).map(|i| if i == 0 { 0.0 } else { 1.0 }).collect();
        Vector::from_real(&metric, &coords).expect("matching length")
    };
    Witness {
        metric,
        e,
        y: x.clone(),
        x,
        brx: br,
        bry: br,
    }
}
