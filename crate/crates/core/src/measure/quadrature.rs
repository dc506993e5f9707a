use serde::{Deserialize, Serialize};

use crate::error::{GrussError, Result};
use crate::metric::SpaceMetric;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    Midpoint,
    Trapezoid,
    Simpson,
}

impl std::str::FromStr for Rule {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "midpoint" => Ok(Rule::Midpoint),
            "trapezoid" => Ok(Rule::Trapezoid),
            "simpson" => Ok(Rule::Simpson),
            other => Err(format!("unknown rule `{other}`")),
        }
    }
}

/// Composite rule on `[a, b]`.
///
/// `n` counts cells for the midpoint rule (n nodes) and sub-intervals for
/// the trapezoid and Simpson rules (n + 1 nodes; Simpson needs n even).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub a: f64,
    pub b: f64,
    pub n: usize,
    pub rule: Rule,
}

impl GridSpec {
    pub fn new(a: f64, b: f64, n: usize, rule: Rule) -> Result<Self> {
        let spec = Self { a, b, n, rule };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.a.is_finite() && self.b.is_finite() && self.a < self.b) {
            return Err(GrussError::BadRule(format!(
                "interval [{}, {}] must be finite with a < b",
                self.a, self.b
            )));
        }
        if self.n == 0 {
            return Err(GrussError::BadRule("n must be positive".into()));
        }
        if self.rule == Rule::Simpson && !self.n.is_multiple_of(2) {
            return Err(GrussError::BadRule(format!(
                "simpson needs an odd node count, got {}",
                self.n + 1
            )));
        }
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        match self.rule {
            Rule::Midpoint => self.n,
            Rule::Trapezoid | Rule::Simpson => self.n + 1,
        }
    }

    pub fn nodes(&self) -> Vec<f64> {
        let h = (self.b - self.a) / self.n as f64;
        match self.rule {
            Rule::Midpoint => (0..self.n).map(|i| self.a + (i as f64 + 0.5) * h).collect(),
            Rule::Trapezoid | Rule::Simpson => (0..=self.n)
                .map(|i| {
                    if i == self.n {
                        self.b
                    } else {
                        self.a + i as f64 * h
                    }
                })
                .collect(),
        }
    }

    /// Weights normalized so that they sum to 1.
    fn unit_weights(&self) -> Vec<f64> {
        let n = self.n as f64;
        match self.rule {
            Rule::Midpoint => vec![1.0 / n; self.n],
            Rule::Trapezoid => (0..=self.n)
                .map(|i| {
                    if i == 0 || i == self.n {
                        0.5 / n
                    } else {
                        1.0 / n
                    }
                })
                .collect(),
            Rule::Simpson => (0..=self.n)
                .map(|i| {
                    let c = if i == 0 || i == self.n {
                        1.0
                    } else if i % 2 == 1 {
                        4.0
                    } else {
                        2.0
                    };
                    c / (3.0 * n)
                })
                .collect(),
        }
    }
}

/// Metric of the rule scaled by `1/(b - a)`, so the constant function 1 is a
/// unit vector, together with the node positions.
pub fn quadrature_metric(spec: &GridSpec) -> Result<(SpaceMetric, Vec<f64>)> {
    spec.validate()?;
    Ok((SpaceMetric::new(spec.unit_weights())?, spec.nodes()))
}

/// Unnormalized rule weights, summing to `b - a`.
pub fn quadrature_metric_raw(spec: &GridSpec) -> Result<(SpaceMetric, Vec<f64>)> {
    spec.validate()?;
    let len = spec.b - spec.a;
    let weights = spec.unit_weights().into_iter().map(|w| w * len).collect();
    Ok((SpaceMetric::new(weights)?, spec.nodes()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn midpoint_four_cells() {
        let (m, nodes) =
            quadrature_metric(&GridSpec::new(0.0, 1.0, 4, Rule::Midpoint).unwrap()).unwrap();
        assert_eq!(nodes, vec![0.125, 0.375, 0.625, 0.875]);
        assert_eq!(m.weights(), &[0.25; 4]);
    }

    #[test]
    fn trapezoid_two_intervals() {
        let (m, nodes) =
            quadrature_metric(&GridSpec::new(0.0, 1.0, 2, Rule::Trapezoid).unwrap()).unwrap();
        assert_eq!(nodes, vec![0.0, 0.5, 1.0]);
        assert_eq!(m.weights(), &[0.25, 0.5, 0.25]);
    }

    #[test]
    fn simpson_weights() {
        let (m, _) =
            quadrature_metric(&GridSpec::new(-1.0, 2.0, 2, Rule::Simpson).unwrap()).unwrap();
        assert_abs_diff_eq!(m.weights()[0], 1.0 / 6.0);
        assert_abs_diff_eq!(m.weights()[1], 4.0 / 6.0);
        assert!(matches!(
            GridSpec::new(0.0, 1.0, 3, Rule::Simpson),
            Err(GrussError::BadRule(_))
        ));
    }

    #[test]
    fn every_rule_has_unit_mass() {
        for rule in [Rule::Midpoint, Rule::Trapezoid, Rule::Simpson] {
            for n in [2, 6, 10, 100] {
                let spec = GridSpec::new(-3.0, 4.5, n, rule).unwrap();
                let (m, nodes) = quadrature_metric(&spec).unwrap();
                assert_eq!(m.dim(), spec.node_count());
                assert_abs_diff_eq!(m.total_mass(), 1.0, epsilon = 1e-14);
                assert!(nodes.iter().all(|&s| (-3.0..=4.5).contains(&s)));
                let (raw, _) = quadrature_metric_raw(&spec).unwrap();
                assert_abs_diff_eq!(raw.total_mass(), 7.5, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn invalid_interval() {
        assert!(GridSpec::new(1.0, 1.0, 4, Rule::Midpoint).is_err());
        assert!(GridSpec::new(0.0, 1.0, 0, Rule::Trapezoid).is_err());
    }
}
