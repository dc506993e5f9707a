use gruss_core::sharpness::{random_bracket, random_direction, random_metric, sample_admissible};
use gruss_core::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
struct Tuple {
    field: Field,
    e: Vector,
    x: Vector,
    y: Vector,
    brx: Bracket,
    bry: Bracket,
}

fn tuple(seed: u64, dim: usize, complex: bool) -> Tuple {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let field = if complex { Field::Complex } else { Field::Real };
    let metric = random_metric(dim, &mut rng);
    let e = random_direction(&metric, field, &mut rng);
    let brx = random_bracket(field, 2.0, &mut rng);
    let bry = random_bracket(field, 0.5, &mut rng);
    let x = sample_admissible(&e, &brx, field, &mut rng);
    let y = sample_admissible(&e, &bry, field, &mut rng);
    Tuple {
        field,
        e,
        x,
        y,
        brx,
        bry,
    }
}

fn arb_tuple() -> impl Strategy<Value = Tuple> {
    (any::<u64>(), 1usize..12, any::<bool>()).prop_map(|(s, d, c)| tuple(s, d, c))
}

fn s(v: &[f64]) -> f64 {
    tolerance::scale(v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn equivalence_residual_vanishes(t in arb_tuple()) {
        let r = condition_check(&t.x, &t.e, &t.brx, 1e-9).unwrap();
        let sc = s(&[t.x.norm_sqr(), t.brx.radius().powi(2)]);
        prop_assert!(r.equiv_residual.abs() <= 1e-12 * sc);
        // both forms agree on sign
        prop_assert!(r.satisfied);
        prop_assert!(r.norm_slack * (t.brx.radius() + (t.brx.radius() - r.norm_slack)) >= -1e-9 * sc);
    }

    #[test]
    fn schwarz_premise(t in arb_tuple()) {
        let f = chebyshev_functional(&t.x, &t.y, &t.e).unwrap();
        let gx = schwarz_gap(&t.x, &t.e).unwrap();
        let gy = schwarz_gap(&t.y, &t.e).unwrap();
        let sc = s(&[t.x.norm_sqr() * t.y.norm_sqr()]);
        prop_assert!(f.norm_sqr() <= gx * gy + 1e-12 * sc);
    }

    #[test]
    fn bounds_are_ordered(t in arb_tuple()) {
        let ctx = Context::new(t.field, Mode::Strict);
        let r = ctx.gruss(&t.x, &t.y, &t.e, &t.brx, &t.bry).unwrap();
        let tol = 1e-9 * s(&[r.classic_bound]);
        prop_assert!(r.certified);
        prop_assert!(r.abs_functional <= r.refined_bound + tol);
        prop_assert!(r.refined_bound <= r.classic_bound + tol);
        prop_assert!(r.refined_bound >= 0.0);
        prop_assert!(r.cond_x.quad_value <= 0.25 * t.brx.width().powi(2) + tol);
    }

    #[test]
    fn scaling_covariance(t in arb_tuple(), a in -3.0f64..3.0, b in -3.0f64..3.0, c in -3.0f64..3.0) {
        let alpha = Scalar::new(a, if t.field == Field::Complex { c } else { 0.0 });
        let beta = Scalar::new(b, if t.field == Field::Complex { a } else { 0.0 });
        let base = chebyshev_functional(&t.x, &t.y, &t.e).unwrap();
        let scaled = chebyshev_functional(&t.x.scaled(alpha), &t.y.scaled(beta), &t.e).unwrap();
        let expect = alpha * beta.conj() * base;
        prop_assert!((scaled - expect).norm() <= 1e-12 * s(&[t.x.norm_sqr() * t.y.norm_sqr() * 81.0]));

        let r = evaluate_gruss(&t.x, &t.y, &t.e, &t.brx, &t.bry, Mode::Strict).unwrap();
        let rs = evaluate_gruss(
            &t.x.scaled(alpha), &t.y.scaled(beta), &t.e,
            &t.brx.scaled(alpha), &t.bry.scaled(beta), Mode::Diagnostic,
        ).unwrap();
        let k = alpha.norm() * beta.norm();
        prop_assert!((rs.classic_bound - k * r.classic_bound).abs() <= 1e-12 * s(&[rs.classic_bound]));
        prop_assert!((rs.refined_bound - k * r.refined_bound).abs() <= 1e-9 * s(&[rs.classic_bound]));
    }

    #[test]
    fn companion_chain_step(seed in any::<u64>(), dim in 1usize..10, complex in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let field = if complex { Field::Complex } else { Field::Real };
        let m = random_metric(dim, &mut rng);
        let e = random_direction(&m, field, &mut rng);
        let x = random_direction(&m, field, &mut rng).scaled(real(4.0));
        let y = random_direction(&m, field, &mut rng).scaled(Scalar::new(-0.5, 1.0));
        let lhs = companion_value(&x, &y, &e).unwrap();
        let rhs = schwarz_gap(&x.half_sum(&y).unwrap(), &e).unwrap();
        prop_assert!(lhs <= rhs + 1e-12 * 16.0);
    }

    #[test]
    fn identity_holds_everywhere(seed in any::<u64>(), dim in 1usize..10, lo in -5.0f64..5.0, hi in -5.0f64..5.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_metric(dim, &mut rng);
        let e = random_direction(&m, Field::Complex, &mut rng);
        let x = random_direction(&m, Field::Complex, &mut rng).scaled(Scalar::new(lo, hi));
        let br = Bracket::new(Scalar::new(lo, hi), Scalar::new(hi, -lo)).unwrap();
        let r = identity_residual(&x, &e, &br).unwrap();
        prop_assert!(r.abs() <= 1e-12 * s(&[x.norm_sqr(), 50.0]));
    }
}

#[test]
fn unit_tolerance_boundary() {
    let m = SpaceMetric::new(vec![0.5, 0.5]).unwrap();
    let e = Vector::from_real(&m, &[1.0 + 5e-10, 1.0 + 5e-10]).unwrap();
    let x = Vector::from_real(&m, &[0.0, 1.0]).unwrap();
    assert!(chebyshev_functional(&x, &x, &e).is_ok());
    let e = Vector::from_real(&m, &[1.0 + 2e-9, 1.0 + 2e-9]).unwrap();
    assert!(matches!(
        chebyshev_functional(&x, &x, &e),
        Err(GrussError::NotUnitVector { .. })
    ));
    let fixed = UnitPolicy::Normalize.apply(&e).unwrap();
    assert!(chebyshev_functional(&x, &x, &fixed).is_ok());
}
