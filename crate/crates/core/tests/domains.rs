mod common;

use std::f64::consts::PI;

use approx::assert_abs_diff_eq;
use common::{random_interior, random_polygon};
use inaccess::domains::SampledConvexDomain;
use inaccess::{
    chord_through, maximize, oracle_max, oracle_r, r_value, DirectionAngle, Domain, DomainKind, OracleConfig, Point2,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Upper half disk of radius 2 glued to a lower half disk of radius 1 along y = 0.
fn two_half_disks(samples: usize) -> Domain {
    let mut v = Vec::new();
    for k in 0..=samples {
        v.push(Point2::from_angle(PI * k as f64 / samples as f64) * 2.0);
    }
    for k in 0..=samples {
        v.push(Point2::from_angle(PI + PI * k as f64 / samples as f64));
    }
    Domain::validate(v, DomainKind::Simple).unwrap()
}

// Convention-dependent: boundary pieces lying on a chord's line split it, so the
// chord along the seam stops where the small half disk ends.
#[test]
fn two_half_disks_chord_lengths() {
    let d = two_half_disks(2000);
    let p = Point2::ORIGIN;
    let along = chord_through(&d, p, DirectionAngle::new(0.0)).unwrap();
    assert_abs_diff_eq!(along.length, 2.0, epsilon = 1e-2);
    for theta in [0.2, 0.7, PI / 2.0, 2.0, 2.9] {
        let c = chord_through(&d, p, DirectionAngle::new(theta)).unwrap();
        assert_abs_diff_eq!(c.length, 3.0, epsilon = 1e-2);
    }
}

#[test]
fn r_decays_towards_the_boundary() {
    let (a, b) = (2.0, 1.0);
    let d: Domain = SampledConvexDomain::ellipse(a, b, 4096).unwrap().into();
    let mut last = f64::INFINITY;
    for k in 0..12 {
        let x = a * (1.0 - 0.5f64.powi(k + 1));
        let r = r_value(&d, Point2::new(x, 0.0)).unwrap();
        // The vertical chord bounds r from above.
        assert!(r <= 2.0 * b * (1.0 - (x / a).powi(2)).sqrt() + 1e-6, "x = {x}, r = {r}");
        assert!(r < last);
        last = r;
    }
    assert!(last < 0.05);
}

#[test]
fn fast_r_matches_the_oracle_on_random_polygons() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let config = OracleConfig {
        angle_samples: 20_000,
        ..OracleConfig::default()
    };
    for _ in 0..20 {
        let d: Domain = random_polygon(&mut rng).into();
        for _ in 0..5 {
            let p = random_interior(&mut rng, &d);
            let fast = r_value(&d, p).unwrap();
            let slow = oracle_r(&d, p, &config).unwrap();
            assert!(fast <= slow + 1e-9);
            assert!(slow - fast <= 1e-4 * d.diameter(), "{fast} vs {slow} at {p:?}");
        }
    }
}

#[test]
fn maximizer_is_at_least_the_grid_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let config = OracleConfig {
        angle_samples: 1024,
        grid_resolution: 16,
        refinement_levels: 4,
    };
    for _ in 0..6 {
        let d: Domain = random_polygon(&mut rng).into();
        let max = maximize(&d, 1e-9).unwrap();
        let (grid_r, _) = oracle_max(&d, &config).unwrap();
        // The grid search only ever undershoots.
        assert!(max.r >= grid_r - 1e-6, "{} < {grid_r}", max.r);
        assert_abs_diff_eq!(max.r, r_value(&d, max.point).unwrap(), epsilon = 1e-12);
    }
}
