//! Brute-force references built only on [`chord_through`].

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::domains::{chord_through, DirectionAngle, Domain, Point2};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Directions swept per point.
    pub angle_samples: usize,
    /// Grid points per axis.
    pub grid_resolution: usize,
    /// Zoom passes around the best grid point, each shrinking the window fourfold.
    pub refinement_levels: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            angle_samples: 100_000,
            grid_resolution: 400,
            refinement_levels: 3,
        }
    }
}

impl OracleConfig {
    fn check(&self) -> Result<()> {
        if self.angle_samples < 2 || self.grid_resolution < 2 {
            return Err(Error::InvalidShape(format!("oracle counts must be at least 2: {self:?}")));
        }
        Ok(())
    }
}

/// Shortest of `angle_samples` uniformly spaced chords through `p`.
pub fn oracle_r(domain: &Domain, p: Point2, config: &OracleConfig) -> Result<f64> {
    config.check()?;
    domain.check_interior(p)?;
    let m = config.angle_samples;
    let best = (0..m)
        .into_par_iter()
        .map(|k| {
            let theta = DirectionAngle::new(PI * k as f64 / m as f64);
            chord_through(domain, p, theta).map(|c| c.length).unwrap_or(f64::INFINITY)
        })
        .reduce(|| f64::INFINITY, f64::min);
    Ok(best)
}

/// Grid search for the largest [`oracle_r`], refined around the best point.
pub fn oracle_max(domain: &Domain, config: &OracleConfig) -> Result<(f64, Point2)> {
    config.check()?;
    let (lo, hi) = domain.bounding_box();
    let mut center = lo.midpoint(hi);
    let mut half = (hi - lo) * 0.5;
    let mut best = (f64::NEG_INFINITY, center);
    let n = config.grid_resolution;
    for _ in 0..=config.refinement_levels {
        let step = Point2::new(2.0 * half.x / (n - 1) as f64, 2.0 * half.y / (n - 1) as f64);
        let origin = center - half;
        let points: Vec<Point2> = (0..n * n)
            .map(|k| origin + Point2::new(step.x * (k % n) as f64, step.y * (k / n) as f64))
            .filter(|&q| domain.check_interior(q).is_ok())
            .collect();
        for q in points {
            let v = oracle_r(domain, q, config)?;
            if v > best.0 {
                best = (v, q);
            }
        }
        center = best.1;
        half = half * 0.25;
    }
    if best.0.is_finite() {
        Ok(best)
    } else {
        Err(Error::PointOutside { x: center.x, y: center.y })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::ConvexPolygon;

    fn light() -> OracleConfig {
        OracleConfig {
            angle_samples: 2048,
            grid_resolution: 24,
            refinement_levels: 6,
        }
    }

    #[test]
    fn square_center() {
        let d: Domain = ConvexPolygon::rectangle(0.0, 0.0, 1.0, 1.0).unwrap().into();
        let r = oracle_r(&d, Point2::new(0.5, 0.5), &OracleConfig::default()).unwrap();
        assert!((r - 1.0).abs() < 1e-8);
    }

    #[test]
    fn rectangle_corner_point() {
        let d: Domain = ConvexPolygon::rectangle(0.0, 0.0, 2.0, 1.0).unwrap().into();
        let r = oracle_r(&d, Point2::new(0.2, 0.5), &OracleConfig::default()).unwrap();
        let exact = (0.2f64.powf(2.0 / 3.0) + 0.5f64.powf(2.0 / 3.0)).powf(1.5);
        assert!(r >= exact - 1e-12);
        assert!((r - 0.958_229_895_384_153_4).abs() < 1e-6);
    }

    #[test]
    fn equilateral_center() {
        let s = 3f64.sqrt();
        let d: Domain = ConvexPolygon::new(vec![Point2::ORIGIN, Point2::new(2.0 / s, 0.0), Point2::new(1.0 / s, 1.0)])
            .unwrap()
            .into();
        let r = oracle_r(&d, Point2::new(1.0 / s, 1.0 / 3.0), &OracleConfig::default()).unwrap();
        assert!((r - 4.0 / (3.0 * s)).abs() < 1e-7);
        let (big_r, p) = oracle_max(&d, &light()).unwrap();
        assert!((big_r - 0.7698).abs() < 1e-3);
        assert!(p.distance(Point2::new(1.0 / s, 1.0 / 3.0)) < 1e-2);
    }

    #[test]
    fn square_and_isosceles_maxima() {
        let sq: Domain = ConvexPolygon::rectangle(0.0, 0.0, 1.0, 1.0).unwrap().into();
        assert!((oracle_max(&sq, &light()).unwrap().0 - 1.0).abs() < 1e-3);
        let tri: Domain = ConvexPolygon::new(vec![Point2::ORIGIN, Point2::new(2.0, 0.0), Point2::new(1.0, 1.0)])
            .unwrap()
            .into();
        let sol = crate::analytic::isosceles_solve(1.0).unwrap();
        assert!((oracle_max(&tri, &light()).unwrap().0 - sol.r).abs() < 1e-3);
    }

    #[test]
    fn deterministic() {
        let d: Domain = ConvexPolygon::new(vec![Point2::ORIGIN, Point2::new(3.0, 0.4), Point2::new(1.0, 2.0)])
            .unwrap()
            .into();
        let a = oracle_max(&d, &light()).unwrap();
        let b = oracle_max(&d, &light()).unwrap();
        assert_eq!(a.0.to_bits(), b.0.to_bits());
        assert_eq!(a.1, b.1);
    }

    #[test]
    fn rejects_tiny_counts() {
        let d: Domain = ConvexPolygon::rectangle(0.0, 0.0, 1.0, 1.0).unwrap().into();
        let cfg = OracleConfig {
            angle_samples: 1,
            ..OracleConfig::default()
        };
        assert!(oracle_r(&d, Point2::new(0.5, 0.5), &cfg).is_err());
    }
}
