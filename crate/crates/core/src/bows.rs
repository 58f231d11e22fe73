//! λ-bows: the envelope of length-`r` segments with endpoints on the two sides of a sector.
//!
//! In normal form the sector is bounded by the rays `(x, 0), x ≥ 0` and
//! `(λy, y), y ≥ 0` with `λ = cot α`. The parameter `θ` is the angle between
//! the segment and the negative horizontal axis.

use std::f64::consts::FRAC_PI_2;

use crate::domains::{Line, Point2};
use crate::error::{Error, Result};

/// Slack allowed on θ-range endpoints.
const THETA_SLACK: f64 = 1e-12;

/// Angular tolerance below which two sector lines count as parallel.
pub const PARALLEL_TOL: f64 = 1e-10;

/// Closed θ-interval on which the bow for `lambda` lies inside its sector.
pub fn theta_range(lambda: f64) -> (f64, f64) {
    let alpha = 1f64.atan2(lambda);
    if lambda < 0.0 {
        (0.0, std::f64::consts::PI - alpha)
    } else if lambda == 0.0 {
        (0.0, FRAC_PI_2)
    } else {
        (FRAC_PI_2 - alpha, FRAC_PI_2)
    }
}

fn check_theta(theta: f64, lo: f64, hi: f64) -> Result<()> {
    if theta.is_finite() && theta >= lo - THETA_SLACK && theta <= hi + THETA_SLACK {
        Ok(())
    } else {
        Err(Error::ThetaOutOfRange { theta, lo, hi })
    }
}

/// Normal-form bow point without range checks.
fn bow_unchecked(lambda: f64, r: f64, theta: f64) -> Point2 {
    let (s, c) = theta.sin_cos();
    Point2::new(
        r * (c * c * c + lambda * (s * s * s + 2.0 * s * c * c)),
        r * (s * s * s - lambda * s * s * c),
    )
}

/// Point of the λ-bow of radius `r` at parameter `theta`, in normal-form coordinates.
pub fn bow_point(lambda: f64, r: f64, theta: f64) -> Result<Point2> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::InvalidLevel { r });
    }
    let (lo, hi) = theta_range(lambda);
    check_theta(theta, lo, hi)?;
    Ok(bow_unchecked(lambda, r, theta))
}

/// Derivative of the bow with respect to `theta`, in normal form.
pub fn bow_tangent(lambda: f64, r: f64, theta: f64) -> Point2 {
    let (s, c) = theta.sin_cos();
    Point2::new(
        r * (-3.0 * c * c * s + lambda * (3.0 * s * s * c + 2.0 * c * c * c - 4.0 * s * s * c)),
        r * (3.0 * s * s * c - lambda * (2.0 * s * c * c - s * s * s)),
    )
}

/// Endpoints of the length-`r` segment whose envelope point is `bow_point(lambda, r, theta)`:
/// the first on the horizontal side, the second on the slanted side.
pub fn bow_segment(lambda: f64, r: f64, theta: f64) -> (Point2, Point2) {
    let (s, c) = theta.sin_cos();
    (Point2::new(lambda * r * s + r * c, 0.0), Point2::new(lambda * r * s, r * s))
}

/// Isometry taking a sector of the plane to normal form.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SectorFrame {
    /// Intersection of the two sector lines.
    pub apex: Point2,
    /// World angle of the side that maps to the positive x axis.
    pub rotation: f64,
    /// The sector has the opposite chirality to normal form; y is negated.
    pub reflected: bool,
    /// Cotangent of the sector angle.
    pub lambda: f64,
}

impl SectorFrame {
    /// World → normal form.
    pub fn to_normal(&self, w: Point2) -> Point2 {
        let q = (w - self.apex).rotate(-self.rotation);
        if self.reflected {
            Point2::new(q.x, -q.y)
        } else {
            q
        }
    }

    /// Normal form → world.
    pub fn to_world(&self, q: Point2) -> Point2 {
        let q = if self.reflected { Point2::new(q.x, -q.y) } else { q };
        self.apex + q.rotate(self.rotation)
    }

    /// Bow parameter of a segment running from side A (`pa`) to side B (`pb`).
    pub fn segment_theta(&self, pa: Point2, pb: Point2) -> f64 {
        let d = self.to_normal(pb) - self.to_normal(pa);
        d.y.atan2(-d.x)
    }

    /// Unit vector along side A, away from the apex.
    pub fn side_a(&self) -> Point2 {
        Point2::from_angle(self.rotation)
    }

    /// Unit vector along side B, away from the apex.
    pub fn side_b(&self) -> Point2 {
        let alpha = 1f64.atan2(self.lambda);
        self.to_world(Point2::from_angle(alpha)) - self.apex
    }
}

/// Frame for the sector cut out by `line_a` and `line_b` that contains `containing`.
///
/// `line_a` maps onto the horizontal side of the normal form.
pub fn sector_frame(line_a: &Line, line_b: &Line, containing: Point2) -> Result<SectorFrame> {
    let apex = line_a.intersect(line_b, PARALLEL_TOL).ok_or(Error::ParallelLines)?;
    let da = line_a.direction;
    let db = line_b.direction;
    let w = containing - apex;
    // w = s·da + t·db
    let det = da.cross(db);
    let s = w.cross(db) / det;
    let t = da.cross(w) / det;
    let ua = if s < 0.0 { -da } else { da };
    let ub = if t < 0.0 { -db } else { db };
    let cross = ua.cross(ub);
    Ok(SectorFrame {
        apex,
        rotation: ua.atan2(),
        reflected: cross < 0.0,
        lambda: ua.dot(ub) / cross.abs(),
    })
}

/// A piece of a λ-bow placed in the world.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BowArc {
    pub frame: SectorFrame,
    pub r: f64,
    pub theta_lo: f64,
    pub theta_hi: f64,
}

impl BowArc {
    /// Checks that `[theta_lo, theta_hi]` is ordered and inside the bow's valid range.
    pub fn new(frame: SectorFrame, r: f64, theta_lo: f64, theta_hi: f64) -> Result<Self> {
        if !(r > 0.0 && r.is_finite()) {
            return Err(Error::InvalidLevel { r });
        }
        let (lo, hi) = theta_range(frame.lambda);
        check_theta(theta_lo, lo, hi)?;
        check_theta(theta_hi, theta_lo, hi)?;
        Ok(BowArc {
            frame,
            r,
            theta_lo: theta_lo.max(lo),
            theta_hi: theta_hi.min(hi),
        })
    }

    /// The whole bow inside its sector.
    pub fn full(frame: SectorFrame, r: f64) -> Result<Self> {
        let (lo, hi) = theta_range(frame.lambda);
        BowArc::new(frame, r, lo, hi)
    }

    pub fn start(&self) -> Point2 {
        self.frame.to_world(bow_unchecked(self.frame.lambda, self.r, self.theta_lo))
    }

    pub fn end(&self) -> Point2 {
        self.frame.to_world(bow_unchecked(self.frame.lambda, self.r, self.theta_hi))
    }

    /// `k ≥ 2` evenly spaced world points from `theta_lo` to `theta_hi`.
    pub fn sample(&self, k: usize) -> Vec<Point2> {
        let k = k.max(2);
        (0..k)
            .map(|i| {
                let t = self.theta_lo + (self.theta_hi - self.theta_lo) * i as f64 / (k - 1) as f64;
                self.frame.to_world(bow_unchecked(self.frame.lambda, self.r, t))
            })
            .collect()
    }
}

/// World point of `arc` at `theta`.
pub fn bow_world(arc: &BowArc, theta: f64) -> Result<Point2> {
    check_theta(theta, arc.theta_lo, arc.theta_hi)?;
    Ok(arc.frame.to_world(bow_unchecked(arc.frame.lambda, arc.r, theta)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_3, FRAC_PI_4, PI};

    fn close(a: Point2, b: Point2, tol: f64) -> bool {
        (a - b).hypot() <= tol
    }

    #[test]
    fn astroid_points() {
        let q = bow_point(0.0, 1.0, FRAC_PI_4).unwrap();
        let e = 2f64.powf(-1.5);
        assert!(close(q, Point2::new(e, e), 1e-15));
        assert!(close(bow_point(0.0, 1.0, 0.0).unwrap(), Point2::new(1.0, 0.0), 0.0));
    }

    #[test]
    fn equilateral_maximizer_on_bow() {
        let s = 3f64.sqrt();
        let q = bow_point(1.0 / s, 4.0 / (3.0 * s), FRAC_PI_3).unwrap();
        assert!(close(q, Point2::new(1.0 / s, 1.0 / 3.0), 1e-15));
    }

    #[test]
    fn ranges_per_angle_class() {
        assert_eq!(theta_range(0.0), (0.0, FRAC_PI_2));
        let (lo, hi) = theta_range(1.0);
        assert!((lo - FRAC_PI_4).abs() < 1e-15 && hi == FRAC_PI_2);
        let (lo, hi) = theta_range(-1.0);
        assert!(lo == 0.0 && (hi - FRAC_PI_4).abs() < 1e-15);
        assert!(matches!(bow_point(1.0, 1.0, 0.1), Err(Error::ThetaOutOfRange { .. })));
        assert!(matches!(bow_point(-1.0, 1.0, 1.0), Err(Error::ThetaOutOfRange { .. })));
        assert!(bow_point(1.0, 1.0, FRAC_PI_2).is_ok());
    }

    #[test]
    fn range_ends_touch_the_sides() {
        for lambda in [-2.0, -0.5, 0.0, 0.5, 1.0, 3.0] {
            let (lo, hi) = theta_range(lambda);
            let a = bow_point(lambda, 1.0, lo).unwrap();
            let b = bow_point(lambda, 1.0, hi).unwrap();
            assert!(a.y.abs() < 1e-12, "{lambda}: {a}");
            // Side B is x = λy.
            assert!((b.x - lambda * b.y).abs() < 1e-12, "{lambda}: {b}");
        }
    }

    #[test]
    fn perpendicular_axes_give_identity() {
        let x_axis = Line::new(Point2::ORIGIN, Point2::new(1.0, 0.0));
        let y_axis = Line::new(Point2::ORIGIN, Point2::new(0.0, 1.0));
        let f = sector_frame(&x_axis, &y_axis, Point2::new(1.0, 1.0)).unwrap();
        assert!(close(f.apex, Point2::ORIGIN, 1e-15));
        assert!(f.lambda.abs() < 1e-15);
        assert!(f.rotation.abs() < 1e-15 && !f.reflected);
        let q = Point2::new(0.3, 0.7);
        assert!(close(f.to_normal(q), q, 1e-15));
    }

    #[test]
    fn forty_five_degree_sector() {
        let a = Line::new(Point2::ORIGIN, Point2::new(1.0, 0.0));
        let b = Line::new(Point2::ORIGIN, Point2::new(1.0, 1.0));
        let f = sector_frame(&a, &b, Point2::new(2.0, 0.5)).unwrap();
        assert!((f.lambda - 1.0).abs() < 1e-12);
    }

    #[test]
    fn reflected_sector_maps_to_normal_form() {
        // Sector below the x axis, between the x axis and y = -x.
        let a = Line::new(Point2::new(1.0, 2.0), Point2::new(-1.0, 0.0));
        let b = Line::new(Point2::new(1.0, 2.0), Point2::new(1.0, -1.0));
        let f = sector_frame(&a, &b, Point2::new(3.0, 1.5)).unwrap();
        assert!(f.reflected);
        assert!((f.lambda - 1.0).abs() < 1e-12);
        let q = f.to_normal(Point2::new(3.0, 1.5));
        assert!(q.y > 0.0 && q.x > f.lambda * q.y);
        let w = Point2::new(-4.0, 7.5);
        assert!(close(f.to_world(f.to_normal(w)), w, 1e-12));
        assert!((f.to_normal(w).distance(f.to_normal(Point2::ORIGIN)) - w.hypot()).abs() < 1e-12);
    }

    #[test]
    fn parallel_lines_rejected() {
        let a = Line::new(Point2::ORIGIN, Point2::new(1.0, 0.0));
        let b = Line::new(Point2::new(0.0, 1.0), Point2::new(-1.0, 0.0));
        assert_eq!(sector_frame(&a, &b, Point2::new(0.0, 0.5)), Err(Error::ParallelLines));
    }

    #[test]
    fn equilateral_left_vertex_sector() {
        let s = 3f64.sqrt();
        let base = Line::through(Point2::ORIGIN, Point2::new(2.0 / s, 0.0));
        let left = Line::through(Point2::new(1.0 / s, 1.0), Point2::ORIGIN);
        let f = sector_frame(&base, &left, Point2::new(1.0 / s, 1.0 / 3.0)).unwrap();
        assert!((f.lambda - 1.0 / s).abs() < 1e-12);
        let arc = BowArc::full(f, 4.0 / (3.0 * s)).unwrap();
        let p = bow_world(&arc, FRAC_PI_3).unwrap();
        assert!(close(p, Point2::new(1.0 / s, 1.0 / 3.0), 1e-12));
    }

    #[test]
    fn translated_frame() {
        let a = Line::new(Point2::new(5.0, 5.0), Point2::new(1.0, 0.0));
        let b = Line::new(Point2::new(5.0, 5.0), Point2::new(0.0, 1.0));
        let f = sector_frame(&a, &b, Point2::new(6.0, 6.0)).unwrap();
        let arc = BowArc::full(f, 1.0).unwrap();
        let e = 2f64.powf(-1.5);
        assert!(close(bow_world(&arc, FRAC_PI_4).unwrap(), Point2::new(5.0 + e, 5.0 + e), 1e-12));
        assert!(matches!(bow_world(&arc, PI), Err(Error::ThetaOutOfRange { .. })));
    }

    #[test]
    fn segment_theta_inverts_bow_segment() {
        let a = Line::new(Point2::new(1.0, -1.0), Point2::new(0.3, 1.0));
        let b = Line::new(Point2::new(1.0, -1.0), Point2::new(-1.0, 0.4));
        let f = sector_frame(&a, &b, Point2::new(0.0, 0.5)).unwrap();
        let (lo, hi) = theta_range(f.lambda);
        let theta = 0.3 * lo + 0.7 * hi;
        let (pa, pb) = bow_segment(f.lambda, 0.8, theta);
        let got = f.segment_theta(f.to_world(pa), f.to_world(pb));
        assert!((got - theta).abs() < 1e-12);
    }

    #[test]
    fn side_b_direction() {
        let a = Line::new(Point2::ORIGIN, Point2::new(1.0, 0.0));
        let b = Line::new(Point2::ORIGIN, Point2::new(1.0, 1.0));
        let f = sector_frame(&a, &b, Point2::new(2.0, 0.5)).unwrap();
        assert!(close(f.side_b(), Point2::new(1.0, 1.0).normalize(), 1e-12));
        assert!(close(f.side_a(), Point2::new(1.0, 0.0), 1e-12));
    }
}
