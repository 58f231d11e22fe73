#![allow(dead_code)]

use std::f64::consts::TAU;

use inaccess::{ConvexPolygon, Domain, Point2};
use proptest::prelude::*;
use rand::Rng;

/// Convex polygon from sorted angles on a stretched, sheared, rotated circle; `None` if degenerate.
pub fn polygon_from(mut angles: Vec<f64>, sx: f64, sy: f64, shear: f64, rot: f64) -> Option<ConvexPolygon> {
    angles.sort_by(f64::total_cmp);
    let raw: Vec<Point2> = angles
        .iter()
        .map(|&t| Point2::new(sx * t.cos() + shear * t.sin(), sy * t.sin()).rotate(rot))
        .collect();
    let poly = ConvexPolygon::new(raw).ok()?;
    // Skip slivers whose inradius is tiny next to the diameter.
    if poly.signed_distance(poly.centroid()) < 0.02 * poly.diameter() {
        return None;
    }
    Some(poly)
}

pub fn polygon_strategy() -> impl Strategy<Value = Option<ConvexPolygon>> {
    (
        prop::collection::vec(0.0..TAU, 3..=12),
        0.3..1.0f64,
        0.3..1.0f64,
        -0.5..0.5f64,
        0.0..TAU,
    )
        .prop_map(|(angles, sx, sy, shear, rot)| polygon_from(angles, sx, sy, shear, rot))
}

/// Barycentric point of the polygon built from `weights` (one per vertex, any positive values).
pub fn interior_from_weights(poly: &ConvexPolygon, weights: &[f64]) -> Point2 {
    let total: f64 = weights.iter().take(poly.len()).sum();
    poly.vertices()
        .iter()
        .zip(weights)
        .fold(Point2::ORIGIN, |acc, (&v, &w)| acc + v * (w / total))
}

pub fn random_polygon(rng: &mut impl Rng) -> ConvexPolygon {
    loop {
        let n = rng.gen_range(3..=12);
        let angles = (0..n).map(|_| rng.gen_range(0.0..TAU)).collect();
        if let Some(p) = polygon_from(
            angles,
            rng.gen_range(0.3..1.0),
            rng.gen_range(0.3..1.0),
            rng.gen_range(-0.5..0.5),
            rng.gen_range(0.0..TAU),
        ) {
            return p;
        }
    }
}

pub fn random_interior(rng: &mut impl Rng, domain: &Domain) -> Point2 {
    let (lo, hi) = domain.bounding_box();
    loop {
        let p = Point2::new(rng.gen_range(lo.x..hi.x), rng.gen_range(lo.y..hi.y));
        if domain.check_interior(p).is_ok() {
            return p;
        }
    }
}
