//! Random fixtures shared by the acceptance run.

use std::f64::consts::TAU;

use inaccess::{ConvexPolygon, Domain, Point2};
use rand::Rng;

/// A random convex polygon with `min..=max` vertices, normalized to unit diameter.
///
/// Vertices are sorted random angles on a circle, stretched by a random
/// affine map, then rescaled so the diameter is 1 with the centroid at the origin.
pub fn random_convex_polygon(rng: &mut impl Rng, min: usize, max: usize) -> ConvexPolygon {
    loop {
        let n = rng.gen_range(min..=max);
        let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..TAU)).collect();
        angles.sort_by(f64::total_cmp);
        let (sx, sy) = (rng.gen_range(0.3..1.0), rng.gen_range(0.3..1.0));
        let (shear, rot) = (rng.gen_range(-0.5..0.5), rng.gen_range(0.0..TAU));
        let raw: Vec<Point2> = angles
            .iter()
            .map(|&t| {
                let p = Point2::new(sx * t.cos() + shear * t.sin(), sy * t.sin());
                p.rotate(rot)
            })
            .collect();
        let Ok(poly) = ConvexPolygon::new(raw) else { continue };
        if poly.len() != n || !well_shaped(&poly) {
            continue;
        }
        let (c, d) = (poly.centroid(), poly.diameter());
        if let Ok(unit) = poly.map(|p| (p - c) * (1.0 / d)) {
            return unit;
        }
    }
}

/// Rejects slivers: every edge at least 1% of the diameter and every interior angle at most 178°.
fn well_shaped(poly: &ConvexPolygon) -> bool {
    let d = poly.diameter();
    let n = poly.len();
    (0..n).all(|k| {
        let (a, b) = poly.edge(k);
        let c = poly.vertex(k + 2);
        let (u, v) = (b - a, c - b);
        u.hypot() >= 0.01 * d && u.normalize().cross(v.normalize()) >= 0.035
    })
}

/// True when some pair of edges is parallel within `angle_tol`.
pub fn has_parallel_sides(poly: &ConvexPolygon, angle_tol: f64) -> bool {
    !poly.parallel_edge_pairs(angle_tol).is_empty()
}

/// A uniformly random point at least `margin` inside the domain.
pub fn random_interior_point(rng: &mut impl Rng, domain: &Domain, margin: f64) -> Point2 {
    let (lo, hi) = domain.bounding_box();
    loop {
        let p = Point2::new(rng.gen_range(lo.x..hi.x), rng.gen_range(lo.y..hi.y));
        if domain.check_interior(p).is_ok() && domain.boundary_distance(p) >= margin {
            return p;
        }
    }
}

/// A uniformly random point of a convex polygon given by its vertices (triangle-fan sampling).
pub fn random_point_in_hull(rng: &mut impl Rng, vertices: &[Point2]) -> Point2 {
    let o = vertices[0];
    let areas: Vec<f64> = (1..vertices.len() - 1)
        .map(|k| 0.5 * (vertices[k] - o).cross(vertices[k + 1] - o).abs())
        .collect();
    let total: f64 = areas.iter().sum();
    let mut pick = rng.gen_range(0.0..1.0) * total;
    let mut k = 0;
    while k + 1 < areas.len() && pick > areas[k] {
        pick -= areas[k];
        k += 1;
    }
    let (mut s, mut t) = (rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0));
    if s + t > 1.0 {
        s = 1.0 - s;
        t = 1.0 - t;
    }
    o + (vertices[k + 1] - o) * s + (vertices[k + 2] - o) * t
}
