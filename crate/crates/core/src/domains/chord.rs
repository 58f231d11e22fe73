use super::point::{DirectionAngle, Point2};
use super::polygon::{
    boundary_distance, winding_number, ConvexPolygon, Domain, SimplePolygon, BOUNDARY_BAND,
};
use crate::error::Result;

/// The connected piece of a line through `through` that lies in the domain.
///
/// `endpoint_a` sits at the negative parameter along `direction.unit()`,
/// `endpoint_b` at the positive one. `edge_a`/`edge_b` are the boundary edges
/// hit at those endpoints.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Chord {
    pub through: Point2,
    pub direction: DirectionAngle,
    pub endpoint_a: Point2,
    pub endpoint_b: Point2,
    pub length: f64,
    pub edge_a: usize,
    pub edge_b: usize,
}

impl Chord {
    /// Edge pair with the smaller index first.
    pub fn edge_pair(&self) -> (usize, usize) {
        (self.edge_a.min(self.edge_b), self.edge_a.max(self.edge_b))
    }

    pub fn midpoint(&self) -> Point2 {
        self.endpoint_a.midpoint(self.endpoint_b)
    }
}

/// Chord of `domain` through interior point `p` with direction `theta`.
pub fn chord_through(domain: &Domain, p: Point2, theta: DirectionAngle) -> Result<Chord> {
    domain.check_interior(p)?;
    Ok(match domain {
        Domain::Simple(poly) => simple_chord(poly, p, theta),
        _ => {
            let poly = domain.as_convex().expect("convex variant");
            convex_chord(poly, p, theta)
        }
    })
}

/// Distance along the ray `p + t·u` to the boundary of a convex polygon, and the edge hit.
///
/// A ray through a vertex is attributed to the edge it meets after an
/// infinitesimal counterclockwise rotation, then to the lower index.
pub(crate) fn convex_ray(poly: &ConvexPolygon, p: Point2, u: Point2) -> (f64, usize) {
    let mut best_t = f64::INFINITY;
    let mut best_k = usize::MAX;
    let mut best_rate = f64::INFINITY;
    for (k, (&v, &n)) in poly.vertices().iter().zip(poly.normals()).enumerate() {
        let c = u.dot(n);
        if c <= 0.0 {
            continue;
        }
        let t = (v - p).dot(n) / c;
        // d t / d(angle) for a counterclockwise turn of the ray.
        let rate = t * n.cross(u) / c;
        let tie = 1e-12 * best_t.max(1.0);
        if t < best_t - tie || ((t - best_t).abs() <= tie && rate < best_rate) {
            best_t = t;
            best_k = k;
            best_rate = rate;
        }
    }
    (best_t, best_k)
}

pub(crate) fn convex_chord(poly: &ConvexPolygon, p: Point2, theta: DirectionAngle) -> Chord {
    let u = theta.unit();
    let (tb, kb) = convex_ray(poly, p, u);
    let (ta, ka) = convex_ray(poly, p, -u);
    let endpoint_a = p - u * ta;
    let endpoint_b = p + u * tb;
    Chord {
        through: p,
        direction: theta,
        endpoint_a,
        endpoint_b,
        length: ta + tb,
        edge_a: ka,
        edge_b: kb,
    }
}

/// Component of the line through `p` inside a simple polygon.
///
/// All boundary crossings are collected and sorted along the line; starting at
/// `p` the interval grows across a crossing only while the next sub-interval is
/// still strictly interior (tangential vertex touches).
fn simple_chord(poly: &SimplePolygon, p: Point2, theta: DirectionAngle) -> Chord {
    let v = poly.vertices();
    let n = v.len();
    let u = theta.unit();
    let scale = super::polygon::diameter(v).max(1.0);
    let mut hits: Vec<(f64, usize)> = Vec::new();
    for k in 0..n {
        let a = v[k];
        let b = v[(k + 1) % n];
        let e = b - a;
        let denom = u.cross(e);
        let w = a - p;
        if denom.abs() <= 1e-14 * e.hypot() {
            // Parallel; collinear edges contribute both endpoints.
            if w.cross(u).abs() <= 1e-12 * scale {
                hits.push((w.dot(u), k));
                hits.push(((b - p).dot(u), k));
            }
            continue;
        }
        let t = w.cross(e) / denom;
        let s = w.cross(u) / denom;
        if (-1e-12..=1.0 + 1e-12).contains(&s) {
            hits.push((t, k));
        }
    }
    hits.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)));

    let interior = |q: Point2| winding_number(v, q) != 0 && boundary_distance(v, q) >= BOUNDARY_BAND;

    let forward: Vec<(f64, usize)> = hits.iter().copied().filter(|h| h.0 > 0.0).collect();
    let backward: Vec<(f64, usize)> = hits.iter().rev().copied().filter(|h| h.0 < 0.0).collect();
    let walk = |list: &[(f64, usize)]| -> (f64, usize) {
        let mut i = 0;
        while i < list.len() {
            let (t, k) = list[i];
            // Edges meeting at this parameter (vertex hits); lowest index wins.
            let mut j = i;
            let mut edge = k;
            while j + 1 < list.len() && (list[j + 1].0 - t).abs() <= 1e-12 * scale {
                j += 1;
                edge = edge.min(list[j].1);
            }
            let next = list.get(j + 1).map(|h| h.0);
            let stop = match next {
                None => true,
                Some(tn) => !interior(p + u * (0.5 * (t + tn))),
            };
            if stop {
                return (t, edge);
            }
            i = j + 1;
        }
        unreachable!("a line through an interior point leaves a bounded polygon")
    };
    let (tb, kb) = walk(&forward);
    let (ta, ka) = walk(&backward);
    let endpoint_a = p + u * ta;
    let endpoint_b = p + u * tb;
    Chord {
        through: p,
        direction: theta,
        endpoint_a,
        endpoint_b,
        length: tb - ta,
        edge_a: ka,
        edge_b: kb,
    }
}
