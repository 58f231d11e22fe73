use std::f64::consts::{PI, TAU};

use super::point::{Line, Point2};
use crate::error::{Error, Result};

/// Points closer than this are treated as coincident.
pub const DUPLICATE_TOL: f64 = 1e-12;

/// Points closer than this to the boundary are rejected by chord queries.
pub const BOUNDARY_BAND: f64 = 1e-12;

/// Minimum boundary resolution for sampled smooth domains.
pub const MIN_SAMPLES: usize = 64;

/// Default boundary resolution for sampled smooth domains.
pub const DEFAULT_SAMPLES: usize = 4096;

/// A strictly convex polygon with counterclockwise vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point2>,
    /// Outward unit normal of each edge, cached for the chord loops.
    normals: Vec<Point2>,
}

impl ConvexPolygon {
    /// Validates `vertices` as a strictly convex polygon. Clockwise input is reversed.
    pub fn new(vertices: Vec<Point2>) -> Result<Self> {
        let n = vertices.len();
        check_basic(&vertices)?;
        let (vertices, reversed) = orient_ccw(vertices);
        let original = |i: usize| if reversed { n - 1 - i } else { i };
        check_edges(&vertices, original)?;

        let mut turning = 0.0;
        for k in 0..n {
            let prev = vertices[(k + n - 1) % n];
            let cur = vertices[k];
            let next = vertices[(k + 1) % n];
            let e1 = cur - prev;
            let e2 = next - cur;
            let sin = e1.cross(e2) / (e1.hypot() * e2.hypot());
            if sin.is_nan() || sin <= 1e-12 {
                let mut triple = [original((k + n - 1) % n), original(k), original((k + 1) % n)];
                if reversed {
                    triple.reverse();
                }
                return Err(Error::NotConvex {
                    triple: (triple[0], triple[1], triple[2]),
                });
            }
            turning += e1.cross(e2).atan2(e1.dot(e2));
        }
        // Positive turns everywhere but winding more than once: a star polygon.
        if (turning - TAU).abs() > 1e-6 {
            return Err(Error::SelfIntersecting {
                edges: (original(0), original(1)),
            });
        }
        let normals = (0..n)
            .map(|k| {
                let e = (vertices[(k + 1) % n] - vertices[k]).normalize();
                Point2::new(e.y, -e.x)
            })
            .collect();
        Ok(ConvexPolygon { vertices, normals })
    }

    /// Axis-aligned rectangle `[x0, x0 + w] × [y0, y0 + h]`.
    pub fn rectangle(x0: f64, y0: f64, w: f64, h: f64) -> Result<Self> {
        ConvexPolygon::new(vec![
            Point2::new(x0, y0),
            Point2::new(x0 + w, y0),
            Point2::new(x0 + w, y0 + h),
            Point2::new(x0, y0 + h),
        ])
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, k: usize) -> Point2 {
        self.vertices[k % self.vertices.len()]
    }

    /// Edge `k` runs from vertex `k` to vertex `k + 1`.
    pub fn edge(&self, k: usize) -> (Point2, Point2) {
        (self.vertex(k), self.vertex(k + 1))
    }

    pub fn edge_line(&self, k: usize) -> Line {
        let (a, b) = self.edge(k);
        Line::through(a, b)
    }

    /// Outward unit normal of edge `k`.
    pub fn outward_normal(&self, k: usize) -> Point2 {
        self.normals[k % self.normals.len()]
    }

    pub(crate) fn normals(&self) -> &[Point2] {
        &self.normals
    }

    /// Minimum over edges of the distance to the edge line; positive inside.
    pub fn signed_distance(&self, p: Point2) -> f64 {
        self.vertices
            .iter()
            .zip(&self.normals)
            .map(|(&v, &n)| (v - p).dot(n))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    pub fn centroid(&self) -> Point2 {
        polygon_centroid(&self.vertices)
    }

    /// Largest vertex distance, by rotating calipers.
    pub fn diameter(&self) -> f64 {
        let v = &self.vertices;
        let n = v.len();
        let mut j = 1;
        let mut best: f64 = 0.0;
        for i in 0..n {
            let ei = v[(i + 1) % n] - v[i];
            let mut guard = 0;
            while ei.cross(v[(j + 1) % n] - v[j]) > 0.0 && guard < n {
                j = (j + 1) % n;
                guard += 1;
            }
            best = best.max(v[i].distance(v[j])).max(v[(i + 1) % n].distance(v[j]));
        }
        best
    }

    pub fn bounding_box(&self) -> (Point2, Point2) {
        bounding_box(&self.vertices)
    }

    /// Pairs of edges whose lines are parallel (within `angle_tol` radians), with their distance.
    pub fn parallel_edge_pairs(&self, angle_tol: f64) -> Vec<(usize, usize, f64)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            let ni = self.outward_normal(i);
            for j in (i + 1)..n {
                let nj = self.outward_normal(j);
                if ni.dot(nj) < 0.0 && ni.cross(nj).abs() <= angle_tol {
                    let d = (self.vertex(j) - self.vertex(i)).dot(-ni);
                    out.push((i, j, d));
                }
            }
        }
        out
    }

    /// Index of the edge containing boundary point `q` (closest edge segment).
    pub fn nearest_edge(&self, q: Point2) -> usize {
        nearest_edge(&self.vertices, q)
    }

    /// Applies `f` to every vertex and revalidates.
    pub fn map(&self, f: impl Fn(Point2) -> Point2) -> Result<Self> {
        ConvexPolygon::new(self.vertices.iter().map(|&v| f(v)).collect())
    }
}

/// A simple (possibly non-convex) polygon with counterclockwise vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct SimplePolygon {
    vertices: Vec<Point2>,
}

impl SimplePolygon {
    pub fn new(vertices: Vec<Point2>) -> Result<Self> {
        check_basic(&vertices)?;
        let n = vertices.len();
        check_edges(&vertices, |i| i)?;
        for i in 0..n {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            for j in (i + 1)..n {
                let (c, d) = (vertices[j], vertices[(j + 1) % n]);
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                if adjacent {
                    // Adjacent edges may only share their common endpoint.
                    let (shared, p, q) = if j == i + 1 { (b, a, d) } else { (a, b, c) };
                    let u = p - shared;
                    let v = q - shared;
                    if u.cross(v).abs() <= 1e-14 * u.hypot() * v.hypot() && u.dot(v) > 0.0 {
                        return Err(Error::SelfIntersecting { edges: (i, j) });
                    }
                } else if segments_intersect(a, b, c, d) {
                    return Err(Error::SelfIntersecting { edges: (i, j) });
                }
            }
        }
        let (vertices, _) = orient_ccw(vertices);
        Ok(SimplePolygon { vertices })
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Shape a sampled boundary was generated from.
#[derive(Clone, Debug, PartialEq)]
pub enum SampleSource {
    /// `x²/a² + y²/b² < 1`.
    Ellipse { a: f64, b: f64 },
    /// `x² + y² < radius², x > 0`.
    Semicircle { radius: f64 },
    /// Externally supplied boundary samples.
    Points,
}

/// A dense convex polyline standing in for a smooth convex boundary.
#[derive(Clone, Debug, PartialEq)]
pub struct SampledConvexDomain {
    polygon: ConvexPolygon,
    source: SampleSource,
}

impl SampledConvexDomain {
    pub fn from_points(points: Vec<Point2>) -> Result<Self> {
        Self::build(points, SampleSource::Points)
    }

    /// Ellipse with semi-axes `a` (along x) and `b` (along y), sampled at `samples`
    /// equally spaced parameter values starting on the positive x axis.
    pub fn ellipse(a: f64, b: f64, samples: usize) -> Result<Self> {
        if !(a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite()) {
            return Err(Error::InvalidShape(format!("ellipse semi-axes must be positive, got a={a}, b={b}")));
        }
        let points = (0..samples)
            .map(|k| {
                let t = TAU * k as f64 / samples as f64;
                Point2::new(a * t.cos(), b * t.sin())
            })
            .collect();
        Self::build(points, SampleSource::Ellipse { a, b })
    }

    /// Half disk `{x² + y² < radius², x > 0}`; the arc carries `samples − 1` segments.
    pub fn semicircle(radius: f64, samples: usize) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidShape(format!("radius must be positive, got {radius}")));
        }
        let m = samples.max(2) - 1;
        let points = (0..=m)
            .map(|k| {
                let t = -PI / 2.0 + PI * k as f64 / m as f64;
                Point2::new(radius * t.cos(), radius * t.sin())
            })
            .collect();
        Self::build(points, SampleSource::Semicircle { radius })
    }

    fn build(points: Vec<Point2>, source: SampleSource) -> Result<Self> {
        if points.len() < MIN_SAMPLES {
            return Err(Error::TooFewSamples {
                count: points.len(),
                min: MIN_SAMPLES,
            });
        }
        Ok(SampledConvexDomain {
            polygon: ConvexPolygon::new(points)?,
            source,
        })
    }

    pub fn polygon(&self) -> &ConvexPolygon {
        &self.polygon
    }

    pub fn source(&self) -> &SampleSource {
        &self.source
    }
}

/// Requested validation for a raw vertex list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomainKind {
    Convex,
    Simple,
    Sampled,
}

/// A validated bounded planar domain.
#[derive(Clone, Debug, PartialEq)]
pub enum Domain {
    Convex(ConvexPolygon),
    Simple(SimplePolygon),
    Sampled(SampledConvexDomain),
}

impl Domain {
    /// Validates a raw vertex list as the requested kind of domain.
    pub fn validate(vertices: Vec<Point2>, kind: DomainKind) -> Result<Domain> {
        match kind {
            DomainKind::Convex => ConvexPolygon::new(vertices).map(Domain::Convex),
            DomainKind::Simple => SimplePolygon::new(vertices).map(Domain::Simple),
            DomainKind::Sampled => SampledConvexDomain::from_points(vertices).map(Domain::Sampled),
        }
    }

    /// The underlying convex polygon, if the domain is convex.
    pub fn as_convex(&self) -> Option<&ConvexPolygon> {
        match self {
            Domain::Convex(p) => Some(p),
            Domain::Sampled(s) => Some(s.polygon()),
            Domain::Simple(_) => None,
        }
    }

    pub fn is_sampled(&self) -> bool {
        matches!(self, Domain::Sampled(_))
    }

    /// Boundary vertices, counterclockwise.
    pub fn boundary(&self) -> &[Point2] {
        match self {
            Domain::Convex(p) => p.vertices(),
            Domain::Simple(p) => p.vertices(),
            Domain::Sampled(s) => s.polygon().vertices(),
        }
    }

    pub fn diameter(&self) -> f64 {
        match self.as_convex() {
            Some(p) => p.diameter(),
            None => diameter(self.boundary()),
        }
    }

    pub fn bounding_box(&self) -> (Point2, Point2) {
        bounding_box(self.boundary())
    }

    /// Unsigned distance from `p` to the boundary polyline.
    pub fn boundary_distance(&self, p: Point2) -> f64 {
        boundary_distance(self.boundary(), p)
    }

    /// True when `p` is inside by winding number and farther than the boundary band.
    pub fn contains(&self, p: Point2) -> bool {
        let b = self.boundary();
        winding_number(b, p) != 0 && boundary_distance(b, p) >= BOUNDARY_BAND
    }

    /// Checks the interior precondition shared by every chord query.
    pub fn check_interior(&self, p: Point2) -> Result<()> {
        if !p.is_finite() {
            return Err(Error::PointOutside { x: p.x, y: p.y });
        }
        if let Some(poly) = self.as_convex() {
            // Inside a convex polygon the nearest edge line is the nearest boundary point.
            if poly.signed_distance(p) >= BOUNDARY_BAND {
                return Ok(());
            }
        }
        let b = self.boundary();
        let dist = boundary_distance(b, p);
        if dist < BOUNDARY_BAND {
            return Err(Error::PointTooCloseToBoundary { distance: dist });
        }
        if winding_number(b, p) == 0 {
            return Err(Error::PointOutside { x: p.x, y: p.y });
        }
        Ok(())
    }
}

impl From<ConvexPolygon> for Domain {
    fn from(p: ConvexPolygon) -> Self {
        Domain::Convex(p)
    }
}

impl From<SimplePolygon> for Domain {
    fn from(p: SimplePolygon) -> Self {
        Domain::Simple(p)
    }
}

impl From<SampledConvexDomain> for Domain {
    fn from(s: SampledConvexDomain) -> Self {
        Domain::Sampled(s)
    }
}

fn check_basic(vertices: &[Point2]) -> Result<()> {
    if vertices.len() < 3 {
        return Err(Error::TooFewVertices { count: vertices.len() });
    }
    if let Some(index) = vertices.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFiniteCoordinate { index });
    }
    Ok(())
}

fn check_edges(vertices: &[Point2], original: impl Fn(usize) -> usize) -> Result<()> {
    let n = vertices.len();
    for k in 0..n {
        if vertices[k].distance(vertices[(k + 1) % n]) < DUPLICATE_TOL {
            return Err(Error::DegenerateEdge { index: original(k) });
        }
    }
    Ok(())
}

fn orient_ccw(mut vertices: Vec<Point2>) -> (Vec<Point2>, bool) {
    if signed_area(&vertices) < 0.0 {
        vertices.reverse();
        (vertices, true)
    } else {
        (vertices, false)
    }
}

pub(crate) fn signed_area(vertices: &[Point2]) -> f64 {
    let n = vertices.len();
    let origin = vertices[0];
    let mut s = 0.0;
    for k in 1..n.saturating_sub(1) {
        s += (vertices[k] - origin).cross(vertices[k + 1] - origin);
    }
    0.5 * s
}

/// Area centroid; falls back to the vertex mean for (near) zero area.
pub(crate) fn polygon_centroid(vertices: &[Point2]) -> Point2 {
    let n = vertices.len();
    let origin = vertices[0];
    let mut area2 = 0.0;
    let mut acc = Point2::ORIGIN;
    for k in 1..n.saturating_sub(1) {
        let a = vertices[k] - origin;
        let b = vertices[k + 1] - origin;
        let c = a.cross(b);
        area2 += c;
        acc += (a + b) * c;
    }
    let scale = diameter(vertices);
    if area2.abs() <= 1e-14 * scale * scale || area2.abs() < f64::MIN_POSITIVE {
        let mut mean = Point2::ORIGIN;
        for &v in vertices {
            mean += v;
        }
        return mean / n as f64;
    }
    origin + acc / (3.0 * area2)
}

pub(crate) fn diameter(vertices: &[Point2]) -> f64 {
    let mut d: f64 = 0.0;
    if vertices.len() > 256 {
        // Bounding-box diagonal is within a factor √2; exact enough for tolerances.
        let (lo, hi) = bounding_box(vertices);
        return (hi - lo).hypot();
    }
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            d = d.max(a.distance(b));
        }
    }
    d
}

pub(crate) fn bounding_box(vertices: &[Point2]) -> (Point2, Point2) {
    let mut lo = Point2::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for v in vertices {
        lo.x = lo.x.min(v.x);
        lo.y = lo.y.min(v.y);
        hi.x = hi.x.max(v.x);
        hi.y = hi.y.max(v.y);
    }
    (lo, hi)
}

pub(crate) fn segment_distance(a: Point2, b: Point2, p: Point2) -> f64 {
    let e = b - a;
    let t = ((p - a).dot(e) / e.dot(e)).clamp(0.0, 1.0);
    p.distance(a + e * t)
}

pub(crate) fn boundary_distance(vertices: &[Point2], p: Point2) -> f64 {
    let n = vertices.len();
    (0..n)
        .map(|k| segment_distance(vertices[k], vertices[(k + 1) % n], p))
        .fold(f64::INFINITY, f64::min)
}

pub(crate) fn nearest_edge(vertices: &[Point2], p: Point2) -> usize {
    let n = vertices.len();
    let mut best = (f64::INFINITY, 0);
    for k in 0..n {
        let d = segment_distance(vertices[k], vertices[(k + 1) % n], p);
        if d < best.0 {
            best = (d, k);
        }
    }
    best.1
}

/// Winding number of the closed polyline around `p`.
pub(crate) fn winding_number(vertices: &[Point2], p: Point2) -> i32 {
    let n = vertices.len();
    let mut wn = 0;
    for k in 0..n {
        let a = vertices[k];
        let b = vertices[(k + 1) % n];
        let side = (b - a).cross(p - a);
        if a.y <= p.y {
            if b.y > p.y && side > 0.0 {
                wn += 1;
            }
        } else if b.y <= p.y && side < 0.0 {
            wn -= 1;
        }
    }
    wn
}

fn orient(a: Point2, b: Point2, c: Point2) -> f64 {
    (b - a).cross(c - a)
}

fn on_segment(a: Point2, b: Point2, p: Point2) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// Closed-segment intersection test (touching counts).
pub(crate) fn segments_intersect(a: Point2, b: Point2, c: Point2, d: Point2) -> bool {
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0)) {
        return true;
    }
    (d1 == 0.0 && on_segment(c, d, a))
        || (d2 == 0.0 && on_segment(c, d, b))
        || (d3 == 0.0 && on_segment(a, b, c))
        || (d4 == 0.0 && on_segment(a, b, d))
}
