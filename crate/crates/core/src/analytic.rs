//! Closed-form maxima: isosceles triangles, rectangles, ellipses and the trapezoid pair.

use std::f64::consts::FRAC_PI_2;

use crate::bows::{sector_frame, BowArc};
use crate::domains::{ConvexPolygon, Point2};
use crate::error::{Error, Result};
use crate::inaccessibility::convex_inaccessibility;
use crate::search::bisect_root;

/// Scan resolution used to bracket the angle equation.
pub const SCAN_POINTS: usize = 1024;

/// Maximum of `r` on the triangle `(0,0), (2λ,0), (λ,1)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IsoscelesSolution {
    pub lambda: f64,
    /// Bow parameter of the maximizer on the bow of the base-left sector.
    pub theta: f64,
    pub r: f64,
    /// `(λ, I₂)`.
    pub point: Point2,
}

impl IsoscelesSolution {
    pub fn i2(&self) -> f64 {
        self.point.y
    }
}

/// `λ² sin²θ cosθ + 2λ sinθ cos²θ + cos³θ − 1/2`.
pub fn angle_equation(lambda: f64, theta: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    lambda * lambda * s * s * c + 2.0 * lambda * s * c * c + c * c * c - 0.5
}

/// `λ` as a function of `θ`: the positive root of the angle equation.
pub fn lambda_of_theta(theta: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    (-2.0 * c * c + (2.0 * c).sqrt()) / (2.0 * s * c)
}

/// `R` from `λ` and `θ`.
pub fn r_of(lambda: f64, theta: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    lambda / (c * c * c + lambda * (s * s * s + 2.0 * s * c * c))
}

/// Height `I₂` of the maximizer written directly in `λ` and `θ`.
pub fn i2_of(lambda: f64, theta: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    lambda * (s * s * s - lambda * s * s * c) / (c * c * c + lambda * (s * s * s + 2.0 * s * c * c))
}

/// The isosceles triangle of height 1 and base `2λ`.
pub fn isosceles_triangle(lambda: f64) -> Result<ConvexPolygon> {
    ConvexPolygon::new(vec![Point2::ORIGIN, Point2::new(2.0 * lambda, 0.0), Point2::new(lambda, 1.0)])
}

pub fn isosceles_solve(lambda: f64) -> Result<IsoscelesSolution> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::InvalidShape(format!("half-base must be positive, got {lambda}")));
    }
    let grid: Vec<(f64, f64)> = (0..=SCAN_POINTS)
        .map(|k| {
            let t = FRAC_PI_2 * k as f64 / SCAN_POINTS as f64;
            (t, angle_equation(lambda, t))
        })
        .collect();
    let roots: Vec<f64> = grid
        .windows(2)
        .filter(|w| (w[0].1 > 0.0) != (w[1].1 > 0.0) || w[1].1 == 0.0)
        .map(|w| bisect_root(|t| angle_equation(lambda, t), w[0].0, w[1].0, 1e-14))
        .collect();
    if roots.is_empty() {
        let trace = grid
            .iter()
            .step_by(SCAN_POINTS / 8)
            .map(|(t, g)| format!("g({t:.4})={g:.3e}"))
            .collect::<Vec<_>>()
            .join(", ");
        return Err(Error::NoRootBracketed { trace });
    }
    if roots.len() > 1 {
        log::warn!("angle equation for λ={lambda} has {} roots; validating each", roots.len());
    }
    let triangle = isosceles_triangle(lambda)?;
    let candidates: Vec<(IsoscelesSolution, f64)> = roots
        .into_iter()
        .map(|theta| {
            let r = r_of(lambda, theta);
            let point = Point2::new(lambda, 1.0 - r / (2.0 * lambda));
            let err = if point.y > 0.0 && point.y < 1.0 {
                (convex_inaccessibility(&triangle, point).r - r).abs()
            } else {
                f64::INFINITY
            };
            (IsoscelesSolution { lambda, theta, r, point }, err)
        })
        .collect();
    let best = candidates
        .iter()
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("at least one root");
    if best.1 > 1e-9 {
        log::warn!("isosceles root for λ={lambda} validates only to {:e}", best.1);
    }
    Ok(best.0)
}

/// Orthocentre, incentre, barycentre and circumcentre of the height-1 isosceles triangle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NotablePoints {
    pub h: Point2,
    pub i: Point2,
    pub g: Point2,
    pub o: Point2,
}

pub fn notable_points(lambda: f64) -> NotablePoints {
    NotablePoints {
        h: Point2::new(lambda, lambda * lambda),
        i: Point2::new(lambda, lambda / (lambda + (lambda * lambda + 1.0).sqrt())),
        g: Point2::new(lambda, 1.0 / 3.0),
        o: Point2::new(lambda, (1.0 - lambda * lambda) / 2.0),
    }
}

/// Maximum set of the rectangle `[0,a] × [0,b]`, `a ≥ b`.
#[derive(Clone, Debug, PartialEq)]
pub struct RectangleSolution {
    pub a: f64,
    pub b: f64,
    pub r: f64,
    /// The maximum set reaches the long sides.
    pub boundary_contact: bool,
    /// Astroid arcs at level `b` around each corner, counterclockwise from `(0,0)`.
    pub bows: Vec<BowArc>,
}

impl RectangleSolution {
    /// Membership in the maximum set: outside every corner astroid.
    pub fn contains(&self, p: Point2) -> bool {
        if !(p.x >= 0.0 && p.x <= self.a && p.y >= 0.0 && p.y <= self.b) {
            return false;
        }
        let level = self.b.powf(2.0 / 3.0);
        [(0.0, 0.0), (self.a, 0.0), (self.a, self.b), (0.0, self.b)].iter().all(|&(cx, cy)| {
            (p.x - cx).abs().powf(2.0 / 3.0) + (p.y - cy).abs().powf(2.0 / 3.0) >= level * (1.0 - 1e-12)
        })
    }
}

pub fn rectangle_solution(a: f64, b: f64) -> Result<RectangleSolution> {
    if !(b > 0.0 && a >= b && a.is_finite()) {
        return Err(Error::InvalidShape(format!("need a ≥ b > 0, got a={a}, b={b}")));
    }
    let rect = ConvexPolygon::rectangle(0.0, 0.0, a, b)?;
    let center = Point2::new(0.5 * a, 0.5 * b);
    let n = rect.len();
    let bows = (0..n)
        .map(|k| {
            let frame = sector_frame(&rect.edge_line((k + n - 1) % n), &rect.edge_line(k), center)?;
            BowArc::full(frame, b)
        })
        .collect::<Result<_>>()?;
    Ok(RectangleSolution {
        a,
        b,
        r: b,
        boundary_contact: a >= 2.0 * b,
        bows,
    })
}

/// Maximum set of the ellipse `x²/a² + y²/b² < 1`, `a > b`: the segment `{(0, y) : |y| ≤ y₀}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EllipseSolution {
    pub a: f64,
    pub b: f64,
    pub r: f64,
    pub y0: f64,
    pub endpoints: (Point2, Point2),
}

pub fn ellipse_solution(a: f64, b: f64) -> Result<EllipseSolution> {
    if !(b > 0.0 && a.is_finite() && a >= b) {
        return Err(Error::InvalidShape(format!("need a > b > 0, got a={a}, b={b}")));
    }
    if a == b {
        return Err(Error::DegenerateCircle);
    }
    let y0 = b * (a * a - b * b).sqrt() / a;
    Ok(EllipseSolution {
        a,
        b,
        r: 2.0 * b,
        y0,
        endpoints: (Point2::new(0.0, -y0), Point2::new(0.0, y0)),
    })
}

/// Length of the chord through `(0, y)` along `s ↦ (s·a·cosθ, y + s·b·sinθ)`.
pub fn ellipse_chord_length(a: f64, b: f64, y: f64, theta: f64) -> f64 {
    let t = theta.cos().powi(2);
    ellipse_chord_sq(a, b, y, t).sqrt()
}

/// Squared chord length as a quadratic in `T = cos²θ`.
pub fn ellipse_chord_sq(a: f64, b: f64, y: f64, t: f64) -> f64 {
    4.0 * (1.0 - y * y / (b * b) * t) * ((a * a - b * b) * t + b * b)
}

/// `r(0, y)`: the quadratic in `T` is concave, so its minimum over `[0, 1]` sits at an end.
pub fn ellipse_axis_r(a: f64, b: f64, y: f64) -> f64 {
    ellipse_chord_sq(a, b, y, 0.0).min(ellipse_chord_sq(a, b, y, 1.0)).sqrt()
}

/// A thin isosceles trapezoid and its mirror image.
#[derive(Clone, Debug, PartialEq)]
pub struct TrapezoidPair {
    /// Vertices `(−a, ±(1−ε)), (a, ±1)`.
    pub z: ConvexPolygon,
    /// Vertices `(−a, ±1), (a, ±(1−ε))`.
    pub z_mirror: ConvexPolygon,
    /// Triangle obtained by extending the long sides of `z`.
    pub triangle: ConvexPolygon,
    pub r: f64,
    pub point: Point2,
    pub point_mirror: Point2,
}

pub fn trapezoid_pair(a: f64, epsilon: f64) -> Result<TrapezoidPair> {
    if !(a > 1.0 && a.is_finite() && epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::InvalidShape(format!("need a > 1 and 0 < ε < 1, got a={a}, ε={epsilon}")));
    }
    let p = |x: f64, y: f64| Point2::new(x, y);
    let z = ConvexPolygon::new(vec![p(-a, -(1.0 - epsilon)), p(a, -1.0), p(a, 1.0), p(-a, 1.0 - epsilon)])?;
    let z_mirror = z.map(|q| p(-q.x, q.y))?;
    let h = 2.0 * a / epsilon;
    let triangle = ConvexPolygon::new(vec![p(a - h, 0.0), p(a, -1.0), p(a, 1.0)])?;
    // The triangle is the height-1, base-2λ isosceles triangle scaled by h with its base on x = a.
    let iso = isosceles_solve(1.0 / h)?;
    let x = a - h * iso.i2();
    Ok(TrapezoidPair {
        z,
        z_mirror,
        triangle,
        r: h * iso.r,
        point: p(x, 0.0),
        point_mirror: p(-x, 0.0),
    })
}
