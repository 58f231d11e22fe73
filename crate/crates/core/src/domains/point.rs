use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

/// A point (or free vector) in the plane.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    /// Unit vector at angle `theta` from the positive x axis.
    #[inline]
    pub fn from_angle(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Point2::new(c, s)
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    #[inline]
    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3d cross product.
    #[inline]
    pub fn cross(self, other: Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn hypot(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn distance(self, other: Point2) -> f64 {
        (self - other).hypot()
    }

    /// Counterclockwise quarter turn.
    #[inline]
    pub fn perp(self) -> Point2 {
        Point2::new(-self.y, self.x)
    }

    #[inline]
    pub fn normalize(self) -> Point2 {
        self / self.hypot()
    }

    #[inline]
    pub fn atan2(self) -> f64 {
        self.y.atan2(self.x)
    }

    #[inline]
    pub fn lerp(self, other: Point2, t: f64) -> Point2 {
        self + (other - self) * t
    }

    #[inline]
    pub fn midpoint(self, other: Point2) -> Point2 {
        self.lerp(other, 0.5)
    }

    /// Rotation about the origin by `angle`.
    #[inline]
    pub fn rotate(self, angle: f64) -> Point2 {
        let (s, c) = angle.sin_cos();
        Point2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl From<(f64, f64)> for Point2 {
    fn from((x, y): (f64, f64)) -> Self {
        Point2::new(x, y)
    }
}

impl From<[f64; 2]> for Point2 {
    fn from([x, y]: [f64; 2]) -> Self {
        Point2::new(x, y)
    }
}

impl Add for Point2 {
    type Output = Point2;
    #[inline]
    fn add(self, rhs: Point2) -> Point2 {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl AddAssign for Point2 {
    #[inline]
    fn add_assign(&mut self, rhs: Point2) {
        self.x += rhs.x;
        self.y += rhs.y;
    }
}

impl Sub for Point2 {
    type Output = Point2;
    #[inline]
    fn sub(self, rhs: Point2) -> Point2 {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    #[inline]
    fn mul(self, rhs: f64) -> Point2 {
        Point2::new(self.x * rhs, self.y * rhs)
    }
}

impl Mul<Point2> for f64 {
    type Output = Point2;
    #[inline]
    fn mul(self, rhs: Point2) -> Point2 {
        rhs * self
    }
}

impl Div<f64> for Point2 {
    type Output = Point2;
    #[inline]
    fn div(self, rhs: f64) -> Point2 {
        Point2::new(self.x / rhs, self.y / rhs)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    #[inline]
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

/// Direction of an unoriented line, normalized to `[0, π)`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct DirectionAngle(f64);

impl DirectionAngle {
    pub fn new(theta: f64) -> Self {
        let mut t = theta.rem_euclid(PI);
        // rem_euclid can round up to exactly PI for tiny negative inputs.
        if t >= PI {
            t = 0.0;
        }
        DirectionAngle(t)
    }

    #[inline]
    pub fn radians(self) -> f64 {
        self.0
    }

    /// Unit vector pointing along the direction (the representative in the upper half plane).
    #[inline]
    pub fn unit(self) -> Point2 {
        Point2::from_angle(self.0)
    }

    /// Smallest angular separation between two unoriented directions, in `[0, π/2]`.
    pub fn separation(self, other: DirectionAngle) -> f64 {
        let d = (self.0 - other.0).abs();
        d.min(PI - d)
    }
}

impl From<f64> for DirectionAngle {
    fn from(theta: f64) -> Self {
        DirectionAngle::new(theta)
    }
}

/// An infinite line through `point` along the unit vector `direction`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Line {
    pub point: Point2,
    pub direction: Point2,
}

impl Line {
    pub fn new(point: Point2, direction: Point2) -> Self {
        Line {
            point,
            direction: direction.normalize(),
        }
    }

    pub fn through(a: Point2, b: Point2) -> Self {
        Line::new(a, b - a)
    }

    /// Intersection point, or `None` when the directions are parallel within `angle_tol`.
    pub fn intersect(&self, other: &Line, angle_tol: f64) -> Option<Point2> {
        let denom = self.direction.cross(other.direction);
        if denom.abs() <= angle_tol {
            return None;
        }
        let t = (other.point - self.point).cross(other.direction) / denom;
        Some(self.point + self.direction * t)
    }

    /// Signed distance, positive to the left of the direction.
    pub fn signed_distance(&self, p: Point2) -> f64 {
        self.direction.cross(p - self.point)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn direction_normalization() {
        assert_eq!(DirectionAngle::new(PI).radians(), 0.0);
        assert!((DirectionAngle::new(-PI / 4.0).radians() - 3.0 * PI / 4.0).abs() < 1e-15);
        assert!((DirectionAngle::new(5.0 * PI / 2.0).radians() - PI / 2.0).abs() < 1e-12);
        assert!(DirectionAngle::new(-1e-300).radians() < PI);
    }

    #[test]
    fn separation_wraps() {
        let a = DirectionAngle::new(0.01);
        let b = DirectionAngle::new(PI - 0.01);
        assert!((a.separation(b) - 0.02).abs() < 1e-12);
    }

    #[test]
    fn line_intersection() {
        let a = Line::through(Point2::new(0.0, 0.0), Point2::new(1.0, 0.0));
        let b = Line::through(Point2::new(2.0, -1.0), Point2::new(2.0, 3.0));
        let x = a.intersect(&b, 1e-12).unwrap();
        assert!((x - Point2::new(2.0, 0.0)).hypot() < 1e-15);
        let c = Line::through(Point2::new(0.0, 1.0), Point2::new(5.0, 1.0));
        assert!(a.intersect(&c, 1e-12).is_none());
    }
}
