//! Domain representations, validation and raw chord evaluation.

mod chord;
mod point;
mod polygon;

pub use chord::{chord_through, Chord};
pub(crate) use chord::convex_ray;
pub use point::{DirectionAngle, Line, Point2};
pub use polygon::{
    ConvexPolygon, Domain, DomainKind, SampleSource, SampledConvexDomain, SimplePolygon, BOUNDARY_BAND,
    DEFAULT_SAMPLES, DUPLICATE_TOL, MIN_SAMPLES,
};
pub(crate) use polygon::{diameter as point_set_diameter, polygon_centroid};
#[cfg(test)]
pub(crate) use polygon::signed_area;
