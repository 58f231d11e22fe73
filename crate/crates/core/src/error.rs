use thiserror::Error;

/// Errors raised by domain validation and the numerical routines built on it.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polygon needs at least 3 vertices, got {count}")]
    TooFewVertices { count: usize },

    #[error("vertex {index} has a non-finite coordinate")]
    NonFiniteCoordinate { index: usize },

    #[error("edge {index} is degenerate (endpoints closer than 1e-12)")]
    DegenerateEdge { index: usize },

    #[error("polygon is not strictly convex at vertices ({}, {}, {})", .triple.0, .triple.1, .triple.2)]
    NotConvex { triple: (usize, usize, usize) },

    #[error("edges {} and {} intersect", .edges.0, .edges.1)]
    SelfIntersecting { edges: (usize, usize) },

    #[error("sampled boundary needs at least {min} points, got {count}")]
    TooFewSamples { count: usize, min: usize },

    #[error("point ({x}, {y}) is not inside the domain")]
    PointOutside { x: f64, y: f64 },

    #[error("point is within {distance:e} of the boundary")]
    PointTooCloseToBoundary { distance: f64 },

    #[error("operation requires a convex domain")]
    ConvexDomainRequired,

    #[error("theta {theta} outside the valid range [{lo}, {hi}]")]
    ThetaOutOfRange { theta: f64, lo: f64, hi: f64 },

    #[error("sector lines are parallel")]
    ParallelLines,

    #[error("level {r} is not below the domain inaccessibility {max}")]
    EmptyLevelSet { r: f64, max: f64 },

    #[error("level must be positive, got {r}")]
    InvalidLevel { r: f64 },

    #[error("no interior anchor with inaccessibility above the level")]
    AnchorNotFound,

    #[error("arc labels are inconsistent: {0}")]
    LabelingInconsistent(String),

    #[error("cut side is ambiguous; the query point is already optimal")]
    AmbiguousSide,

    #[error("cutting-plane search did not converge after {iterations} iterations (localization diameter {diameter:e})")]
    NotConverged { iterations: usize, diameter: f64 },

    #[error("no root bracketed: {trace}")]
    NoRootBracketed { trace: String },

    #[error("ellipse is a circle; the maximizer set degenerates to the centre")]
    DegenerateCircle,

    #[error("invalid shape: {0}")]
    InvalidShape(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
