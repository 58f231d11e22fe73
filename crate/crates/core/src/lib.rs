//! Inaccessibility of bounded planar domains.
//!
//! The inaccessibility `r(p)` of a point is the length of the shortest chord
//! through it. This crate evaluates `r`, traces its level sets as envelopes of
//! fixed-length chords (λ-bows on polygons), and locates the most
//! inaccessible point with a cutting-plane search.

pub mod analytic;
pub mod bows;
pub mod domains;
pub mod error;
pub mod inaccessibility;
pub mod levelsets;
pub mod optimizer;
pub mod oracle;
pub mod search;

pub use domains::{chord_through, Chord, ConvexPolygon, DirectionAngle, Domain, DomainKind, Point2};
pub use error::{Error, Result};
pub use inaccessibility::{inaccessibility_at, profile, r_value, RResult};
pub use levelsets::{arcs, contour, contour_from, LevelSet};
pub use optimizer::{cut_at, maximize, Cut, CutOutcome, MaxResult};
pub use oracle::{oracle_max, oracle_r, OracleConfig};
