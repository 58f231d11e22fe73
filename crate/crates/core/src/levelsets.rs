//! Boundaries of the superlevel sets `D_r = {p : r(p) > r}`.
//!
//! The contour is traced by bisection along rays from a point of maximal `r`;
//! quasiconcavity makes `r` non-increasing along each ray, so the level is
//! crossed once. On polygons the samples are then grouped by the edge pair of
//! their shortest chord and each group is replaced by an exact λ-bow.

use std::f64::consts::TAU;

use rayon::prelude::*;

use crate::bows::{bow_world, sector_frame, BowArc};
use crate::domains::{convex_ray, ConvexPolygon, Domain, Point2};
use crate::error::{Error, Result};
use crate::inaccessibility::convex_inaccessibility;
use crate::optimizer::{maximize, DEFAULT_TOL};
use crate::search::golden_section_min;

pub const DEFAULT_RAYS: usize = 512;

/// Positional tolerance of the crossing along each ray.
pub const RAY_TOL: f64 = 1e-10;

/// Angular tolerance when bracketing a corner between two arcs.
pub const CORNER_TOL: f64 = 1e-8;

/// What a piece of the level-set boundary consists of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArcLabel {
    /// Envelope of chords between the two edges (smaller index first).
    Bow { edges: (usize, usize) },
    /// A stretch of the domain boundary on this edge.
    Boundary { edge: usize },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ArcPiece {
    Bow(BowArc),
    Edge { edge: usize },
}

/// A piece of the boundary, from `start` to `end` in contour order.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LevelArc {
    pub label: ArcLabel,
    pub piece: ArcPiece,
    pub start: Point2,
    pub end: Point2,
    /// Bow parameter at `start` and `end` (unused for edges).
    pub theta_start: f64,
    pub theta_end: f64,
}

impl LevelArc {
    /// World point at a fraction `s ∈ [0, 1]` from `start` to `end`.
    pub fn point_at(&self, s: f64) -> Point2 {
        match self.piece {
            ArcPiece::Bow(arc) => {
                let t = self.theta_start + (self.theta_end - self.theta_start) * s;
                bow_world(&arc, t.clamp(arc.theta_lo, arc.theta_hi)).expect("clamped into range")
            }
            ArcPiece::Edge { .. } => self.start.lerp(self.end, s),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LevelSet {
    pub r: f64,
    pub anchor: Point2,
    /// Closed polyline, counterclockwise around `anchor`; the last point connects to the first.
    pub contour: Vec<Point2>,
    /// Ray angle of each contour sample.
    pub angles: Vec<f64>,
    /// Samples projected onto the domain boundary because the level was not crossed inside.
    pub clamped: Vec<bool>,
    /// Exact pieces in contour order; empty until [`arcs`] runs.
    pub arcs: Vec<LevelArc>,
}

/// Contour of level `r`, anchored at the maximizer of `r`.
pub fn contour(domain: &Domain, r: f64, rays: usize) -> Result<LevelSet> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::InvalidLevel { r });
    }
    let max = maximize(domain, DEFAULT_TOL)?;
    if r >= max.r {
        return Err(Error::EmptyLevelSet { r, max: max.r });
    }
    contour_from(domain, max.point, r, rays)
}

/// One crossing of the level along the ray at `angle`.
struct RayHit {
    point: Point2,
    clamped: bool,
}

fn r_or_zero(domain: &Domain, poly: &ConvexPolygon, x: Point2) -> f64 {
    if domain.check_interior(x).is_ok() {
        convex_inaccessibility(poly, x).r
    } else {
        0.0
    }
}

fn ray_hit(domain: &Domain, poly: &ConvexPolygon, anchor: Point2, level: f64, angle: f64) -> RayHit {
    let u = Point2::from_angle(angle);
    let (t_max, _) = convex_ray(poly, anchor, u);
    let (mut lo, mut hi) = (0.0, t_max);
    while hi - lo > RAY_TOL {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if r_or_zero(domain, poly, anchor + u * mid) > level {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if t_max - lo <= 2.0 * RAY_TOL {
        RayHit {
            point: anchor + u * t_max,
            clamped: true,
        }
    } else {
        RayHit {
            point: anchor + u * (0.5 * (lo + hi)),
            clamped: false,
        }
    }
}

/// Contour of level `r` traced from `anchor`, which must satisfy `r(anchor) > r`.
pub fn contour_from(domain: &Domain, anchor: Point2, r: f64, rays: usize) -> Result<LevelSet> {
    let poly = domain.as_convex().ok_or(Error::ConvexDomainRequired)?;
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::InvalidLevel { r });
    }
    if domain.check_interior(anchor).is_err() || convex_inaccessibility(poly, anchor).r <= r {
        return Err(Error::AnchorNotFound);
    }
    let rays = rays.max(3);
    let angles: Vec<f64> = (0..rays).map(|k| TAU * k as f64 / rays as f64).collect();
    let hits: Vec<RayHit> = angles.par_iter().map(|&a| ray_hit(domain, poly, anchor, r, a)).collect();
    Ok(LevelSet {
        r,
        anchor,
        contour: hits.iter().map(|h| h.point).collect(),
        clamped: hits.iter().map(|h| h.clamped).collect(),
        angles,
        arcs: Vec::new(),
    })
}

/// Smallest distance from the contour to the domain boundary.
pub fn boundary_contact(domain: &Domain, level: &LevelSet) -> f64 {
    level
        .contour
        .iter()
        .zip(&level.clamped)
        .map(|(&q, &c)| if c { 0.0 } else { domain.boundary_distance(q) })
        .fold(f64::INFINITY, f64::min)
}

fn label_at(poly: &ConvexPolygon, hit: &RayHit) -> Result<ArcLabel> {
    if hit.clamped {
        return Ok(ArcLabel::Boundary {
            edge: poly.nearest_edge(hit.point),
        });
    }
    let (i, j) = convex_inaccessibility(poly, hit.point).minimizing_chord.edge_pair();
    let ni = poly.outward_normal(i);
    let nj = poly.outward_normal(j);
    if ni.dot(nj) < 0.0 && ni.cross(nj).abs() <= 1e-10 {
        return Err(Error::LabelingInconsistent(format!(
            "sample {} is resolved by the parallel edges {i} and {j}",
            hit.point
        )));
    }
    Ok(ArcLabel::Bow { edges: (i, j) })
}

/// Label of every contour sample: the edge pair of its shortest chord, or the
/// boundary edge it was clamped to.
pub fn sample_labels(domain: &Domain, level: &LevelSet) -> Result<Vec<ArcLabel>> {
    let poly = domain.as_convex().ok_or(Error::ConvexDomainRequired)?;
    level
        .contour
        .iter()
        .zip(&level.clamped)
        .map(|(&point, &clamped)| label_at(poly, &RayHit { point, clamped }))
        .collect()
}

/// Fills `level.arcs` with exact pieces. Sampled domains are left without arcs.
pub fn arcs(domain: &Domain, mut level: LevelSet) -> Result<LevelSet> {
    let poly = domain.as_convex().ok_or(Error::ConvexDomainRequired)?;
    level.arcs.clear();
    if domain.is_sampled() {
        return Ok(level);
    }
    let n = level.contour.len();
    let labels = sample_labels(domain, &level)?;

    let first_change = (0..n).find(|&k| labels[k] != labels[(k + n - 1) % n]);
    let Some(start) = first_change else {
        // A single label all the way round cannot close up for a bounded level set.
        return Err(Error::LabelingInconsistent(format!("all samples carry {:?}", labels[0])));
    };

    // Runs in contour order, each as (first sample, sample count).
    let mut runs: Vec<(usize, usize)> = Vec::new();
    let mut k = start;
    let mut walked = 0;
    while walked < n {
        let mut len = 1;
        while walked + len < n && labels[(k + len) % n] == labels[k] {
            len += 1;
        }
        runs.push((k, len));
        walked += len;
        k = (k + len) % n;
    }

    // Corner between the last sample of each run and the first of the next.
    let anchor = level.anchor;
    let r = level.r;
    let corners: Vec<Point2> = runs
        .iter()
        .map(|&(first, len)| {
            let last = (first + len - 1) % n;
            let next = (last + 1) % n;
            let mut a0 = level.angles[last];
            let mut a1 = level.angles[next];
            if a1 < a0 {
                a1 += TAU;
            }
            let want = labels[last];
            let mut p0 = level.contour[last];
            let mut p1 = level.contour[next];
            while a1 - a0 > CORNER_TOL {
                let mid = 0.5 * (a0 + a1);
                let hit = ray_hit(domain, poly, anchor, r, mid);
                let same = label_at(poly, &hit).map(|l| l == want).unwrap_or(false);
                if same {
                    a0 = mid;
                    p0 = hit.point;
                } else {
                    a1 = mid;
                    p1 = hit.point;
                }
            }
            p0.midpoint(p1)
        })
        .collect();

    let centroid = poly.centroid();
    let m = runs.len();
    for (idx, &(first, len)) in runs.iter().enumerate() {
        let start_pt = corners[(idx + m - 1) % m];
        let end_pt = corners[idx];
        let label = labels[first];
        let arc = match label {
            ArcLabel::Boundary { edge } => LevelArc {
                label,
                piece: ArcPiece::Edge { edge },
                start: start_pt,
                end: end_pt,
                theta_start: 0.0,
                theta_end: 0.0,
            },
            ArcLabel::Bow { edges: (i, j) } => {
                let frame = sector_frame(&poly.edge_line(i), &poly.edge_line(j), centroid)?;
                let full = BowArc::full(frame, r)?;
                let theta_of = |q: Point2| {
                    golden_section_min(
                        |t| bow_world(&full, t).map(|b| b.distance(q)).unwrap_or(f64::INFINITY),
                        full.theta_lo,
                        full.theta_hi,
                        1e-13,
                    )
                };
                let (ts, ds) = theta_of(start_pt);
                let (te, de) = theta_of(end_pt);
                let worst = ds.max(de);
                if worst > 1e-5 {
                    return Err(Error::LabelingInconsistent(format!(
                        "bow for edges ({i}, {j}) misses its corner by {worst:e}"
                    )));
                }
                // Interior samples must sit on the same bow.
                for s in 0..len {
                    let q = level.contour[(first + s) % n];
                    let (_, d) = theta_of(q);
                    if d > 1e-5 {
                        return Err(Error::LabelingInconsistent(format!(
                            "sample {q} is {d:e} away from the bow for edges ({i}, {j})"
                        )));
                    }
                }
                let bow = BowArc::new(frame, r, ts.min(te), ts.max(te))?;
                LevelArc {
                    label,
                    piece: ArcPiece::Bow(bow),
                    start: start_pt,
                    end: end_pt,
                    theta_start: ts,
                    theta_end: te,
                }
            }
        };
        level.arcs.push(arc);
    }
    Ok(level)
}
