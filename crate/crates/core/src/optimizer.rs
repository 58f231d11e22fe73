//! Maximization of `r` by centroid cutting planes.
//!
//! At a query point `p` with shortest chord `[P, Q]`, shifting the chord
//! parallel to itself changes its length at a rate fixed by the supporting
//! lines at `P` and `Q`. Chord length along parallel shifts is concave, so if
//! the length drops on one side of the chord line, every point there has
//! `r < r(p)` and that side can be discarded. When neither side drops, the
//! supports admit antiparallel normals and `p` already attains the maximum.

use std::f64::consts::{PI, TAU};

use crate::domains::{polygon_centroid, Chord, ConvexPolygon, Domain, Point2};
use crate::error::{Error, Result};
use crate::inaccessibility::{convex_inaccessibility, RResult};
use crate::levelsets::{contour_from, DEFAULT_RAYS};
use crate::search::bisect_root;

/// Default stopping diameter of the localization polygon.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Iteration cap.
pub const MAX_ITERATIONS: usize = 10_000;

/// Slopes of the parallel-chord length below this count as zero (supports parallel).
pub const PARALLEL_SLOPE_TOL: f64 = 1e-10;

/// Distance tolerance matching parallel side pairs to `R`.
pub const PAIR_DISTANCE_TOL: f64 = 1e-9;

/// Offset below `R` of the contour used to describe a region maximum.
pub const REGION_LEVEL_OFFSET: f64 = 1e-7;

/// Half-plane cut: points worth keeping satisfy `⟨x − at, normal⟩ ≤ 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cut {
    pub at: Point2,
    pub normal: Point2,
}

impl Cut {
    pub fn keeps(&self, x: Point2) -> bool {
        (x - self.at).dot(self.normal) <= 0.0
    }

    pub fn signed_offset(&self, x: Point2) -> f64 {
        (x - self.at).dot(self.normal)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum CutOutcome {
    /// One cut per shortest chord; each keeps every point with larger `r`.
    Cuts(Vec<Cut>),
    /// The supports at the ends of `chord` are antiparallel: `r(p) = R`.
    ParallelSupports { chord: Chord },
}

/// How the search stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Termination {
    /// Localization polygon shrank below the tolerance.
    Converged,
    /// A shortest chord with antiparallel supports was found.
    ParallelSupports,
    /// The cuts at the query point leave only that point.
    Pinned,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MaxResult {
    /// The inaccessibility `R` of the domain.
    pub r: f64,
    /// A maximizer.
    pub point: Point2,
    /// The maximum set is not a single point.
    pub is_region: bool,
    /// Parallel side pairs whose distance equals `R`.
    pub parallel_side_pairs: Vec<(usize, usize)>,
    /// Endpoints of the maximum set when it was detected as a segment.
    pub segment: Option<(Point2, Point2)>,
    pub iterations: usize,
    /// Diameter of the final localization polygon; zero when a signal certified the point.
    pub localization_diameter: f64,
    pub termination: Termination,
}

/// One cutting-plane iteration, recorded for inspection.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceStep {
    /// Localization polygon before the cuts.
    pub polygon: Vec<Point2>,
    pub query: Point2,
    pub r: f64,
    pub cuts: Vec<Cut>,
}

/// Cutting planes at `p` derived from its shortest chords.
pub fn cut_at(domain: &Domain, p: Point2) -> Result<CutOutcome> {
    let poly = domain.as_convex().ok_or(Error::ConvexDomainRequired)?;
    domain.check_interior(p)?;
    cuts_for(poly, &convex_inaccessibility(poly, p))
}

/// Edges whose supporting lines pass through a chord endpoint, restricted to
/// those the shifted chord can exit through (`side` is the sign of `⟨u, n⟩`).
fn active_normals(poly: &ConvexPolygon, q: Point2, edge: usize, u: Point2, side: f64) -> Vec<Point2> {
    let n = poly.len();
    let vtol = 1e-11 * poly.diameter();
    let mut edges = vec![edge];
    if q.distance(poly.vertex(edge)) <= vtol {
        edges.push((edge + n - 1) % n);
    }
    if q.distance(poly.vertex(edge + 1)) <= vtol {
        edges.push((edge + 1) % n);
    }
    edges
        .into_iter()
        .map(|k| poly.outward_normal(k))
        .filter(|nk| side * u.dot(*nk) > 0.0)
        .collect()
}

/// Right derivative of the chord length when the chord is shifted along `m`.
fn shift_slope(p_normals: &[Point2], q_normals: &[Point2], u: Point2, m: Point2) -> f64 {
    let back = p_normals.iter().map(|n| m.dot(*n) / u.dot(*n)).fold(f64::INFINITY, f64::min);
    let front = q_normals.iter().map(|n| -m.dot(*n) / u.dot(*n)).fold(f64::INFINITY, f64::min);
    back + front
}

/// Normals of the cuts positively span the plane, so together they keep only `at`.
fn normals_span_plane(cuts: &[Cut]) -> bool {
    if cuts.len() < 3 {
        return false;
    }
    let mut angles: Vec<f64> = cuts.iter().map(|c| c.normal.atan2().rem_euclid(TAU)).collect();
    angles.sort_by(f64::total_cmp);
    let mut gap = angles[0] + TAU - angles[angles.len() - 1];
    for w in angles.windows(2) {
        gap = gap.max(w[1] - w[0]);
    }
    gap < PI - 1e-12
}

pub(crate) fn cuts_for(poly: &ConvexPolygon, res: &RResult) -> Result<CutOutcome> {
    let mut cuts = Vec::with_capacity(res.minimizers.len());
    for chord in &res.minimizers {
        let u = (chord.endpoint_b - chord.endpoint_a).normalize();
        let m = u.perp();
        let pn = active_normals(poly, chord.endpoint_a, chord.edge_a, u, -1.0);
        let qn = active_normals(poly, chord.endpoint_b, chord.edge_b, u, 1.0);
        let up = shift_slope(&pn, &qn, u, m);
        let down = shift_slope(&pn, &qn, u, -m);
        let normal = if up > PARALLEL_SLOPE_TOL {
            -m
        } else if down > PARALLEL_SLOPE_TOL {
            m
        } else {
            return Ok(CutOutcome::ParallelSupports { chord: *chord });
        };
        cuts.push(Cut {
            at: chord.through,
            normal,
        });
    }
    if normals_span_plane(&cuts) {
        return Err(Error::AmbiguousSide);
    }
    Ok(CutOutcome::Cuts(cuts))
}

/// Sutherland–Hodgman clip of a convex polygon by the kept side of `cut`.
pub(crate) fn clip(poly: &[Point2], cut: &Cut) -> Vec<Point2> {
    let n = poly.len();
    let mut out = Vec::with_capacity(n + 1);
    for k in 0..n {
        let a = poly[k];
        let b = poly[(k + 1) % n];
        let da = cut.signed_offset(a);
        let db = cut.signed_offset(b);
        if da <= 0.0 {
            out.push(a);
        }
        if (da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0) {
            out.push(a + (b - a) * (da / (da - db)));
        }
    }
    out
}

fn diameter(points: &[Point2]) -> f64 {
    crate::domains::point_set_diameter(points)
}

/// Maximizes `r` over a convex domain.
pub fn maximize(domain: &Domain, tol: f64) -> Result<MaxResult> {
    run(domain, tol, None)
}

/// [`maximize`], also returning every cutting-plane step.
pub fn maximize_traced(domain: &Domain, tol: f64) -> Result<(MaxResult, Vec<TraceStep>)> {
    let mut trace = Vec::new();
    let res = run(domain, tol, Some(&mut trace))?;
    Ok((res, trace))
}

fn run(domain: &Domain, tol: f64, mut trace: Option<&mut Vec<TraceStep>>) -> Result<MaxResult> {
    let poly = domain.as_convex().ok_or(Error::ConvexDomainRequired)?;
    let mut loc: Vec<Point2> = poly.vertices().to_vec();
    let mut stalled = 0usize;
    let mut last_diam = f64::INFINITY;
    for iteration in 0..MAX_ITERATIONS {
        let diam = diameter(&loc);
        let query = polygon_centroid(&loc);
        if diam < tol {
            let res = convex_inaccessibility(poly, query);
            return finish(domain, poly, res, query, iteration, diam, Termination::Converged, None);
        }
        if domain.check_interior(query).is_err() {
            return Err(Error::NotConverged {
                iterations: iteration,
                diameter: diam,
            });
        }
        let res = convex_inaccessibility(poly, query);
        match cuts_for(poly, &res) {
            Err(Error::AmbiguousSide) => {
                return finish(domain, poly, res, query, iteration + 1, 0.0, Termination::Pinned, None);
            }
            Err(e) => return Err(e),
            Ok(CutOutcome::ParallelSupports { chord }) => {
                return finish(domain, poly, res, query, iteration + 1, 0.0, Termination::ParallelSupports, Some(chord));
            }
            Ok(CutOutcome::Cuts(cuts)) => {
                if let Some(t) = trace.as_deref_mut() {
                    t.push(TraceStep {
                        polygon: loc.clone(),
                        query,
                        r: res.r,
                        cuts: cuts.clone(),
                    });
                }
                for cut in &cuts {
                    loc = clip(&loc, cut);
                }
                if loc.is_empty() {
                    return Err(Error::NotConverged {
                        iterations: iteration + 1,
                        diameter: 0.0,
                    });
                }
            }
        }
        // No progress for a long stretch means the polygon degenerated along a cut line.
        if diam >= last_diam {
            stalled += 1;
            if stalled >= 200 {
                return Err(Error::NotConverged {
                    iterations: iteration + 1,
                    diameter: diam,
                });
            }
        } else {
            stalled = 0;
            last_diam = diam;
        }
    }
    Err(Error::NotConverged {
        iterations: MAX_ITERATIONS,
        diameter: diameter(&loc),
    })
}

#[allow(clippy::too_many_arguments)]
fn finish(
    domain: &Domain,
    poly: &ConvexPolygon,
    res: RResult,
    query: Point2,
    iterations: usize,
    localization_diameter: f64,
    termination: Termination,
    signal: Option<Chord>,
) -> Result<MaxResult> {
    let r = res.r;
    let mut out = MaxResult {
        r,
        point: query,
        is_region: false,
        parallel_side_pairs: Vec::new(),
        segment: None,
        iterations,
        localization_diameter,
        termination,
    };
    if !domain.is_sampled() {
        out.parallel_side_pairs = poly
            .parallel_edge_pairs(PARALLEL_SLOPE_TOL)
            .into_iter()
            .filter(|&(_, _, d)| (d - r).abs() <= PAIR_DISTANCE_TOL)
            .map(|(i, j, _)| (i, j))
            .collect();
    }
    if !out.parallel_side_pairs.is_empty() {
        out.is_region = true;
        let level = contour_from(domain, query, r - REGION_LEVEL_OFFSET, DEFAULT_RAYS)?;
        let center = polygon_centroid(&level.contour);
        if domain.check_interior(center).is_ok() && convex_inaccessibility(poly, center).r >= r - PAIR_DISTANCE_TOL {
            out.point = center;
        }
        return Ok(out);
    }
    if let Some(chord) = signal {
        let eta = if domain.is_sampled() { 1e-6 } else { 1e-9 } * poly.diameter();
        let (a, b) = level_extent(domain, poly, query, chord, r - eta);
        if a.distance(b) > 1e-3 * poly.diameter() {
            out.is_region = true;
            out.segment = Some((a, b));
        }
    }
    Ok(out)
}

/// Ends of `{x on the chord line : r(x) ≥ level}` around `p`.
fn level_extent(domain: &Domain, poly: &ConvexPolygon, p: Point2, chord: Chord, level: f64) -> (Point2, Point2) {
    let above = |x: Point2| domain.check_interior(x).is_ok() && convex_inaccessibility(poly, x).r >= level;
    let u = (chord.endpoint_b - chord.endpoint_a).normalize();
    let reach = |dir: Point2, t_end: f64| -> Point2 {
        let hi = t_end * (1.0 - 1e-9);
        if above(p + dir * hi) {
            return p + dir * hi;
        }
        let t = bisect_root(|t| if above(p + dir * t) { 1.0 } else { -1.0 }, 0.0, hi, 1e-12 * poly.diameter());
        p + dir * t
    };
    (reach(-u, p.distance(chord.endpoint_a)), reach(u, p.distance(chord.endpoint_b)))
}
