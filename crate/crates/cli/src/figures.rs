//! The figure set: level sets, maximum sets, bows and notable points.
//!
//! Every artifact is a pure function of fixed parameters, so regeneration is
//! byte-identical.

use std::f64::consts::{PI, TAU};
use std::path::{Path, PathBuf};

use inaccess::analytic::{ellipse_solution, isosceles_solve, notable_points, rectangle_solution};
use inaccess::bows::{bow_point, bow_segment, theta_range};
use inaccess::domains::{SampledConvexDomain, SimplePolygon};
use inaccess::{arcs, chord_through, contour_from, maximize, oracle_r, ConvexPolygon, DirectionAngle, Domain, OracleConfig, Point2};
use inaccess::optimizer::DEFAULT_TOL;

use crate::format::sig9;
use crate::svg::Svg;
use crate::{arc_polyline, io_error, label_text, CliError};

/// Width of the notch standing in for the slit.
pub const NOTCH_WIDTH: f64 = 1e-3;

/// Boundary samples on the notched ellipse.
pub const SLIT_SAMPLES: usize = 256;

/// Levels drawn on the notched ellipse.
pub const SLIT_LEVELS: [f64; 3] = [1.2, 1.5, 1.8];

/// Numerators of the λ grid `k/50` for the notable-point curves.
const LAMBDA_GRID: (u32, u32) = (10, 150);

const COLORS: [&str; 5] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"];

#[derive(Clone, Debug, PartialEq)]
pub struct Artifact {
    pub path: PathBuf,
    pub description: String,
}

/// Writes all six artifacts into `dir`, creating it if needed.
pub fn write_all(dir: &Path) -> Result<Vec<Artifact>, CliError> {
    std::fs::create_dir_all(dir).map_err(io_error(format!("creating {}", dir.display())))?;
    let (curve_csv, curve_svg) = notable_point_curves()?;
    let items = [
        ("slit_ellipse_levels.svg", slit_ellipse_levels()?, "level sets of the slit ellipse (qualitative)"),
        ("ellipse_maximum_set.svg", ellipse_maximum_set()?, "ellipse level sets and the maximum segment"),
        ("bows.svg", bows()?, "λ-bows at r = 1 for λ = -1, 0, 1"),
        ("rectangle_region.svg", rectangle_region()?, "rectangle maximum set bounded by corner astroids"),
        ("notable_points.csv", curve_csv, "heights of H, I, G, O and the maximizer against λ"),
        ("notable_points.svg", curve_svg, "plot of the notable-point heights"),
    ];
    items
        .into_iter()
        .map(|(name, body, description)| {
            let path = dir.join(name);
            std::fs::write(&path, body).map_err(io_error(format!("writing {}", path.display())))?;
            Ok(Artifact {
                path,
                description: description.to_string(),
            })
        })
        .collect()
}

/// The ellipse `x²/4 + y² < 1` with the slit `{(x, 0) : x ≤ 0}` widened into a notch.
pub fn notched_ellipse() -> Result<SimplePolygon, CliError> {
    let h = 0.5 * NOTCH_WIDTH;
    let delta = h.asin();
    let m = SLIT_SAMPLES - 1;
    // From just below the slit, counterclockwise round to just above it.
    let mut vertices: Vec<Point2> = (0..=m)
        .map(|k| {
            let t = PI + delta + (TAU - 2.0 * delta) * k as f64 / m as f64;
            Point2::new(2.0 * t.cos(), t.sin())
        })
        .collect();
    vertices.push(Point2::new(0.0, h));
    vertices.push(Point2::new(0.0, -h));
    Ok(SimplePolygon::new(vertices)?)
}

/// Brute-force `r` on a non-convex domain, zero outside.
fn sampled_r(domain: &Domain, p: Point2) -> f64 {
    let config = OracleConfig {
        angle_samples: 120,
        grid_resolution: 2,
        refinement_levels: 0,
    };
    oracle_r(domain, p, &config).unwrap_or(0.0)
}

/// First crossing of each level along the ray from `anchor`: one shared coarse scan, then bisection per level.
fn ray_crossings(domain: &Domain, anchor: Point2, angle: f64, levels: &[f64]) -> Vec<Point2> {
    const SCAN: usize = 16;
    const BISECTIONS: usize = 14;
    let u = Point2::from_angle(angle);
    let t_max = match chord_through(domain, anchor, DirectionAngle::new(angle)) {
        Ok(c) => [c.endpoint_a, c.endpoint_b]
            .into_iter()
            .map(|e| (e - anchor).dot(u))
            .fold(0.0, f64::max),
        Err(_) => return vec![anchor; levels.len()],
    };
    let at = |t: f64| anchor + u * t;
    let scan: Vec<f64> = (1..=SCAN).map(|k| sampled_r(domain, at(t_max * k as f64 / SCAN as f64))).collect();
    levels
        .iter()
        .map(|&level| {
            let Some(k) = scan.iter().position(|&v| v <= level) else {
                return at(t_max);
            };
            let (mut lo, mut hi) = (t_max * k as f64 / SCAN as f64, t_max * (k + 1) as f64 / SCAN as f64);
            for _ in 0..BISECTIONS {
                let mid = 0.5 * (lo + hi);
                if sampled_r(domain, at(mid)) > level {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            at(0.5 * (lo + hi))
        })
        .collect()
}

pub fn slit_ellipse_levels() -> Result<String, CliError> {
    const RAYS: usize = 72;
    let domain: Domain = notched_ellipse()?.into();
    let anchor = Point2::new(0.25, 0.0);
    let (lo, hi) = domain.bounding_box();
    let mut svg = Svg::new(lo, hi, "level sets of the slit ellipse (qualitative: notch of width 1e-3)");
    svg.domain(domain.boundary());
    let crossings: Vec<Vec<Point2>> = (0..RAYS)
        .map(|i| ray_crossings(&domain, anchor, TAU * i as f64 / RAYS as f64, &SLIT_LEVELS))
        .collect();
    for (k, &level) in SLIT_LEVELS.iter().enumerate() {
        let points: Vec<Point2> = crossings.iter().map(|c| c[k]).collect();
        svg.contour(&points, COLORS[k], &format!("r={}", sig9(level)));
    }
    svg.dot(Point2::ORIGIN, "black");
    svg.text(Point2::new(lo.x, hi.y), "qualitative");
    Ok(svg.finish())
}

pub fn ellipse_maximum_set() -> Result<String, CliError> {
    const SAMPLES: usize = 512;
    const RAYS: usize = 96;
    let domain: Domain = SampledConvexDomain::ellipse(2.0, 1.0, SAMPLES)?.into();
    let exact = ellipse_solution(2.0, 1.0)?;
    let max = maximize(&domain, DEFAULT_TOL)?;
    let (lo, hi) = domain.bounding_box();
    let mut svg = Svg::new(lo, hi, "ellipse a = 2, b = 1: level sets and the maximum segment");
    svg.domain(domain.boundary());
    for (k, level) in [1.0, 1.5, 1.9].into_iter().enumerate() {
        let set = contour_from(&domain, max.point, level, RAYS)?;
        svg.contour(&set.contour, COLORS[k], &format!("r={}", sig9(level)));
    }
    svg.arc(&[exact.endpoints.0, exact.endpoints.1], "black", "maximum set", false);
    // Both endpoints carry two chords of length R: the vertical axis and a horizontal one.
    svg.arc(&[Point2::new(0.0, -1.0), Point2::new(0.0, 1.0)], "gray", "vertical chord", true);
    for e in [exact.endpoints.0, exact.endpoints.1] {
        let half = 2.0 * (1.0 - e.y * e.y).sqrt();
        svg.arc(&[Point2::new(-half, e.y), Point2::new(half, e.y)], "gray", "horizontal chord", true);
        svg.dot(e, "black");
    }
    Ok(svg.finish())
}

pub fn bows() -> Result<String, CliError> {
    const SPACING: f64 = 2.8;
    const SIDE: f64 = 1.5;
    const CHORDS: usize = 9;
    let r = 1.0;
    let lambdas = [-1.0, 0.0, 1.0];
    let lo = Point2::new(-SIDE * 0.75, 0.0);
    let hi = Point2::new(SPACING * 2.0 + SIDE, SIDE);
    let mut svg = Svg::new(lo, hi, "λ-bows at r = 1 for λ = -1, 0, 1");
    for (k, &lambda) in lambdas.iter().enumerate() {
        let origin = Point2::new(SPACING * k as f64, 0.0);
        let alpha = 1f64.atan2(lambda);
        let side_b = Point2::from_angle(alpha) * SIDE;
        svg.arc(&[origin + side_b, origin, origin + Point2::new(SIDE, 0.0)], "black", "sector", false);
        let (t0, t1) = theta_range(lambda);
        for i in 0..CHORDS {
            let theta = t0 + (t1 - t0) * (i as f64 + 0.5) / CHORDS as f64;
            let (a, b) = bow_segment(lambda, r, theta);
            svg.arc(&[origin + a, origin + b], "gray", "chord", true);
        }
        let bow: Vec<Point2> = (0..=128)
            .map(|i| origin + bow_point(lambda, r, t0 + (t1 - t0) * i as f64 / 128.0).expect("theta in range"))
            .collect();
        svg.arc(&bow, COLORS[k], &format!("bow λ={}", sig9(lambda)), false);
        svg.text(origin + Point2::new(0.1, -0.15), &format!("λ = {}", sig9(lambda)));
    }
    Ok(svg.finish())
}

pub fn rectangle_region() -> Result<String, CliError> {
    let (a, b) = (3.0, 1.0);
    let rect = ConvexPolygon::rectangle(0.0, 0.0, a, b)?;
    let domain: Domain = rect.into();
    let exact = rectangle_solution(a, b)?;
    let max = maximize(&domain, DEFAULT_TOL)?;
    let level = max.r - inaccess::optimizer::REGION_LEVEL_OFFSET;
    let set = arcs(&domain, contour_from(&domain, max.point, level, 512)?)?;
    let (lo, hi) = domain.bounding_box();
    let mut svg = Svg::new(lo, hi, "rectangle 3 x 1: the maximum set has interior");
    svg.domain(domain.boundary());
    for bow in &exact.bows {
        svg.arc(&bow.sample(64), "gray", "corner astroid", true);
    }
    for arc in &set.arcs {
        svg.arc(&arc_polyline(arc), "#d62728", &label_text(&arc.label), false);
    }
    svg.dot(max.point, "black");
    Ok(svg.finish())
}

/// λ grid on `[0.2, 3]` in steps of 1/50, with `1/√3` inserted.
pub fn lambda_grid() -> Vec<f64> {
    let mut grid: Vec<f64> = (LAMBDA_GRID.0..=LAMBDA_GRID.1).map(|k| k as f64 / 50.0).collect();
    grid.push(1.0 / 3f64.sqrt());
    grid.sort_by(f64::total_cmp);
    grid
}

/// Heights of the notable points and the maximizer, as CSV and as a plot.
pub fn notable_point_curves() -> Result<(String, String), CliError> {
    let grid = lambda_grid();
    let mut rows: Vec<[f64; 6]> = Vec::with_capacity(grid.len());
    for &lambda in &grid {
        let np = notable_points(lambda);
        let sol = isosceles_solve(lambda)?;
        rows.push([lambda, np.h.y, np.i.y, np.g.y, np.o.y, sol.i2()]);
    }
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let csv_err = |e: csv::Error| CliError::Io {
        context: "writing notable-point CSV".into(),
        source: e.into(),
    };
    w.write_record(["lambda", "H", "I", "G", "O", "I2"]).map_err(csv_err)?;
    for row in &rows {
        w.write_record(row.iter().map(|v| format!("{v:?}"))).map_err(csv_err)?;
    }
    let csv_bytes = w.into_inner().map_err(|e| CliError::Io {
        context: "writing notable-point CSV".into(),
        source: e.into_error(),
    })?;

    let (lo, hi) = (Point2::new(0.2, -0.25), Point2::new(3.0, 1.25));
    let mut svg = Svg::new(lo, hi, "heights of H, I, G, O and the maximizer against λ");
    svg.arc(&[Point2::new(lo.x, 0.0), Point2::new(hi.x, 0.0)], "black", "axis", false);
    let names = ["H", "I", "G", "O", "I_D"];
    for (c, name) in names.iter().enumerate() {
        // Keep each curve inside the plotted window.
        let points: Vec<Point2> = rows
            .iter()
            .map(|row| Point2::new(row[0], row[c + 1].clamp(lo.y, hi.y)))
            .collect();
        svg.arc(&points, COLORS[c], name, false);
        let last = points.last().copied().unwrap_or(hi);
        svg.text(Point2::new(last.x - 0.1, last.y + 0.03), name);
    }
    let s = 1.0 / 3f64.sqrt();
    svg.dot(Point2::new(s, 1.0 / 3.0), "black");
    Ok((String::from_utf8(csv_bytes).expect("CSV output is UTF-8"), svg.finish()))
}
