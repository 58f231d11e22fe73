//! Command-line front end for `inaccess`.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain validation error,
//! 3 numeric non-convergence. Errors go to the error stream.

pub mod domain_file;
pub mod figures;
pub mod format;
pub mod svg;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use inaccess::analytic::{ellipse_solution, isosceles_solve, notable_points};
use inaccess::levelsets::{sample_labels, ArcLabel, ArcPiece, LevelSet, DEFAULT_RAYS};
use inaccess::optimizer::{Termination, DEFAULT_TOL};
use inaccess::{arcs, contour, inaccessibility_at, maximize, Domain, Error, Point2};
use thiserror::Error;

use crate::domain_file::DomainFileError;
use crate::format::{point9, sig9, write_contour_csv, ContourRow};
use crate::svg::Svg;

#[derive(Debug, Parser)]
#[command(name = "inaccess", version, about = "Inaccessibility of planar convex domains")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate r at a point: value, shortest chord and its edge pair.
    Eval {
        #[arg(long)]
        domain: PathBuf,
        /// `X,Y`
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        point: Point2,
    },
    /// Trace the level set {r > V} and its arcs.
    Levelset {
        #[arg(long)]
        domain: PathBuf,
        #[arg(long = "r", allow_hyphen_values = true)]
        level: f64,
        #[arg(long, default_value_t = DEFAULT_RAYS, value_parser = parse_rays)]
        rays: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Locate the most inaccessible point.
    Max {
        #[arg(long)]
        domain: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Closed-form maximum on the isosceles triangle (0,0), (2λ,0), (λ,1).
    Isosceles {
        #[arg(long)]
        lambda: f64,
    },
    /// Closed-form maximum set of the ellipse x²/a² + y²/b² < 1.
    Ellipse {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
    },
    /// Regenerate the figure set into a directory.
    Figures {
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Svg,
    Csv,
}

fn parse_rays(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n >= 3 => Ok(n),
        Ok(n) => Err(format!("need at least 3 rays, got {n}")),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_point(s: &str) -> Result<Point2, String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("expected X,Y, got {s:?}"))?;
    let parse = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
    let p = Point2::new(parse(x)?, parse(y)?);
    if p.is_finite() {
        Ok(p)
    } else {
        Err(format!("coordinates must be finite, got {s:?}"))
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    DomainFile(#[from] DomainFileError),

    #[error(transparent)]
    Numeric(#[from] Error),

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::DomainFile(_) | CliError::Io { .. } => 2,
            CliError::Numeric(e) => numeric_exit_code(e),
        }
    }
}

fn numeric_exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidLevel { .. }
        | Error::EmptyLevelSet { .. }
        | Error::PointOutside { .. }
        | Error::PointTooCloseToBoundary { .. }
        | Error::ThetaOutOfRange { .. }
        | Error::AnchorNotFound => 1,
        Error::NotConverged { .. }
        | Error::NoRootBracketed { .. }
        | Error::LabelingInconsistent(_)
        | Error::AmbiguousSide => 3,
        Error::TooFewVertices { .. }
        | Error::NonFiniteCoordinate { .. }
        | Error::DegenerateEdge { .. }
        | Error::NotConvex { .. }
        | Error::SelfIntersecting { .. }
        | Error::TooFewSamples { .. }
        | Error::ConvexDomainRequired
        | Error::ParallelLines
        | Error::DegenerateCircle
        | Error::InvalidShape(_) => 2,
    }
}

pub(crate) fn io_error(context: impl Into<String>) -> impl FnOnce(std::io::Error) -> CliError {
    let context = context.into();
    move |source| CliError::Io { context, source }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                1
            } else {
                let _ = out.write_all(text.as_bytes());
                0
            };
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    let text = match command {
        Command::Eval { domain, point } => eval(&domain_file::load(&domain)?, point)?,
        Command::Levelset {
            domain,
            level,
            rays,
            format,
        } => levelset(&domain_file::load(&domain)?, level, rays, format)?,
        Command::Max { domain, tol } => max(&domain_file::load(&domain)?, tol)?,
        Command::Isosceles { lambda } => isosceles(lambda)?,
        Command::Ellipse { a, b } => ellipse(a, b)?,
        Command::Figures { out: dir } => figures::write_all(&dir)?
            .iter()
            .map(|f| format!("{}  {}\n", f.path.display(), f.description))
            .collect(),
    };
    out.write_all(text.as_bytes()).map_err(io_error("writing output"))
}

fn eval(domain: &Domain, p: Point2) -> Result<String, CliError> {
    let res = inaccessibility_at(domain, p)?;
    let c = &res.minimizing_chord;
    let (i, j) = c.edge_pair();
    Ok(format!(
        "r = {}\nchord = {} -> {}\ndirection = {}\nedges = ({i}, {j})\n",
        sig9(res.r),
        point9(c.endpoint_a),
        point9(c.endpoint_b),
        sig9(c.direction.radians()),
    ))
}

pub fn label_text(label: &ArcLabel) -> String {
    match label {
        ArcLabel::Bow { edges: (i, j) } => format!("bow:{i}-{j}"),
        ArcLabel::Boundary { edge } => format!("edge:{edge}"),
    }
}

/// Contour rows with per-sample labels; sampled domains carry no labels.
pub fn contour_rows(domain: &Domain, level: &LevelSet) -> Result<Vec<ContourRow>, Error> {
    let labels: Vec<String> = if domain.is_sampled() {
        vec![String::new(); level.contour.len()]
    } else {
        sample_labels(domain, level)?.iter().map(label_text).collect()
    };
    Ok(level
        .contour
        .iter()
        .zip(&level.angles)
        .zip(labels)
        .map(|((&point, &theta), label)| ContourRow { point, theta, label })
        .collect())
}

/// Points along an arc for drawing.
pub fn arc_polyline(arc: &inaccess::levelsets::LevelArc) -> Vec<Point2> {
    match arc.piece {
        ArcPiece::Bow(_) => (0..=64).map(|k| arc.point_at(k as f64 / 64.0)).collect(),
        ArcPiece::Edge { .. } => vec![arc.start, arc.end],
    }
}

fn levelset(domain: &Domain, r: f64, rays: usize, format: OutputFormat) -> Result<String, CliError> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(CliError::Usage(format!("--r must lie in (0, R), got {r}")));
    }
    let mut level = contour(domain, r, rays)?;
    if !domain.is_sampled() {
        level = arcs(domain, level)?;
    }
    match format {
        OutputFormat::Csv => {
            let mut buf = Vec::new();
            write_contour_csv(&mut buf, &contour_rows(domain, &level)?).map_err(|e| CliError::Io {
                context: "writing CSV".into(),
                source: e.into(),
            })?;
            Ok(String::from_utf8(buf).expect("CSV output is UTF-8"))
        }
        OutputFormat::Svg => {
            let (lo, hi) = domain.bounding_box();
            let mut svg = Svg::new(lo, hi, &format!("level set r = {}", sig9(r)));
            svg.domain(domain.boundary());
            svg.contour(&level.contour, "#1f77b4", &format!("r={}", sig9(r)));
            for arc in &level.arcs {
                svg.arc(&arc_polyline(arc), "#d62728", &label_text(&arc.label), false);
            }
            Ok(svg.finish())
        }
    }
}

fn max(domain: &Domain, tol: f64) -> Result<String, CliError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(CliError::Usage(format!("--tol must be positive, got {tol}")));
    }
    let res = maximize(domain, tol)?;
    let pairs = if res.parallel_side_pairs.is_empty() {
        "none".to_string()
    } else {
        res.parallel_side_pairs
            .iter()
            .map(|(i, j)| format!("({i}, {j})"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let termination = match res.termination {
        Termination::Converged => "converged",
        Termination::ParallelSupports => "parallel supports",
        Termination::Pinned => "pinned",
    };
    let mut s = format!(
        "R = {}\npoint = {}\nregion = {}\nparallel_side_pairs = {pairs}\n",
        sig9(res.r),
        point9(res.point),
        res.is_region
    );
    if let Some((a, b)) = res.segment {
        s += &format!("segment = {} -> {}\n", point9(a), point9(b));
    }
    s += &format!(
        "iterations = {}\ntermination = {termination}\nlocalization_diameter = {}\n",
        res.iterations,
        sig9(res.localization_diameter)
    );
    Ok(s)
}

fn isosceles(lambda: f64) -> Result<String, CliError> {
    let sol = isosceles_solve(lambda)?;
    let np = notable_points(lambda);
    let mut s = format!(
        "lambda = {}\ntheta = {}\nR = {}\nI_D = {}\n\n{:<6}{:<16}{}\n",
        sig9(lambda),
        sig9(sol.theta),
        sig9(sol.r),
        point9(sol.point),
        "point",
        "x",
        "y"
    );
    for (name, p) in [("H", np.h), ("I", np.i), ("G", np.g), ("O", np.o), ("I_D", sol.point)] {
        s += &format!("{name:<6}{:<16}{}\n", sig9(p.x), sig9(p.y));
    }
    Ok(s)
}

fn ellipse(a: f64, b: f64) -> Result<String, CliError> {
    let sol = ellipse_solution(a, b)?;
    Ok(format!(
        "R = {}\ny0 = {}\nendpoints = {} {}\n",
        sig9(sol.r),
        sig9(sol.y0),
        point9(sol.endpoints.0),
        point9(sol.endpoints.1)
    ))
}
