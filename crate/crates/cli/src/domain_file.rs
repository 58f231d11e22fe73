//! JSON domain descriptions.
//!
//! ```json
//! {"kind": "polygon", "vertices": [[0, 0], [1.1547, 0], [0.57735, 1]]}
//! {"kind": "ellipse", "a": 2, "b": 1, "sampleCount": 4096}
//! {"kind": "sampled", "vertices": [[1, 0], [0.99518, 0.09802], ...]}
//! ```

use std::path::{Path, PathBuf};

use inaccess::domains::{SampledConvexDomain, DEFAULT_SAMPLES};
use inaccess::{ConvexPolygon, Domain, Error, Point2};
use serde::{de, Deserialize};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq)]
pub enum DomainFile {
    Polygon { vertices: Vec<[f64; 2]> },
    Ellipse { a: f64, b: f64, sample_count: Option<usize> },
    Sampled { vertices: Vec<[f64; 2]> },
}

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Kind {
    Polygon,
    Ellipse,
    Sampled,
}

// A flat record keeps serde_json's line/column on type errors; an internally
// tagged enum would buffer the input and lose them.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    kind: Kind,
    vertices: Option<Vec<[f64; 2]>>,
    a: Option<f64>,
    b: Option<f64>,
    #[serde(rename = "sampleCount")]
    sample_count: Option<usize>,
}

#[derive(Debug, Error)]
pub enum DomainFileError {
    #[error("{path}: {source}")]
    Read {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// Syntax or schema error; the message carries line and column.
    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    #[error("{path}: field `{field}`: {source}")]
    Invalid {
        path: PathBuf,
        field: String,
        #[source]
        source: Error,
    },
}

impl DomainFile {
    pub fn parse(text: &str) -> serde_json::Result<Self> {
        let raw: RawFile = serde_json::from_str(text)?;
        let present = [
            ("vertices", raw.vertices.is_some()),
            ("a", raw.a.is_some()),
            ("b", raw.b.is_some()),
            ("sampleCount", raw.sample_count.is_some()),
        ];
        let allowed: &[&'static str] = match raw.kind {
            Kind::Polygon | Kind::Sampled => &["vertices"],
            Kind::Ellipse => &["a", "b", "sampleCount"],
        };
        if let Some((field, _)) = present.iter().find(|(f, set)| *set && !allowed.contains(f)) {
            return Err(de::Error::unknown_field(field, allowed));
        }
        let need = |v: Option<f64>, field: &'static str| v.ok_or_else(|| de::Error::missing_field(field));
        Ok(match raw.kind {
            Kind::Polygon => DomainFile::Polygon {
                vertices: raw.vertices.ok_or_else(|| de::Error::missing_field("vertices"))?,
            },
            Kind::Sampled => DomainFile::Sampled {
                vertices: raw.vertices.ok_or_else(|| de::Error::missing_field("vertices"))?,
            },
            Kind::Ellipse => DomainFile::Ellipse {
                a: need(raw.a, "a")?,
                b: need(raw.b, "b")?,
                sample_count: raw.sample_count,
            },
        })
    }

    /// Builds the validated domain; on failure returns the offending field and the cause.
    pub fn build(&self) -> Result<Domain, (String, Error)> {
        match self {
            DomainFile::Polygon { vertices } => ConvexPolygon::new(points(vertices))
                .map(Domain::from)
                .map_err(|e| (vertex_field(&e), e)),
            DomainFile::Sampled { vertices } => SampledConvexDomain::from_points(points(vertices))
                .map(Domain::from)
                .map_err(|e| (vertex_field(&e), e)),
            DomainFile::Ellipse { a, b, sample_count } => {
                let samples = sample_count.unwrap_or(DEFAULT_SAMPLES);
                SampledConvexDomain::ellipse(*a, *b, samples).map(Domain::from).map_err(|e| {
                    let field = match e {
                        Error::TooFewSamples { .. } => "sampleCount",
                        _ if *a <= 0.0 || !a.is_finite() => "a",
                        _ => "b",
                    };
                    (field.to_string(), e)
                })
            }
        }
    }
}

fn points(vertices: &[[f64; 2]]) -> Vec<Point2> {
    vertices.iter().map(|&[x, y]| Point2::new(x, y)).collect()
}

fn vertex_field(e: &Error) -> String {
    match e {
        Error::NonFiniteCoordinate { index } | Error::DegenerateEdge { index } => format!("vertices[{index}]"),
        Error::NotConvex { triple } => format!("vertices[{}]", triple.1),
        _ => "vertices".to_string(),
    }
}

pub fn load(path: &Path) -> Result<Domain, DomainFileError> {
    let text = std::fs::read_to_string(path).map_err(|source| DomainFileError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    let file = DomainFile::parse(&text).map_err(|source| DomainFileError::Parse {
        path: path.to_path_buf(),
        source,
    })?;
    file.build().map_err(|(field, source)| DomainFileError::Invalid {
        path: path.to_path_buf(),
        field,
        source,
    })
}
