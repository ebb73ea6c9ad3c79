//! Library error type.

use crate::point::Point;
use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the library surface.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// Point is outside the domain or within the interior margin of its
    /// boundary (1e-12).
    PointNotInDomain { point: Point },
    /// `bisector_residual` needs its probe point on the unit circle.
    PointNotOnCircle { point: Point },
    /// Two distinct points were required.
    DegenerateInput,
    /// Polygon construction rejected the vertex list.
    InvalidPolygon { reason: String },
    /// Oracle resolution below the supported minimum.
    InvalidResolution { got: u32, min: u32 },
    /// The operation is undefined at the origin.
    OriginNotAllowed,
    /// Barrlund exponent must satisfy p >= 1.
    InvalidExponent { p: f64 },
    /// Dilatation must satisfy K >= 1.
    InvalidDilatation { k: f64 },
    /// Metric argument of the Holder bound must lie in [0, 1].
    InvalidMetricValue { s: f64 },
    /// Hyperbolic ball radius must be positive.
    NonpositiveRadius { radius: f64 },
    /// Closed ball is not contained in the domain.
    BallNotContained,
    /// A documented precondition failed.
    PreconditionFailed { reason: &'static str },
    /// The operation is not defined for this domain.
    UnsupportedDomain { reason: &'static str },
    /// The pair is collinear with the origin, so the requested pencil
    /// intersection does not exist.
    CollinearWithOrigin,
    /// Unknown sharpness-probe id.
    UnknownProbe { id: String },
    /// The suite does not run on the requested domain.
    UnsupportedSuite { reason: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::PointNotInDomain { point } => {
                write!(f, "point {point} is not strictly inside the domain")
            }
            Error::PointNotOnCircle { point } => {
                write!(
                    f,
                    "point {point} is not on the unit circle (|z| = 1 within 1e-9)"
                )
            }
            Error::DegenerateInput => write!(f, "the two points must be distinct"),
            Error::InvalidPolygon { reason } => write!(f, "invalid polygon: {reason}"),
            Error::InvalidResolution { got, min } => {
                write!(f, "resolution {got} is below the minimum {min}")
            }
            Error::OriginNotAllowed => write!(f, "the origin is not a valid argument here"),
            Error::InvalidExponent { p } => {
                write!(f, "exponent p = {p} is invalid; p >= 1 required")
            }
            Error::InvalidDilatation { k } => {
                write!(f, "dilatation K = {k} is invalid; K >= 1 required")
            }
            Error::InvalidMetricValue { s } => {
                write!(f, "metric value s = {s} is outside [0, 1]")
            }
            Error::NonpositiveRadius { radius } => {
                write!(
                    f,
                    "radius {radius} is invalid; a positive radius is required"
                )
            }
            Error::BallNotContained => {
                write!(f, "the closed ball is not contained in the domain")
            }
            Error::PreconditionFailed { reason } => write!(f, "precondition failed: {reason}"),
            Error::UnsupportedDomain { reason } => write!(f, "unsupported domain: {reason}"),
            Error::CollinearWithOrigin => {
                write!(
                    f,
                    "points are collinear with the origin; no transversal intersection"
                )
            }
            Error::UnknownProbe { id } => write!(f, "unknown probe id '{id}'"),
            Error::UnsupportedSuite { reason } => write!(f, "unsupported suite request: {reason}"),
        }
    }
}

impl std::error::Error for Error {}
