//! Proper planar domains: the unit disk, the upper half-plane, convex
//! polygons, the punctured unit disk, and single-point complements.
//!
//! Every operation that takes interior points enforces a uniform interior
//! margin: points within [`INTERIOR_MARGIN`] of the boundary (or outside) are
//! rejected as `PointNotInDomain`, so downstream formulas never divide by a
//! vanishing boundary distance.

use crate::error::{Error, Result};
use crate::point::Point;
use serde::ser::{Serialize, SerializeStruct, Serializer};

/// Minimum distance to the boundary for a point to count as interior.
pub const INTERIOR_MARGIN: f64 = 1e-12;

/// Strictly convex polygon with vertices in counterclockwise order.
#[derive(Clone, Debug, PartialEq)]
pub struct Polygon {
    vertices: Vec<Point>,
}

impl Polygon {
    /// Validates the vertex list: at least three finite vertices, no repeated
    /// neighbors, strictly convex, counterclockwise.
    pub fn new(vertices: Vec<Point>) -> Result<Polygon> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::InvalidPolygon {
                reason: format!("{n} vertices given; at least 3 required"),
            });
        }
        if let Some(v) = vertices.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidPolygon {
                reason: format!("vertex {v} is not finite"),
            });
        }
        let mut crosses = Vec::with_capacity(n);
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            if (b - a).is_zero() {
                return Err(Error::InvalidPolygon {
                    reason: format!("vertices {i} and {} coincide", (i + 1) % n),
                });
            }
            crosses.push((b - a).cross(c - b));
        }
        if crosses.iter().all(|&c| c < 0.0) {
            return Err(Error::InvalidPolygon {
                reason: "vertices are in clockwise order; counterclockwise required".to_owned(),
            });
        }
        if !crosses.iter().all(|&c| c > 0.0) {
            return Err(Error::InvalidPolygon {
                reason: "vertex list is not strictly convex".to_owned(),
            });
        }
        Ok(Polygon { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Directed edges (a, b) in counterclockwise order.
    pub fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn perimeter(&self) -> f64 {
        self.edges().map(|(a, b)| a.dist(b)).sum()
    }

    /// Signed distance to the nearest edge line; positive inside. For convex
    /// polygons this equals the distance to the boundary for interior points
    /// and is negative or zero outside.
    fn interior_gap(&self, x: Point) -> f64 {
        let mut gap = f64::INFINITY;
        for (a, b) in self.edges() {
            let e = b - a;
            let signed = e.cross(x - a) / e.abs();
            gap = gap.min(signed);
        }
        gap
    }

    /// Nearest point of the boundary polyline.
    fn nearest_boundary_point(&self, x: Point) -> Point {
        let mut best = (f64::INFINITY, self.vertices[0]);
        for (a, b) in self.edges() {
            let e = b - a;
            let t = ((x - a).dot(e) / e.abs_sq()).clamp(0.0, 1.0);
            let z = a + e * t;
            let d = x.dist(z);
            if d < best.0 {
                best = (d, z);
            }
        }
        best.1
    }
}

/// A proper subdomain of the plane on which the metrics are defined.
#[derive(Clone, Debug, PartialEq)]
pub enum DomainSpec {
    /// Open unit disk |z| < 1.
    UnitDisk,
    /// Open upper half-plane Im z > 0.
    UpperHalfPlane,
    /// Interior of a strictly convex polygon.
    ConvexPolygon(Polygon),
    /// Unit disk minus the origin.
    PuncturedUnitDisk,
    /// Complement of a single point: the whole plane except `z0`.
    PointComplement(Point),
}

impl DomainSpec {
    /// Distance from `x` to the boundary when `x` is inside; non-positive or
    /// meaningless when outside (use [`DomainSpec::contains_interior`]).
    pub fn interior_gap(&self, x: Point) -> f64 {
        match self {
            DomainSpec::UnitDisk => 1.0 - x.abs(),
            DomainSpec::UpperHalfPlane => x.im,
            DomainSpec::ConvexPolygon(p) => p.interior_gap(x),
            DomainSpec::PuncturedUnitDisk => (1.0 - x.abs()).min(x.abs()),
            DomainSpec::PointComplement(z0) => x.dist(*z0),
        }
    }

    /// True when `x` is inside with at least the interior margin to spare.
    pub fn contains_interior(&self, x: Point) -> bool {
        x.is_finite() && self.interior_gap(x) > INTERIOR_MARGIN
    }

    pub(crate) fn check_interior(&self, x: Point) -> Result<()> {
        if self.contains_interior(x) {
            Ok(())
        } else {
            Err(Error::PointNotInDomain { point: x })
        }
    }

    /// Euclidean distance from an interior point to the boundary.
    pub fn dist_to_boundary(&self, x: Point) -> Result<f64> {
        self.check_interior(x)?;
        Ok(self.interior_gap(x))
    }

    /// A boundary point realizing `dist_to_boundary`.
    pub(crate) fn nearest_boundary_point(&self, x: Point) -> Point {
        match self {
            DomainSpec::UnitDisk => {
                if x.is_zero() {
                    Point::ONE
                } else {
                    x.unit()
                }
            }
            DomainSpec::UpperHalfPlane => Point::new(x.re, 0.0),
            DomainSpec::ConvexPolygon(p) => p.nearest_boundary_point(x),
            DomainSpec::PuncturedUnitDisk => {
                if x.abs() <= 1.0 - x.abs() {
                    Point::ZERO
                } else {
                    x.unit()
                }
            }
            DomainSpec::PointComplement(z0) => *z0,
        }
    }

    /// Stable tag used by the CLI and reports.
    pub fn kind(&self) -> &'static str {
        match self {
            DomainSpec::UnitDisk => "disk",
            DomainSpec::UpperHalfPlane => "halfplane",
            DomainSpec::ConvexPolygon(_) => "polygon",
            DomainSpec::PuncturedUnitDisk => "punctured",
            DomainSpec::PointComplement(_) => "complement",
        }
    }
}

impl std::fmt::Display for DomainSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DomainSpec::ConvexPolygon(p) => {
                write!(f, "polygon:")?;
                for (i, v) in p.vertices().iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
            DomainSpec::PointComplement(z0) => write!(f, "complement:{z0}"),
            other => f.write_str(other.kind()),
        }
    }
}

impl Serialize for DomainSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            DomainSpec::ConvexPolygon(p) => {
                let mut s = serializer.serialize_struct("domain", 2)?;
                s.serialize_field("kind", "polygon")?;
                s.serialize_field("vertices", p.vertices())?;
                s.end()
            }
            DomainSpec::PointComplement(z0) => {
                let mut s = serializer.serialize_struct("domain", 2)?;
                s.serialize_field("kind", "complement")?;
                s.serialize_field("z0", z0)?;
                s.end()
            }
            other => {
                let mut s = serializer.serialize_struct("domain", 1)?;
                s.serialize_field("kind", other.kind())?;
                s.end()
            }
        }
    }
}

/// Interior check against the open unit disk, shared by the disk-specific
/// operations that do not take a [`DomainSpec`].
pub(crate) fn check_unit_disk_interior(x: Point) -> Result<()> {
    DomainSpec::UnitDisk.check_interior(x)
}
