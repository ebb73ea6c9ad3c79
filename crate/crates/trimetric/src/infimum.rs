//! Boundary infimum of the two-leg path length
//! `inf_{z on the boundary} (|x - z| + |z - y|)`, the denominator of the
//! triangular ratio metric.
//!
//! The production solver dispatches to closed forms where they exist (disk
//! pairs collinear with the origin, disk pairs of equal modulus, half-plane
//! and polygon by reflection, punctured disk, point complements) and falls
//! back to a grid-plus-golden-section scan on the disk otherwise. A separate
//! high-resolution oracle solves the same problem by dense scanning only, so
//! the closed forms can be validated against an independent method.

use crate::domain::DomainSpec;
use crate::error::{Error, Result};
use crate::minimize::{minimize_over_boundary, BoundaryMin};
use crate::point::Point;
use serde::Serialize;

/// Grid density of the production solver's numeric fallback.
pub const SOLVER_GRID: usize = 720;
/// How many grid local minima the production solver refines.
pub const SOLVER_STARTS: usize = 4;
/// Minimum oracle resolution.
pub const ORACLE_MIN_RESOLUTION: u32 = 1024;
/// How many grid local minima the oracle refines (strengthened from "best
/// three": every strict local minimum is refined, up to this cap).
pub const ORACLE_STARTS: usize = 6;

/// Pairs whose moduli differ by at most this are treated as equal-modulus.
pub const SAME_MODULUS_TOL: f64 = 1e-12;
/// Pairs with |cross(x, y)| below this (scaled) are treated as collinear with
/// the origin.
pub const COLLINEAR_TOL: f64 = 1e-14;

/// How the infimum was computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ClosedForm,
    Reflection,
    Numeric,
}

/// Result of a boundary-infimum computation.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct InfimumResult {
    /// The infimum `inf_z (|x-z| + |z-y|)`.
    pub value: f64,
    /// A boundary point realizing it.
    pub minimizer: Point,
    pub method: Method,
    /// Angle-bisection residual at the minimizer (unit disk only).
    pub residual: Option<f64>,
    /// True when x = y; the value degenerates to twice the boundary distance.
    pub degenerate: bool,
}

/// Equal-angle (reflection) residual at a candidate disk minimizer: for the
/// true minimizer of |x-z| + |z-y| on the circle, the segments from x and y
/// make equal angles with the inward normal -z, so the residual vanishes.
///
/// Preconditions: x, y in the closed unit disk; |z| = 1 within 1e-9; z
/// distinct from x and y.
pub fn bisector_residual(x: Point, y: Point, z: Point) -> Result<f64> {
    if (z.abs() - 1.0).abs() > 1e-9 {
        return Err(Error::PointNotOnCircle { point: z });
    }
    for p in [x, y] {
        if !p.is_finite() || p.abs() > 1.0 + 1e-12 {
            return Err(Error::PointNotInDomain { point: p });
        }
    }
    if z == x || z == y {
        return Err(Error::PreconditionFailed {
            reason: "the circle point must be distinct from both endpoints",
        });
    }
    let angle = |a: Point, b: Point| -> f64 {
        let c = a.dot(b) / (a.abs() * b.abs());
        c.clamp(-1.0, 1.0).acos()
    };
    Ok((angle(x - z, -z) - angle(-z, y - z)).abs())
}

pub(crate) fn is_collinear_with_origin(x: Point, y: Point) -> bool {
    x.cross(y).abs() <= COLLINEAR_TOL * x.abs() * y.abs()
}

pub(crate) fn is_same_modulus(x: Point, y: Point) -> bool {
    (x.abs() - y.abs()).abs() <= SAME_MODULUS_TOL
}

/// Closed-form disk cases.
pub(crate) enum DiskSpecial {
    /// x, y on a diameter: infimum is 2 - |x+y|, attained where the ray of the
    /// larger endpoint meets the circle.
    Collinear { z: Point, s: f64, inf: f64 },
    /// |x| = |y|: after rotating the frame so the pair is conjugate
    /// (w = h + ik, h > 0), s has a two-case closed form.
    Conjugate { z: Point, s: f64 },
}

impl DiskSpecial {
    pub(crate) fn s_value(&self) -> f64 {
        match self {
            DiskSpecial::Collinear { s, .. } | DiskSpecial::Conjugate { s, .. } => *s,
        }
    }
}

/// Rotates an equal-modulus pair into conjugate position: returns the unit
/// frame vector m = (x+y)/|x+y| and w = conj(m) * x = h + ik with h > 0,
/// k >= 0. None when x + y = 0 (antipodal pair, handled as collinear).
pub(crate) fn conjugate_frame(x: Point, y: Point) -> Option<(Point, f64, f64)> {
    let sum = x + y;
    if sum.is_zero() {
        return None;
    }
    let m = sum.unit();
    let w = m.conj() * x;
    Some((m, w.re, w.im.abs()))
}

/// Detects and evaluates the closed-form disk cases. Assumes both points are
/// interior and distinct.
pub(crate) fn disk_special(x: Point, y: Point) -> Option<DiskSpecial> {
    let d = x.dist(y);
    if is_collinear_with_origin(x, y) {
        // Minimizer direction from the larger-modulus endpoint; aligning the
        // sign with x + y picks the near side of the circle.
        let anchor = if x.abs() >= y.abs() { x } else { y };
        let mut e = if anchor.is_zero() {
            Point::ONE
        } else {
            anchor.unit()
        };
        if e.dot(x + y) < 0.0 {
            e = -e;
        }
        let inf = 2.0 - (x + y).abs();
        return Some(DiskSpecial::Collinear {
            z: e,
            s: d / inf,
            inf,
        });
    }
    if is_same_modulus(x, y) {
        let (m, h, k) = conjugate_frame(x, y)?;
        let w2 = h * h + k * k;
        // |w - 1/2| > 1/2 is equivalent to h < |w|^2.
        if h < w2 {
            let c = h / w2;
            let z = m * Point::new(c, (1.0 - c * c).max(0.0).sqrt());
            return Some(DiskSpecial::Conjugate { z, s: w2.sqrt() });
        }
        let s = k / (1.0 - h).hypot(k);
        return Some(DiskSpecial::Conjugate { z: m, s });
    }
    None
}

fn degenerate_result(domain: &DomainSpec, x: Point) -> InfimumResult {
    let gap = domain.interior_gap(x);
    InfimumResult {
        value: 2.0 * gap,
        minimizer: domain.nearest_boundary_point(x),
        method: Method::ClosedForm,
        residual: None,
        degenerate: true,
    }
}

fn disk_infimum(x: Point, y: Point) -> InfimumResult {
    let d = x.dist(y);
    if let Some(special) = disk_special(x, y) {
        let (z, value) = match special {
            DiskSpecial::Collinear { z, inf, .. } => (z, inf),
            DiskSpecial::Conjugate { z, s } => (z, d / s),
        };
        return InfimumResult {
            value,
            minimizer: z,
            method: Method::ClosedForm,
            residual: bisector_residual(x, y, z).ok(),
            degenerate: false,
        };
    }
    let objective = |z: Point| x.dist(z) + z.dist(y);
    let best = minimize_over_boundary(
        &DomainSpec::UnitDisk,
        x,
        y,
        SOLVER_GRID,
        SOLVER_STARTS,
        &objective,
    );
    InfimumResult {
        value: best.value,
        minimizer: best.point,
        method: Method::Numeric,
        residual: bisector_residual(x, y, best.point).ok(),
        degenerate: false,
    }
}

/// Reflection across one edge line: shortest two-leg path from x to y touching
/// the edge's line, clamped back to the segment. Returns (value, z).
fn edge_reflection(x: Point, y: Point, a: Point, b: Point) -> (f64, Point) {
    let e = b - a;
    let len = e.abs();
    let eu = e * (1.0 / len);
    let n = eu.perp();
    let sx = (x - a).dot(n);
    let sy = (y - a).dot(n);
    // Interior points of a convex domain sit strictly on one side of every
    // edge line, so sx and sy share a sign and the reflected segment crosses.
    let y_reflected = y - n * (2.0 * sy);
    let tau = sx / (sx + sy);
    let crossing = x + (y_reflected - x) * tau;
    let lambda = (crossing - a).dot(eu).clamp(0.0, len);
    let z = a + eu * lambda;
    (x.dist(z) + z.dist(y), z)
}

/// Production solver for the boundary infimum.
///
/// Preconditions: both points strictly inside `domain` (interior margin
/// 1e-12). x = y is allowed and returns the degenerate value
/// `2 * dist_to_boundary(x)` with `degenerate = true`.
pub fn boundary_infimum(domain: &DomainSpec, x: Point, y: Point) -> Result<InfimumResult> {
    domain.check_interior(x)?;
    domain.check_interior(y)?;
    if x == y {
        return Ok(degenerate_result(domain, x));
    }
    Ok(match domain {
        DomainSpec::UnitDisk => disk_infimum(x, y),
        DomainSpec::PuncturedUnitDisk => {
            let through_origin = x.abs() + y.abs();
            let circle = disk_infimum(x, y);
            if through_origin < circle.value {
                InfimumResult {
                    value: through_origin,
                    minimizer: Point::ZERO,
                    method: Method::ClosedForm,
                    residual: None,
                    degenerate: false,
                }
            } else {
                circle
            }
        }
        DomainSpec::UpperHalfPlane => {
            // Reflect y across the real axis; the straight segment to the
            // reflection realizes the infimum.
            let y_reflected = y.conj();
            let value = x.dist(y_reflected);
            let tau = x.im / (x.im + y.im);
            let z = Point::new(x.re + tau * (y.re - x.re), 0.0);
            InfimumResult {
                value,
                minimizer: z,
                method: Method::Reflection,
                residual: None,
                degenerate: false,
            }
        }
        DomainSpec::ConvexPolygon(poly) => {
            let mut best = (f64::INFINITY, poly.vertices()[0]);
            for (a, b) in poly.edges() {
                let (value, z) = edge_reflection(x, y, a, b);
                if value < best.0 {
                    best = (value, z);
                }
            }
            InfimumResult {
                value: best.0,
                minimizer: best.1,
                method: Method::Reflection,
                residual: None,
                degenerate: false,
            }
        }
        DomainSpec::PointComplement(z0) => InfimumResult {
            value: x.dist(*z0) + z0.dist(y),
            minimizer: *z0,
            method: Method::ClosedForm,
            residual: None,
            degenerate: false,
        },
    })
}

/// Brute-force oracle for the boundary infimum: dense parameter scan plus
/// golden-section refinement of every scanned local minimum. Independent of
/// the closed forms used by [`boundary_infimum`].
///
/// Preconditions: both points strictly inside; `resolution >= 1024`.
pub fn oracle_boundary_infimum(
    domain: &DomainSpec,
    x: Point,
    y: Point,
    resolution: u32,
) -> Result<f64> {
    if resolution < ORACLE_MIN_RESOLUTION {
        return Err(Error::InvalidResolution {
            got: resolution,
            min: ORACLE_MIN_RESOLUTION,
        });
    }
    domain.check_interior(x)?;
    domain.check_interior(y)?;
    let objective = |z: Point| x.dist(z) + z.dist(y);
    let best: BoundaryMin =
        minimize_over_boundary(domain, x, y, resolution as usize, ORACLE_STARTS, &objective);
    Ok(best.value)
}
