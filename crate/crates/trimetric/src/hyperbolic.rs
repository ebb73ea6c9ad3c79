//! Hyperbolic distance of the unit disk and the upper half-plane, hyperbolic
//! midpoints, and the Euclidean footprint of hyperbolic balls.
//!
//! Near-boundary pairs make the naive formulas cancel catastrophically
//! (|x - y| / A[x, y] -> 1), so everything here is computed through the
//! quantity P = (1 - |x|^2)(1 - |y|^2), which stays well-scaled:
//!
//! - rho(x, y)   = ln((A + D)^2 / P)       with D = |x - y|, A^2 = D^2 + P,
//! - th(rho/2)   = D / A,
//! - th(rho/4)   = D / (A + sqrt(P)).

use crate::domain::check_unit_disk_interior;
use crate::error::{Error, Result};
use crate::point::Point;
use serde::Serialize;

/// `1 - |x|^2`, computed as `(1 - |x|)(1 + |x|)` so the boundary gap keeps
/// full precision for |x| near 1.
pub(crate) fn one_minus_sq(x: Point) -> f64 {
    (1.0 - x.abs()) * (1.0 + x.abs())
}

/// The Ahlfors bracket `A[x, y] = sqrt(|x - y|^2 + (1 - |x|^2)(1 - |y|^2))`.
///
/// Preconditions: x, y strictly inside the unit disk.
pub fn ahlfors_bracket(x: Point, y: Point) -> Result<f64> {
    check_unit_disk_interior(x)?;
    check_unit_disk_interior(y)?;
    let d = x.dist(y);
    Ok((d * d + one_minus_sq(x) * one_minus_sq(y)).sqrt())
}

/// Hyperbolic distance of the unit disk,
/// `rho(x, y) = 2 arth(|x - y| / A[x, y])`, evaluated in log form.
pub fn rho_disk(x: Point, y: Point) -> Result<f64> {
    check_unit_disk_interior(x)?;
    check_unit_disk_interior(y)?;
    let d = x.dist(y);
    if d == 0.0 {
        return Ok(0.0);
    }
    let p = one_minus_sq(x) * one_minus_sq(y);
    let a = (d * d + p).sqrt();
    // 2 arth(D/A) = ln((A+D)/(A-D)) = ln((A+D)^2 / P).
    Ok(2.0 * (a + d).ln() - p.ln())
}

/// Hyperbolic distance of the upper half-plane,
/// `ch rho = 1 + |x - y|^2 / (2 Im x Im y)`, evaluated as
/// `arcosh(1 + u) = ln(1 + u + sqrt(u(u + 2)))`.
pub fn rho_half_plane(x: Point, y: Point) -> Result<f64> {
    use crate::domain::DomainSpec;
    DomainSpec::UpperHalfPlane.check_interior(x)?;
    DomainSpec::UpperHalfPlane.check_interior(y)?;
    let u = x.dist(y).powi(2) / (2.0 * x.im * y.im);
    Ok((u + (u * (u + 2.0)).sqrt()).ln_1p())
}

/// `th(rho(x, y)/2) = |x - y| / A[x, y]`.
pub fn tanh_half_rho(x: Point, y: Point) -> Result<f64> {
    let d = x.dist(y);
    Ok(d / ahlfors_bracket(x, y)?)
}

/// `t = th(rho(x, y)/4)`, the quarter-distance parameter, computed without
/// evaluating rho: `t = |x - y| / (A[x, y] + sqrt(P))`.
///
/// Equivalent to `s2 / (1 + sqrt(1 - s2^2))` with `s2 = |x - y| / A`, but free
/// of the 1 - s2^2 cancellation for near-boundary pairs.
pub fn quarter_param(x: Point, y: Point) -> Result<f64> {
    check_unit_disk_interior(x)?;
    check_unit_disk_interior(y)?;
    let d = x.dist(y);
    let p = one_minus_sq(x) * one_minus_sq(y);
    let a = (d * d + p).sqrt();
    Ok(d / (a + p.sqrt()))
}

/// Hyperbolic midpoint q of x and y in the unit disk:
/// rho(x, q) = rho(q, y) = rho(x, y) / 2.
///
/// q = (y(1 - |x|^2) + x(1 - |y|^2)) / (1 - |x|^2 |y|^2 + A sqrt(P)).
pub fn hyperbolic_midpoint(x: Point, y: Point) -> Result<Point> {
    check_unit_disk_interior(x)?;
    check_unit_disk_interior(y)?;
    if x == y {
        return Ok(x);
    }
    let px = one_minus_sq(x);
    let py = one_minus_sq(y);
    let d = x.dist(y);
    let p = px * py;
    let a = (d * d + p).sqrt();
    let denom = 1.0 - x.abs_sq() * y.abs_sq() + a * p.sqrt();
    Ok((y * px + x * py) * (1.0 / denom))
}

/// Euclidean center and radius of a hyperbolic ball B_rho(q, R) in the disk.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct HypBallEuclid {
    /// Euclidean center j (on the ray of q, closer to the origin than q).
    pub center_j: Point,
    /// Euclidean radius h.
    pub radius_h: f64,
    /// t = th(R/2).
    pub t: f64,
}

/// Converts the hyperbolic ball B(q, R) to its Euclidean footprint:
/// with t = th(R/2),
/// j = q (1 - t^2) / (1 - |q|^2 t^2), h = (1 - |q|^2) t / (1 - |q|^2 t^2).
///
/// Preconditions: q strictly inside the disk; R > 0.
pub fn hyp_ball_to_euclidean(q: Point, radius: f64) -> Result<HypBallEuclid> {
    check_unit_disk_interior(q)?;
    if radius <= 0.0 || !radius.is_finite() {
        return Err(Error::NonpositiveRadius { radius });
    }
    let t = (radius / 2.0).tanh();
    let q2 = q.abs_sq();
    let denom = 1.0 - q2 * t * t;
    Ok(HypBallEuclid {
        center_j: q * ((1.0 - t * t) / denom),
        radius_h: one_minus_sq(q) * t / denom,
        t,
    })
}
