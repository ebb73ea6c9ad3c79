//! Midpoint rotations of a disk pair and the two-sided bounds for s they
//! produce.
//!
//! Euclidean family: rotate x and y around their Euclidean midpoint k. The
//! extreme positions are the pair perpendicular to k (x0, y0, equal moduli)
//! and the pair along the ray of k (x1, y1, collinear with the origin).
//! s is minimized at the perpendicular position and maximized at the aligned
//! one, giving closed-form bounds.
//!
//! Hyperbolic family: rotate along the hyperbolic circle centered at the
//! hyperbolic midpoint q with radius rho(x, y)/2. The symmetric position
//! (x2, y2, conjugate in the frame of q) minimizes s; the diametral position
//! (x3, y3, on the ray of q) maximizes it.

use crate::domain::check_unit_disk_interior;
use crate::error::{Error, Result};
use crate::hyperbolic::{hyp_ball_to_euclidean, hyperbolic_midpoint, quarter_param};
use crate::point::Point;
use serde::Serialize;

/// Extreme positions of the Euclidean midpoint rotation.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct EuclideanRotation {
    /// Euclidean midpoint k = (x + y)/2.
    pub k: Point,
    /// Rotation radius r = |x - y|/2.
    pub r: f64,
    /// Equal-modulus position: k + i r u and k - i r u, u = k/|k|.
    pub x0: Point,
    pub y0: Point,
    /// Aligned position away from the origin, u(|k| + r); present only while
    /// it stays inside the disk (|k| + r < 1).
    pub x1: Option<Point>,
    /// Aligned position toward the origin, u(|k| - r); always inside.
    pub y1: Point,
}

/// Two-sided closed-form bounds for s from the Euclidean rotation.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct EuclideanBounds {
    /// s at the equal-modulus position (conjugate closed form).
    pub lower: f64,
    /// Weaker algebraic lower bound |x-y| / hypot(2 - |x+y|, |x-y|).
    pub lower_closed: f64,
    /// s at the aligned position, |x-y| / (2 - |x+y|); an upper bound for s
    /// whenever that position exists inside the disk (|k| + r < 1).
    pub upper: Option<f64>,
    /// The same expression as an unconditional closed-form companion value.
    pub upper_closed: f64,
}

/// Rotates the pair about its Euclidean midpoint into the two extreme
/// positions.
///
/// Preconditions: both points strictly inside the unit disk; x != y.
/// For k = 0 the rotation is a circle about the origin: every position is
/// equivalent, and x0, y0, x1, y1 all coincide with the input geometry.
pub fn euclidean_rotation(x: Point, y: Point) -> Result<EuclideanRotation> {
    check_unit_disk_interior(x)?;
    check_unit_disk_interior(y)?;
    if x == y {
        return Err(Error::DegenerateInput);
    }
    let k = (x + y) * 0.5;
    let r = 0.5 * x.dist(y);
    if k.is_zero() {
        // Antipodal pair: the rotation circle is centered at the origin, all
        // positions have equal moduli and lie on a diameter simultaneously.
        return Ok(EuclideanRotation {
            k,
            r,
            x0: x,
            y0: y,
            x1: Some(x),
            y1: y,
        });
    }
    let u = k.unit();
    let iru = u.perp() * r;
    let km = k.abs();
    let x1 = if km + r < 1.0 {
        Some(u * (km + r))
    } else {
        None
    };
    Ok(EuclideanRotation {
        k,
        r,
        x0: k + iru,
        y0: k - iru,
        x1,
        y1: u * (km - r),
    })
}

/// Closed-form s bounds from the Euclidean rotation:
/// `lower <= s(x, y) <= upper` (upper present iff the aligned position stays
/// inside the disk), plus the unconditional weaker `lower_closed <= lower`.
pub fn euclidean_bounds(x: Point, y: Point) -> Result<EuclideanBounds> {
    check_unit_disk_interior(x)?;
    check_unit_disk_interior(y)?;
    if x == y {
        return Err(Error::DegenerateInput);
    }
    let k = (x + y) * 0.5;
    let r = 0.5 * x.dist(y);
    let d = x.dist(y);
    let sum = (x + y).abs();
    // s at the equal-modulus position: conjugate closed form with h = |k|,
    // k-coordinate = r.
    let lower = if k.is_zero() {
        // Antipodal pair: s = |x| exactly.
        r
    } else {
        let h = k.abs();
        let w2 = h * h + r * r;
        if h < w2 {
            w2.sqrt()
        } else {
            r / (1.0 - h).hypot(r)
        }
    };
    let upper_closed = d / (2.0 - sum);
    Ok(EuclideanBounds {
        lower,
        lower_closed: d / (2.0 - sum).hypot(d),
        upper: (k.abs() + r < 1.0).then_some(upper_closed),
        upper_closed,
    })
}

/// Extreme positions of the hyperbolic midpoint rotation.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct HyperbolicRotation {
    /// Hyperbolic midpoint q of the pair.
    pub q: Point,
    /// t = th(rho(x, y)/4), the hyperbolic radius parameter.
    pub t: f64,
    /// Euclidean center of the rotation circle.
    pub j: Point,
    /// Euclidean radius of the rotation circle.
    pub h: f64,
    /// Symmetric position: conjugate pair in the frame of q.
    pub x2: Point,
    pub y2: Point,
    /// Diametral position along the ray of q: j +/- h.
    pub x3: Point,
    pub y3: Point,
}

/// Rotates the pair along the hyperbolic circle of radius rho/2 about the
/// hyperbolic midpoint into its extreme positions.
///
/// Preconditions: both points strictly inside the unit disk; x != y.
pub fn hyperbolic_rotation(x: Point, y: Point) -> Result<HyperbolicRotation> {
    check_unit_disk_interior(x)?;
    check_unit_disk_interior(y)?;
    if x == y {
        return Err(Error::DegenerateInput);
    }
    let q = hyperbolic_midpoint(x, y)?;
    let t = quarter_param(x, y)?;
    if q.is_zero() {
        // Hyperbolically centered pair (y = -x): the rotation circle is
        // |z| = t; the symmetric position is the pair itself and the
        // diametral position lies along the chord direction.
        let u = (x - y).unit();
        let x3 = u * t;
        return Ok(HyperbolicRotation {
            q,
            t,
            j: Point::ZERO,
            h: t,
            x2: x,
            y2: y,
            x3,
            y3: -x3,
        });
    }
    let m = q.unit();
    let qm = q.abs();
    let denom2 = 1.0 + qm * qm * t * t;
    let x2_frame = Point::new(qm * (1.0 + t * t) / denom2, t * (1.0 - qm * qm) / denom2);
    let ball = hyp_ball_to_euclidean(q, /* R = rho/2: th(R/2) = t */ 2.0 * t.atanh())?;
    let j = ball.center_j;
    let h = ball.radius_h;
    Ok(HyperbolicRotation {
        q,
        t,
        j,
        h,
        x2: m * x2_frame,
        y2: m * x2_frame.conj(),
        x3: m * (j.abs() + h),
        y3: m * (j.abs() - h),
    })
}

/// Two-sided closed-form bounds for s from the hyperbolic rotation.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct HyperbolicBounds {
    /// s at the symmetric position (two-case closed form in |q| and t).
    pub lower: f64,
    /// s at the diametral position: (1 + |q|) t / (1 + |q| t^2).
    pub upper: f64,
}

/// Closed-form s bounds from the hyperbolic rotation:
/// `lower <= s(x, y) <= upper`, both unconditional.
pub fn hyperbolic_bounds(x: Point, y: Point) -> Result<HyperbolicBounds> {
    check_unit_disk_interior(x)?;
    check_unit_disk_interior(y)?;
    if x == y {
        return Err(Error::DegenerateInput);
    }
    let qm = hyperbolic_midpoint(x, y)?.abs();
    let t = quarter_param(x, y)?;
    let lower = if qm < t * t {
        ((qm * qm + t * t) / (1.0 + qm * qm * t * t)).sqrt()
    } else {
        t * (1.0 + qm) / ((1.0 + t * t) * (1.0 + qm * qm * t * t)).sqrt()
    };
    let upper = (1.0 + qm) * t / (1.0 + qm * t * t);
    Ok(HyperbolicBounds { lower, upper })
}

/// The point where the line through x and y meets the line through the origin
/// and the hyperbolic midpoint q; exists iff the pair is not collinear with
/// the origin.
pub fn common_pencil_point(x: Point, y: Point) -> Result<Point> {
    check_unit_disk_interior(x)?;
    check_unit_disk_interior(y)?;
    if x == y {
        return Err(Error::DegenerateInput);
    }
    if crate::infimum::is_collinear_with_origin(x, y) {
        return Err(Error::CollinearWithOrigin);
    }
    let q = hyperbolic_midpoint(x, y)?;
    // Solve c*q on line(x, y): cross(c*q - x, y - x) = 0.
    let c = x.cross(y) / q.cross(y - x);
    Ok(q * c)
}

/// Rotates y about x (keeping |x - y|) onto the circle of radius |x|:
/// the "pull-up" position y' with |y'| = |x|, on the side of y.
/// Increases s: s(x, y) <= s(x, y'), strictly when |y| < |x|.
///
/// Preconditions: x, y nonzero and strictly inside; |y| <= |x|; pair not
/// collinear with the origin; |x - y| <= 2|x| (automatic given the others).
pub fn same_radius_pullup(x: Point, y: Point) -> Result<Point> {
    check_unit_disk_interior(x)?;
    check_unit_disk_interior(y)?;
    if x.is_zero() || y.is_zero() {
        return Err(Error::PreconditionFailed {
            reason: "the pull-up rotation needs both points away from the origin",
        });
    }
    if y.abs() > x.abs() {
        return Err(Error::PreconditionFailed {
            reason: "the pull-up rotation needs |y| <= |x|",
        });
    }
    if crate::infimum::is_collinear_with_origin(x, y) {
        return Err(Error::PreconditionFailed {
            reason: "the pull-up rotation needs a pair not collinear with the origin",
        });
    }
    let half_chord = 0.5 * x.dist(y) / x.abs();
    if half_chord > 1.0 {
        return Err(Error::PreconditionFailed {
            reason: "the pull-up rotation needs |x - y| <= 2|x|",
        });
    }
    let psi = half_chord.clamp(-1.0, 1.0).asin();
    // Rotate x by 2 psi toward the side of y.
    let sign = if x.cross(y) >= 0.0 { 1.0 } else { -1.0 };
    Ok(x * Point::polar(1.0, 2.0 * psi * sign))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::DomainSpec;
    use crate::hyperbolic::rho_disk;
    use crate::metrics::s_metric;

    const DISK: DomainSpec = DomainSpec::UnitDisk;

    #[test]
    fn euclidean_rotation_frozen_figure() {
        // k = 0.4 + 0.4i family: x = 0.5 + 0.683i, y = 0.3 + 0.117i.
        let x = Point::new(0.5, 0.683);
        let y = Point::new(0.3, 0.117);
        let rot = euclidean_rotation(x, y).unwrap();
        assert!((rot.k - Point::new(0.4, 0.4)).abs() < 1e-15);
        let km = 0.4f64 * 2.0f64.sqrt();
        let r = 0.5 * x.dist(y);
        let u = Point::new(1.0, 1.0).unit();
        let x1 = rot.x1.unwrap();
        assert!((x1 - u * (km + r)).abs() < 1e-15);
        assert!((rot.y1 - u * (km - r)).abs() < 1e-15);
        // Digits of the aligned/perpendicular positions.
        assert!((x1.re - 0.612_239_8).abs() < 1e-4);
        assert!((rot.y1.re - 0.187_764_5).abs() < 1e-4);
        assert!((rot.x0 - (rot.k + u.perp() * r)).abs() < 1e-15);
        // Equal moduli at the perpendicular position; |x0|^2 = (|x|^2+|y|^2)/2.
        assert!((rot.x0.abs() - rot.y0.abs()).abs() < 1e-15);
        let expect = ((x.abs_sq() + y.abs_sq()) / 2.0).sqrt();
        assert!((rot.x0.abs() - expect).abs() < 1e-14);
    }

    #[test]
    fn euclidean_rotation_drops_x1_when_it_exits_the_disk() {
        let x = Point::new(0.9, 0.05);
        let y = Point::new(0.1, -0.6);
        let rot = euclidean_rotation(x, y).unwrap();
        assert!(rot.k.abs() + rot.r >= 1.0);
        assert!(rot.x1.is_none());
        // y1 always stays inside.
        assert!(rot.y1.abs() < 1.0);
    }

    #[test]
    fn euclidean_bounds_frozen_values_and_sandwich() {
        // (0.2, 0.6) on the real axis: collinear pair, s = 0.4/1.2 = 1/3;
        // lower = s(x0, y0) with h = 0.4, r = 0.2 -> inside case;
        // lower_closed = 0.4/hypot(1.2, 0.4) = 0.3162278.
        let x = Point::new(0.2, 0.0);
        let y = Point::new(0.6, 0.0);
        let b = euclidean_bounds(x, y).unwrap();
        let s = s_metric(&DISK, x, y).unwrap().value;
        assert!((s - 1.0 / 3.0).abs() < 1e-15);
        assert!((b.upper.unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(b.upper_closed, b.upper.unwrap());
        assert!((b.lower_closed - 0.4 / 1.2f64.hypot(0.4)).abs() < 1e-15);
        assert!((b.lower_closed - 0.316_227_8).abs() < 1e-7);
        // Inside conjugate case: h = 0.4, w2 = 0.2 -> h >= w2.
        let h = 0.4f64;
        let r = 0.2f64;
        assert!(h >= h * h + r * r);
        assert!((b.lower - r / (1.0 - h).hypot(r)).abs() < 1e-15);
        assert!(b.lower_closed <= b.lower + 1e-15);
        assert!(b.lower <= s + 1e-15);
        assert!(s <= b.upper.unwrap() + 1e-15);
    }

    #[test]
    fn euclidean_lower_matches_s_at_perpendicular_position() {
        let x = Point::new(0.3, 0.45);
        let y = Point::new(-0.2, 0.4);
        let rot = euclidean_rotation(x, y).unwrap();
        let b = euclidean_bounds(x, y).unwrap();
        let s0 = s_metric(&DISK, rot.x0, rot.y0).unwrap().value;
        assert!(
            (b.lower - s0).abs() < 1e-12,
            "lower {} vs s(x0,y0) {}",
            b.lower,
            s0
        );
        // And upper matches s at the aligned position when present.
        if let Some(x1) = rot.x1 {
            let s1 = s_metric(&DISK, x1, rot.y1).unwrap().value;
            assert!((b.upper.unwrap() - s1).abs() < 1e-12);
        }
    }

    #[test]
    fn hyperbolic_rotation_frozen_example() {
        // (0.8, 0): q = 0.5, t = 0.5 -> x2 = (10/17)(1, 0.6), |x2| = sqrt(.../...).
        let x = Point::new(0.8, 0.0);
        let y = Point::ZERO;
        let rot = hyperbolic_rotation(x, y).unwrap();
        assert!((rot.q - Point::new(0.5, 0.0)).abs() < 1e-14);
        assert!((rot.t - 0.5).abs() < 1e-14);
        assert!(
            (rot.x2 - Point::new(0.588_235_294_117_647, 0.352_941_176_470_588_2)).abs() < 1e-13
        );
        assert!((rot.y2 - rot.x2.conj()).abs() < 1e-14);
        let x2m = ((0.25f64 + 0.25) / (1.0 + 0.25 * 0.25)).sqrt();
        assert!((rot.x2.abs() - x2m).abs() < 1e-14);
        assert!((rot.x2.abs() - 0.685_994_3).abs() < 1e-7);
        // Diametral pair via the ball footprint: j = 0.5*0.75/0.9375 = 0.4,
        // h = 0.75*0.5/0.9375 = 0.4 -> x3 = 0.8, y3 = 0.
        assert!((rot.j - Point::new(0.4, 0.0)).abs() < 1e-14);
        assert!((rot.h - 0.4).abs() < 1e-14);
        assert!((rot.x3 - x).abs() < 1e-13);
        assert!(rot.y3.abs() < 1e-13);
    }

    #[test]
    fn hyperbolic_rotation_preserves_the_midpoint_and_radius() {
        let x = Point::new(0.31, 0.4);
        let y = Point::new(-0.25, 0.1);
        let rot = hyperbolic_rotation(x, y).unwrap();
        let half = rho_disk(x, y).unwrap() / 2.0;
        for z in [rot.x2, rot.y2, rot.x3, rot.y3] {
            let r = rho_disk(rot.q, z).unwrap();
            assert!((r - half).abs() < 1e-9, "rho(q, {z}) = {r} vs {half}");
        }
        // Chord ordering: |x2 - y2| <= |x - y| <= |x3 - y3|.
        let d = x.dist(y);
        assert!(rot.x2.dist(rot.y2) <= d + 1e-12);
        assert!(d <= rot.x3.dist(rot.y3) + 1e-12);
    }

    #[test]
    fn hyperbolic_rotation_centered_pair() {
        let x = Point::new(0.3, 0.2);
        let rot = hyperbolic_rotation(x, -x).unwrap();
        assert!(rot.q.is_zero());
        assert!((rot.t - x.abs()).abs() < 1e-14);
        assert_eq!(rot.x2, x);
        assert_eq!(rot.y2, -x);
        assert!((rot.x3.abs() - rot.t).abs() < 1e-14);
        assert!((rot.x3 + rot.y3).abs() < 1e-15);
    }

    #[test]
    fn hyperbolic_bounds_frozen_values() {
        // (0.8, 0): q = 0.5 >= t^2 = 0.25: lower = 0.5*1.5/sqrt(1.25*1.0625),
        // upper = 1.5*0.5/1.125 = 2/3.
        let b = hyperbolic_bounds(Point::new(0.8, 0.0), Point::ZERO).unwrap();
        let lower = 0.75 / (1.25f64 * 1.0625).sqrt();
        assert!((b.lower - lower).abs() < 1e-14);
        assert!((b.lower - 0.650_791_4).abs() < 1e-7);
        assert!((b.upper - 2.0 / 3.0).abs() < 1e-14);
        // Case |q| < t^2: q = 0.1, t = 0.5 -> sqrt(0.26/1.0025) = 0.5092658...
        // (pair constructed from the diametral positions with those
        // parameters: x = m(j + h), y = m(j - h) for q = 0.1, t = 0.5).
        let q = Point::new(0.1, 0.0);
        let ball = hyp_ball_to_euclidean(q, 2.0 * 0.5f64.atanh()).unwrap();
        let x = Point::new(ball.center_j.re + ball.radius_h, 0.0);
        let y = Point::new(ball.center_j.re - ball.radius_h, 0.0);
        let b = hyperbolic_bounds(x, y).unwrap();
        assert!((b.lower - (0.26f64 / 1.0025).sqrt()).abs() < 1e-12);
        assert!(
            (b.lower - 0.509_265_766_518_456_3).abs() < 1e-12,
            "got {}",
            b.lower
        );
        // Sandwich on a generic pair.
        let x = Point::new(0.31, 0.4);
        let y = Point::new(-0.25, 0.1);
        let b = hyperbolic_bounds(x, y).unwrap();
        let s = s_metric(&DISK, x, y).unwrap().value;
        assert!(b.lower <= s + 1e-12 && s <= b.upper + 1e-12);
    }

    #[test]
    fn pencil_point_lies_on_both_lines() {
        let x = Point::new(0.6, 0.2);
        let y = Point::new(0.6, -0.2);
        let v = common_pencil_point(x, y).unwrap();
        // Frozen: for the conjugate pair the pencil point is on the real
        // axis at Re = 0.6.
        assert!((v - Point::new(0.6, 0.0)).abs() < 1e-12);
        let x = Point::new(0.3, 0.5);
        let y = Point::new(-0.2, 0.25);
        let v = common_pencil_point(x, y).unwrap();
        let q = hyperbolic_midpoint(x, y).unwrap();
        assert!(v.cross(q).abs() < 1e-12);
        assert!((v - x).cross(y - x).abs() < 1e-12);
        assert!(matches!(
            common_pencil_point(Point::new(0.2, 0.2), Point::new(0.4, 0.4)),
            Err(Error::CollinearWithOrigin)
        ));
    }

    #[test]
    fn pullup_frozen_value_and_invariants() {
        // (0.5, 0.3i): y' = 0.16 + sqrt(0.2244) i.
        let x = Point::new(0.5, 0.0);
        let y = Point::new(0.0, 0.3);
        let yp = same_radius_pullup(x, y).unwrap();
        assert!((yp - Point::new(0.16, 0.2244f64.sqrt())).abs() < 1e-15);
        assert!((yp.im - 0.473_708_8).abs() < 1e-7);
        // Modulus and chord preserved.
        assert!((yp.abs() - x.abs()).abs() < 1e-15);
        assert!((x.dist(yp) - x.dist(y)).abs() < 1e-14);
        // s increases (strictly here since |y| < |x|).
        let s = s_metric(&DISK, x, y).unwrap().value;
        let sp = s_metric(&DISK, x, yp).unwrap().value;
        assert!(sp > s);
        // Side preserved: y' on the same side of the ray of x as y.
        assert!(x.cross(y) * x.cross(yp) > 0.0);
        // Precondition failures.
        assert!(same_radius_pullup(x, Point::new(0.0, 0.6)).is_err());
        assert!(same_radius_pullup(x, Point::new(0.2, 0.0)).is_err());
    }

    #[test]
    fn rotation_rejects_degenerate_and_exterior_input() {
        let x = Point::new(0.5, 0.1);
        assert!(matches!(
            euclidean_rotation(x, x),
            Err(Error::DegenerateInput)
        ));
        assert!(matches!(
            hyperbolic_rotation(x, x),
            Err(Error::DegenerateInput)
        ));
        assert!(euclidean_rotation(Point::new(1.1, 0.0), x).is_err());
    }
}
