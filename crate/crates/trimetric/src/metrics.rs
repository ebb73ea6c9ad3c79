//! Point-pair metrics: the triangular ratio metric s, the distance-ratio
//! variant j*, the p-metric, Barrlund metrics, and the modulus metric low of
//! the punctured disk, plus closed-form upper bounds for s.

use crate::domain::{check_unit_disk_interior, DomainSpec};
use crate::error::{Error, Result};
use crate::infimum::{boundary_infimum, disk_special, InfimumResult};
use crate::minimize::minimize_over_boundary;
use crate::point::Point;
use serde::Serialize;

/// Which metric a [`MetricValue`] carries.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "name")]
pub enum MetricKind {
    /// Triangular ratio metric s_G.
    #[serde(rename = "s")]
    S,
    /// j*_G = |x-y| / (|x-y| + 2 min(d(x), d(y))).
    #[serde(rename = "jstar")]
    JStar,
    /// p_G = |x-y| / sqrt(|x-y|^2 + 4 d(x) d(y)).
    #[serde(rename = "p")]
    PointPair,
    /// Barrlund metric b_{G,p}.
    #[serde(rename = "barrlund")]
    Barrlund { p: f64 },
    /// Modulus metric of the punctured disk.
    #[serde(rename = "low")]
    Low,
}

impl MetricKind {
    pub fn name(&self) -> &'static str {
        match self {
            MetricKind::S => "s",
            MetricKind::JStar => "jstar",
            MetricKind::PointPair => "p",
            MetricKind::Barrlund { .. } => "barrlund",
            MetricKind::Low => "low",
        }
    }
}

/// Extra information behind a metric value.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MetricDetail {
    /// Boundary infimum backing an s value.
    Infimum(InfimumResult),
    /// Boundary point realizing a Barrlund supremum.
    Extremal { z: Point },
}

/// A computed metric value with its provenance.
#[derive(Clone, Debug, Serialize)]
pub struct MetricValue {
    pub metric: MetricKind,
    pub domain: DomainSpec,
    pub x: Point,
    pub y: Point,
    pub value: f64,
    pub detail: Option<MetricDetail>,
}

/// Clamps a mathematically-in-[0,1] value; any clamp beyond noise is a bug.
fn clamp_unit(v: f64) -> f64 {
    debug_assert!(
        (-1e-12..=1.0 + 1e-12).contains(&v),
        "metric value {v} far outside [0,1]"
    );
    v.clamp(0.0, 1.0)
}

/// Triangular ratio metric
/// `s_G(x, y) = |x - y| / inf_z(|x - z| + |z - y|)`, in [0, 1].
///
/// Preconditions: both points strictly inside `domain`; x = y gives 0.
pub fn s_metric(domain: &DomainSpec, x: Point, y: Point) -> Result<MetricValue> {
    let inf = boundary_infimum(domain, x, y)?;
    let value = if inf.degenerate {
        0.0
    } else {
        clamp_unit(x.dist(y) / inf.value)
    };
    Ok(MetricValue {
        metric: MetricKind::S,
        domain: domain.clone(),
        x,
        y,
        value,
        detail: Some(MetricDetail::Infimum(inf)),
    })
}

/// Closed-form s for the unit disk where one exists: pairs collinear with the
/// origin (`s = |x-y| / (2 - |x+y|)`) and equal-modulus pairs (conjugate
/// reduction). `Ok(None)` when no special form applies.
pub fn s_disk_special(x: Point, y: Point) -> Result<Option<f64>> {
    check_unit_disk_interior(x)?;
    check_unit_disk_interior(y)?;
    if x == y {
        return Ok(Some(0.0));
    }
    Ok(disk_special(x, y).map(|sp| clamp_unit(sp.s_value())))
}

/// `j*_G(x, y) = |x - y| / (|x - y| + 2 min(d(x), d(y)))`.
pub fn jstar(domain: &DomainSpec, x: Point, y: Point) -> Result<MetricValue> {
    let dx = domain.dist_to_boundary(x)?;
    let dy = domain.dist_to_boundary(y)?;
    let d = x.dist(y);
    let value = if d == 0.0 {
        0.0
    } else {
        clamp_unit(d / (d + 2.0 * dx.min(dy)))
    };
    Ok(MetricValue {
        metric: MetricKind::JStar,
        domain: domain.clone(),
        x,
        y,
        value,
        detail: None,
    })
}

/// `p_G(x, y) = |x - y| / sqrt(|x - y|^2 + 4 d(x) d(y))`.
pub fn point_pair(domain: &DomainSpec, x: Point, y: Point) -> Result<MetricValue> {
    let dx = domain.dist_to_boundary(x)?;
    let dy = domain.dist_to_boundary(y)?;
    let d = x.dist(y);
    let value = if d == 0.0 {
        0.0
    } else {
        clamp_unit(d / (d * d + 4.0 * dx * dy).sqrt())
    };
    Ok(MetricValue {
        metric: MetricKind::PointPair,
        domain: domain.clone(),
        x,
        y,
        value,
        detail: None,
    })
}

/// Barrlund metric
/// `b_{G,p}(x, y) = sup_z |x - y| / (|x - z|^p + |z - y|^p)^{1/p}`
/// over boundary points z.
///
/// Closed form on the disk for p = 2; numeric boundary scan otherwise.
/// Preconditions: p >= 1; both points strictly inside.
pub fn barrlund(domain: &DomainSpec, p: f64, x: Point, y: Point) -> Result<MetricValue> {
    if p < 1.0 || !p.is_finite() {
        return Err(Error::InvalidExponent { p });
    }
    domain.check_interior(x)?;
    domain.check_interior(y)?;
    let d = x.dist(y);
    let (value, z) = if d == 0.0 {
        (0.0, domain.nearest_boundary_point(x))
    } else if p == 2.0 && *domain == DomainSpec::UnitDisk {
        barrlund2_disk_closed(x, y)
    } else {
        // The supremum of |x-y| / denom(z) sits at the boundary minimum of
        // denom, found by the shared scan engine.
        let objective = |z: Point| (x.dist(z).powf(p) + z.dist(y).powf(p)).powf(1.0 / p);
        let best = minimize_over_boundary(domain, x, y, crate::infimum::SOLVER_GRID, 4, &objective);
        (d / best.value, best.point)
    };
    Ok(MetricValue {
        metric: MetricKind::Barrlund { p },
        domain: domain.clone(),
        x,
        y,
        value,
        detail: Some(MetricDetail::Extremal { z }),
    })
}

/// Disk closed form for p = 2:
/// `b = sqrt(2) |x - y| / hypot(2 - |x + y|, |x - y|)`, via the identity
/// 2 + |x|^2 + |y|^2 - 2|x+y| = ((2 - |x+y|)^2 + |x-y|^2) / 2, which keeps
/// precision for near-boundary pairs. Extremal point: (x + y)/|x + y|.
fn barrlund2_disk_closed(x: Point, y: Point) -> (f64, Point) {
    let d = x.dist(y);
    let sum = (x + y).abs();
    let value = d * std::f64::consts::SQRT_2 / (2.0 - sum).hypot(d);
    let z = if (x + y).is_zero() {
        // Antipodal pair: the denominator is constant on the circle; pick the
        // direction of x for determinism.
        x.unit()
    } else {
        (x + y).unit()
    };
    (value, z)
}

/// Modulus metric of the punctured disk:
/// `low(x, y) = |x - y| / min(|x - y*|, |x* - y|)` with z* = z/|z|^2.
///
/// Preconditions: x, y in the unit disk, both nonzero.
pub fn low(x: Point, y: Point) -> Result<MetricValue> {
    check_unit_disk_interior(x)?;
    check_unit_disk_interior(y)?;
    if x.is_zero() || y.is_zero() {
        return Err(Error::OriginNotAllowed);
    }
    let d = x.dist(y);
    let value = if d == 0.0 {
        0.0
    } else {
        let denom = x.dist(y.circle_inverse()).min(x.circle_inverse().dist(y));
        clamp_unit(d / denom)
    };
    Ok(MetricValue {
        metric: MetricKind::Low,
        domain: DomainSpec::PuncturedUnitDisk,
        x,
        y,
        value,
        detail: None,
    })
}

/// Upper bound for s on domains starlike with respect to x, valid when
/// d(x) + d(y) <= |x - y|:
///
/// `bound = D / (d(x) + sqrt(D^2 + d(x)^2 - 2 d(x) sqrt(D^2 - d(y)^2)))`,
/// D = |x - y|. Always >= s(x, y).
///
/// Restricted to disk, half-plane, and convex polygons (all convex, hence
/// starlike w.r.t. every interior point).
pub fn starlike_upper_bound(domain: &DomainSpec, x: Point, y: Point) -> Result<f64> {
    match domain {
        DomainSpec::UnitDisk | DomainSpec::UpperHalfPlane | DomainSpec::ConvexPolygon(_) => {}
        _ => {
            return Err(Error::UnsupportedDomain {
                reason: "the starlike bound needs a starlike domain (disk, half-plane, polygon)",
            })
        }
    }
    let dx = domain.dist_to_boundary(x)?;
    let dy = domain.dist_to_boundary(y)?;
    let d = x.dist(y);
    if dx + dy > d {
        return Err(Error::PreconditionFailed {
            reason: "the starlike bound requires d(x) + d(y) <= |x - y|",
        });
    }
    let inner = (d * d - dy * dy).max(0.0).sqrt();
    let denom = dx + (d * d + dx * dx - 2.0 * dx * inner).max(0.0).sqrt();
    Ok(d / denom)
}

/// s-diameter of a Euclidean ball contained in the domain: the supremum of
/// s_G over pairs of the closed ball B(center, radius) is
/// `radius / (radius + d)` with d = dist(ball, boundary), equivalently
/// `radius / dist_to_boundary(center)`; on the disk this is
/// `radius / (1 - |center|)`.
///
/// Preconditions: radius > 0 and the closed ball strictly inside the domain.
pub fn ball_s_diameter(domain: &DomainSpec, center: Point, radius: f64) -> Result<f64> {
    if radius <= 0.0 || !radius.is_finite() {
        return Err(Error::NonpositiveRadius { radius });
    }
    let dist = domain.dist_to_boundary(center)?;
    if radius >= dist {
        return Err(Error::BallNotContained);
    }
    Ok(radius / dist)
}

#[cfg(test)]
mod tests {
    use super::*;

    const DISK: DomainSpec = DomainSpec::UnitDisk;

    #[test]
    fn s_frozen_values() {
        let v = s_metric(&DISK, Point::ZERO, Point::new(0.5, 0.0)).unwrap();
        assert_eq!(v.value, 0.5 / 1.5);
        let x = Point::new(0.2, 0.6);
        let v = s_metric(&DISK, x, x.conj()).unwrap();
        assert!((v.value - 0.4f64.sqrt()).abs() < 1e-15);
        let x = Point::new(0.6, 0.2);
        let v = s_metric(&DISK, x, x.conj()).unwrap();
        assert!((v.value - 0.2 / 0.2f64.sqrt()).abs() < 1e-15);
        assert_eq!(s_metric(&DISK, x, x).unwrap().value, 0.0);
    }

    #[test]
    fn s_disk_special_covers_both_families() {
        assert_eq!(
            s_disk_special(Point::ZERO, Point::new(0.5, 0.0)).unwrap(),
            Some(1.0 / 3.0)
        );
        let x = Point::new(0.2, 0.6);
        let s = s_disk_special(x, x.conj()).unwrap().unwrap();
        assert!((s - 0.4f64.sqrt()).abs() < 1e-15);
        // Generic pair: no special form.
        assert_eq!(
            s_disk_special(Point::new(0.3, 0.1), Point::new(-0.2, 0.5)).unwrap(),
            None
        );
    }

    #[test]
    fn jstar_and_p_frozen_values() {
        // (-0.5, 0.5): D = 1, min d = 0.5 -> j* = 1/2; p = 1/sqrt(2).
        let x = Point::new(-0.5, 0.0);
        let y = Point::new(0.5, 0.0);
        assert_eq!(jstar(&DISK, x, y).unwrap().value, 0.5);
        assert!((point_pair(&DISK, x, y).unwrap().value - 1.0 / 2.0f64.sqrt()).abs() < 1e-15);
        // Half-plane pair (i, 1+i): D = 1, d = 1 both: j* = 1/3, p = 1/sqrt(5).
        let hp = DomainSpec::UpperHalfPlane;
        assert!(
            (jstar(&hp, Point::I, Point::new(1.0, 1.0)).unwrap().value - 1.0 / 3.0).abs() < 1e-15
        );
        assert!(
            (point_pair(&hp, Point::I, Point::new(1.0, 1.0))
                .unwrap()
                .value
                - 1.0 / 5.0f64.sqrt())
            .abs()
                < 1e-15
        );
    }

    #[test]
    fn barrlund_frozen_values() {
        // b_2(0, 0.5) = 0.5 / sqrt(1.25).
        let v = barrlund(&DISK, 2.0, Point::ZERO, Point::new(0.5, 0.0)).unwrap();
        assert!((v.value - 0.5 / 1.25f64.sqrt()).abs() < 1e-15);
        // b_2(-0.5, 0.5) = 1 / sqrt(2.5).
        let v = barrlund(&DISK, 2.0, Point::new(-0.5, 0.0), Point::new(0.5, 0.0)).unwrap();
        assert!((v.value - 1.0 / 2.5f64.sqrt()).abs() < 1e-15);
        // p = 1 reduces to s (same infimum).
        let x = Point::new(0.3, 0.1);
        let y = Point::new(-0.2, 0.55);
        let b1 = barrlund(&DISK, 1.0, x, y).unwrap().value;
        let s = s_metric(&DISK, x, y).unwrap().value;
        assert!((b1 - s).abs() < 1e-10);
        assert!(matches!(
            barrlund(&DISK, 0.5, x, y),
            Err(Error::InvalidExponent { .. })
        ));
    }

    #[test]
    fn barrlund_numeric_extremal_matches_closed_form() {
        // p = 2 numeric scan must agree with the closed form, including the
        // extremal point.
        let x = Point::new(0.3, 0.2);
        let y = Point::new(-0.1, 0.4);
        let closed = barrlund(&DISK, 2.0, x, y).unwrap();
        let objective = |z: Point| (x.dist(z).powi(2) + z.dist(y).powi(2)).sqrt();
        let best = minimize_over_boundary(&DISK, x, y, 2048, 6, &objective);
        let numeric = x.dist(y) / best.value;
        assert!((closed.value - numeric).abs() < 1e-9);
        let closed_z = match closed.detail.unwrap() {
            MetricDetail::Extremal { z } => z,
            _ => unreachable!(),
        };
        assert!((closed_z - best.point).abs() < 1e-5);
    }

    #[test]
    fn low_frozen_values() {
        let v = low(Point::new(0.3, 0.0), Point::new(-0.1, 0.0)).unwrap();
        assert!((v.value - 0.4 / (10.0 / 3.0 + 0.1)).abs() < 1e-15);
        assert!((v.value - 0.116_504_9).abs() < 1e-7);
        let v = low(Point::new(0.3, 0.0), Point::new(0.1, 0.0)).unwrap();
        assert!((v.value - 0.061_855_7).abs() < 1e-7);
        let v = low(Point::new(0.1, 0.0), Point::new(-0.1, 0.0)).unwrap();
        assert!((v.value - 0.2 / 10.1).abs() < 1e-15);
        let x = Point::new(0.4, 0.2);
        assert_eq!(low(x, x).unwrap().value, 0.0);
        assert!(matches!(
            low(Point::ZERO, Point::new(0.3, 0.0)),
            Err(Error::OriginNotAllowed)
        ));
    }

    #[test]
    fn low_triangle_inequality_fails_on_the_documented_triple() {
        // low is not a metric: low(0.3, -0.1) > low(0.3, 0.1) + low(0.1, -0.1).
        let a = low(Point::new(0.3, 0.0), Point::new(-0.1, 0.0))
            .unwrap()
            .value;
        let b = low(Point::new(0.3, 0.0), Point::new(0.1, 0.0))
            .unwrap()
            .value;
        let c = low(Point::new(0.1, 0.0), Point::new(-0.1, 0.0))
            .unwrap()
            .value;
        assert!(a > b + c + 0.03);
        assert!((a - 0.116_504_9).abs() < 1e-7);
        assert!((b + c - 0.081_657_7).abs() < 1e-7);
    }

    #[test]
    fn starlike_bound_frozen_values_and_domination() {
        let b = starlike_upper_bound(&DISK, Point::new(0.5, 0.0), Point::new(-0.6, 0.0)).unwrap();
        assert!((b - 0.948_458_7).abs() < 1e-7, "got {b}");
        let s = s_metric(&DISK, Point::new(0.5, 0.0), Point::new(-0.6, 0.0))
            .unwrap()
            .value;
        assert!((s - 1.1 / 1.9).abs() < 1e-15);
        assert!(b >= s);
        // Equal-distance pair (0.7, -0.7).
        let b = starlike_upper_bound(&DISK, Point::new(0.7, 0.0), Point::new(-0.7, 0.0)).unwrap();
        let expected = {
            let d = 1.4f64;
            let inner = (d * d - 0.09).sqrt();
            d / (0.3 + (d * d + 0.09 - 0.6 * inner).sqrt())
        };
        assert!((b - expected).abs() < 1e-15);
        assert!((b - 0.993_729_725_284_494_2).abs() < 1e-13, "got {b}");
        assert!(b >= 0.7);
        // Precondition: overlapping boundary disks rejected.
        assert!(matches!(
            starlike_upper_bound(&DISK, Point::ZERO, Point::new(0.5, 0.0)),
            Err(Error::PreconditionFailed { .. })
        ));
        assert!(matches!(
            starlike_upper_bound(
                &DomainSpec::PuncturedUnitDisk,
                Point::new(0.7, 0.0),
                Point::new(-0.7, 0.0)
            ),
            Err(Error::UnsupportedDomain { .. })
        ));
    }

    #[test]
    fn ball_s_diameter_frozen_values() {
        // Centered ball: diameter r.
        for r in [0.1, 0.5, 0.9] {
            assert!((ball_s_diameter(&DISK, Point::ZERO, r).unwrap() - r).abs() < 1e-15);
        }
        let v = ball_s_diameter(&DISK, Point::new(0.4, 0.4), 0.3).unwrap();
        assert!((v - 0.3 / (1.0 - 0.4 * 2.0f64.sqrt())).abs() < 1e-15);
        assert!((v - 0.690_743_569_830_546_3).abs() < 1e-13);
        let v = ball_s_diameter(&DomainSpec::UpperHalfPlane, Point::I, 0.5).unwrap();
        assert_eq!(v, 0.5);
        assert!(matches!(
            ball_s_diameter(&DISK, Point::new(0.8, 0.0), 0.25),
            Err(Error::BallNotContained)
        ));
        assert!(matches!(
            ball_s_diameter(&DISK, Point::ZERO, 0.0),
            Err(Error::NonpositiveRadius { .. })
        ));
    }

    #[test]
    fn metrics_are_symmetric() {
        let x = Point::new(0.31, -0.12);
        let y = Point::new(-0.44, 0.29);
        let s1 = s_metric(&DISK, x, y).unwrap().value;
        let s2 = s_metric(&DISK, y, x).unwrap().value;
        assert!((s1 - s2).abs() < 1e-13);
        let b1 = barrlund(&DISK, 3.0, x, y).unwrap().value;
        let b2 = barrlund(&DISK, 3.0, y, x).unwrap().value;
        assert!((b1 - b2).abs() < 1e-12);
        let l1 = low(x, y).unwrap().value;
        let l2 = low(y, x).unwrap().value;
        assert!((l1 - l2).abs() < 1e-15);
    }
}
