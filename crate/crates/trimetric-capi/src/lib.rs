//! C ABI over the trimetric library.
//!
//! Conventions:
//! - Domains are opaque `TrmDomain*` handles created by the `trm_domain_*`
//!   constructors and released with [`trm_domain_free`].
//! - Every fallible call returns a [`TrmStatus`]; outputs are written through
//!   caller-supplied pointers only on `TRM_STATUS_OK`.
//! - Null pointers are rejected with `TRM_STATUS_NULL_POINTER`, never
//!   dereferenced.
//! - No call panics across the FFI boundary.

use std::ffi::c_char;
use trimetric::domain::{DomainSpec, Polygon};
use trimetric::error::Error;
use trimetric::holder::holder_variants;
use trimetric::hyperbolic::{rho_disk, rho_half_plane};
use trimetric::metrics::{ball_s_diameter, barrlund, jstar, low, point_pair, s_metric};
use trimetric::point::Point;
use trimetric::rotations::{euclidean_bounds, hyperbolic_bounds};

/// Opaque planar-domain handle.
pub struct TrmDomain(DomainSpec);

/// A point of the complex plane.
#[repr(C)]
#[derive(Clone, Copy)]
pub struct TrmPoint {
    pub re: f64,
    pub im: f64,
}

impl From<TrmPoint> for Point {
    fn from(p: TrmPoint) -> Self {
        Point::new(p.re, p.im)
    }
}

/// Status code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TrmStatus {
    /// Success; outputs are valid.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A point lies outside (or on the boundary of) the domain.
    PointNotInDomain = 2,
    /// The two points coincide where a distinct pair is required.
    DegenerateInput = 3,
    /// A scalar or structural argument is out of range (exponent,
    /// dilatation, radius, vertex list, ...).
    InvalidArgument = 4,
    /// A geometric precondition failed (ball not contained, pair collinear
    /// with the origin where forbidden, ...).
    PreconditionFailed = 5,
    /// The operation is not defined on this domain.
    Unsupported = 6,
}

fn status_of(err: &Error) -> TrmStatus {
    match err {
        Error::PointNotInDomain { .. }
        | Error::PointNotOnCircle { .. }
        | Error::OriginNotAllowed => TrmStatus::PointNotInDomain,
        Error::DegenerateInput => TrmStatus::DegenerateInput,
        Error::InvalidPolygon { .. }
        | Error::InvalidResolution { .. }
        | Error::InvalidExponent { .. }
        | Error::InvalidDilatation { .. }
        | Error::InvalidMetricValue { .. }
        | Error::NonpositiveRadius { .. }
        | Error::UnknownProbe { .. } => TrmStatus::InvalidArgument,
        Error::PreconditionFailed { .. } | Error::CollinearWithOrigin | Error::BallNotContained => {
            TrmStatus::PreconditionFailed
        }
        Error::UnsupportedDomain { .. } | Error::UnsupportedSuite { .. } => TrmStatus::Unsupported,
    }
}

/// Two-sided bounds for s from the Euclidean midpoint rotation.
#[repr(C)]
pub struct TrmEuclideanBounds {
    /// s at the equal-modulus rotated pair; always a lower bound.
    pub lower: f64,
    /// Weaker algebraic lower bound |x-y| / hypot(2 - |x+y|, |x-y|).
    pub lower_closed: f64,
    /// s at the radial rotated pair; meaningful only when `has_upper`.
    pub upper: f64,
    /// True when the radial pair stays inside the disk, making `upper` a
    /// valid (tight) upper bound.
    pub has_upper: bool,
    /// Closed-form upper bound |x-y| / (2 - |x+y|); always valid.
    pub upper_closed: f64,
}

/// Two-sided bounds for s from the hyperbolic midpoint rotation.
#[repr(C)]
pub struct TrmHyperbolicBounds {
    pub lower: f64,
    pub upper: f64,
}

/// Holder continuity bounds for K-quasiconformal self-maps of the disk.
#[repr(C)]
pub struct TrmHolderBounds {
    /// Maximal dilatation the bounds apply to.
    pub k: f64,
    /// Triangular ratio s(x, y).
    pub s: f64,
    /// Main bound 2^{3-1/K} (s/(1+s^2))^{1/K}.
    pub thm_main: f64,
    /// Point-pair-metric variant; always valid.
    pub cor_p: f64,
    /// Aligned variant; a proven bound only when `collinear_valid`.
    pub cor_collinear: f64,
    /// True while the aligned estimate |x-y|/(2-|x+y|) stays within [0, 1].
    pub collinear_valid: bool,
    /// Hyperbolic-rotation variant; always valid.
    pub cor_hyp: f64,
    /// Radial variant; meaningful only when `has_radial`.
    pub cor_radial: f64,
    pub has_radial: bool,
    /// Chord variant; meaningful only when `has_unit`.
    pub cor_unit: f64,
    pub has_unit: bool,
    /// Minimum of the valid present bounds.
    pub best: f64,
    /// True when even `best` exceeds the disk diameter 2.
    pub vacuous: bool,
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn trm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Static human-readable description of a status code.
#[no_mangle]
pub extern "C" fn trm_status_message(status: TrmStatus) -> *const c_char {
    let msg: &'static str = match status {
        TrmStatus::Ok => "ok\0",
        TrmStatus::NullPointer => "a required pointer argument was null\0",
        TrmStatus::PointNotInDomain => "a point is not strictly inside the domain\0",
        TrmStatus::DegenerateInput => "the two points coincide\0",
        TrmStatus::InvalidArgument => "an argument is out of range\0",
        TrmStatus::PreconditionFailed => "a geometric precondition failed\0",
        TrmStatus::Unsupported => "the operation is not defined on this domain\0",
    };
    msg.as_ptr() as *const c_char
}

// ---------------------------------------------------------------------------
// Domain handles
// ---------------------------------------------------------------------------

fn domain_handle(domain: DomainSpec) -> *mut TrmDomain {
    Box::into_raw(Box::new(TrmDomain(domain)))
}

/// The open unit disk.
#[no_mangle]
pub extern "C" fn trm_domain_unit_disk() -> *mut TrmDomain {
    domain_handle(DomainSpec::UnitDisk)
}

/// The upper half-plane Im z > 0.
#[no_mangle]
pub extern "C" fn trm_domain_upper_half_plane() -> *mut TrmDomain {
    domain_handle(DomainSpec::UpperHalfPlane)
}

/// The unit disk with the origin removed.
#[no_mangle]
pub extern "C" fn trm_domain_punctured_unit_disk() -> *mut TrmDomain {
    domain_handle(DomainSpec::PuncturedUnitDisk)
}

/// The plane with one point removed.
#[no_mangle]
pub extern "C" fn trm_domain_point_complement(z0: TrmPoint) -> *mut TrmDomain {
    domain_handle(DomainSpec::PointComplement(z0.into()))
}

/// A bounded convex polygon from `len >= 3` vertices (either orientation,
/// no repeats, strictly convex). Writes the handle to `out` on success.
///
/// # Safety
/// `vertices` must point to `len` readable `TrmPoint`s; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn trm_domain_convex_polygon(
    vertices: *const TrmPoint,
    len: usize,
    out: *mut *mut TrmDomain,
) -> TrmStatus {
    if vertices.is_null() || out.is_null() {
        return TrmStatus::NullPointer;
    }
    let slice = std::slice::from_raw_parts(vertices, len);
    match Polygon::new(slice.iter().map(|p| Point::new(p.re, p.im)).collect()) {
        Ok(poly) => {
            *out = domain_handle(DomainSpec::ConvexPolygon(poly));
            TrmStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Releases a domain handle. Null is ignored.
///
/// # Safety
/// `domain` must be null or a handle obtained from a `trm_domain_*`
/// constructor, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn trm_domain_free(domain: *mut TrmDomain) {
    if !domain.is_null() {
        drop(Box::from_raw(domain));
    }
}

/// Whether `z` lies strictly inside the domain. Never fails besides null
/// arguments.
///
/// # Safety
/// `domain` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trm_domain_contains(
    domain: *const TrmDomain,
    z: TrmPoint,
    out: *mut bool,
) -> TrmStatus {
    if domain.is_null() || out.is_null() {
        return TrmStatus::NullPointer;
    }
    *out = (*domain).0.contains_interior(z.into());
    TrmStatus::Ok
}

// ---------------------------------------------------------------------------
// Metrics
// ---------------------------------------------------------------------------

unsafe fn eval_metric(
    domain: *const TrmDomain,
    out: *mut f64,
    f: impl FnOnce(&DomainSpec) -> Result<f64, Error>,
) -> TrmStatus {
    if domain.is_null() || out.is_null() {
        return TrmStatus::NullPointer;
    }
    match f(&(*domain).0) {
        Ok(v) => {
            *out = v;
            TrmStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Triangular ratio metric s(x, y) = |x-y| / inf_z(|x-z| + |z-y|), infimum
/// over boundary points z.
///
/// # Safety
/// `domain` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trm_s_metric(
    domain: *const TrmDomain,
    x: TrmPoint,
    y: TrmPoint,
    out: *mut f64,
) -> TrmStatus {
    eval_metric(domain, out, |d| Ok(s_metric(d, x.into(), y.into())?.value))
}

/// j* metric |x-y| / (|x-y| + 2 min(d(x), d(y))).
///
/// # Safety
/// `domain` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trm_jstar(
    domain: *const TrmDomain,
    x: TrmPoint,
    y: TrmPoint,
    out: *mut f64,
) -> TrmStatus {
    eval_metric(domain, out, |d| Ok(jstar(d, x.into(), y.into())?.value))
}

/// Point-pair metric p(x, y) = |x-y| / sqrt(|x-y|^2 + 4 d(x) d(y)).
///
/// # Safety
/// `domain` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trm_point_pair(
    domain: *const TrmDomain,
    x: TrmPoint,
    y: TrmPoint,
    out: *mut f64,
) -> TrmStatus {
    eval_metric(
        domain,
        out,
        |d| Ok(point_pair(d, x.into(), y.into())?.value),
    )
}

/// Barrlund metric b_p(x, y) = sup_z |x-y| / (|x-z|^p + |z-y|^p)^{1/p},
/// supremum over boundary points z; requires p >= 1.
///
/// # Safety
/// `domain` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trm_barrlund(
    domain: *const TrmDomain,
    p: f64,
    x: TrmPoint,
    y: TrmPoint,
    out: *mut f64,
) -> TrmStatus {
    eval_metric(domain, out, |d| {
        Ok(barrlund(d, p, x.into(), y.into())?.value)
    })
}

/// The low metric of the punctured unit disk,
/// |x-y| / min(|x - y/|y|^2|, |x/|x|^2 - y|); both points must lie in the
/// punctured disk.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trm_low(x: TrmPoint, y: TrmPoint, out: *mut f64) -> TrmStatus {
    if out.is_null() {
        return TrmStatus::NullPointer;
    }
    match low(x.into(), y.into()) {
        Ok(v) => {
            *out = v.value;
            TrmStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Hyperbolic distance of the unit disk.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trm_rho_disk(x: TrmPoint, y: TrmPoint, out: *mut f64) -> TrmStatus {
    if out.is_null() {
        return TrmStatus::NullPointer;
    }
    match rho_disk(x.into(), y.into()) {
        Ok(v) => {
            *out = v;
            TrmStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Hyperbolic distance of the upper half-plane.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trm_rho_half_plane(x: TrmPoint, y: TrmPoint, out: *mut f64) -> TrmStatus {
    if out.is_null() {
        return TrmStatus::NullPointer;
    }
    match rho_half_plane(x.into(), y.into()) {
        Ok(v) => {
            *out = v;
            TrmStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// s-diameter of the metric ball B(center, radius) contained in the domain:
/// the supremum of s over its point pairs.
///
/// # Safety
/// `domain` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trm_ball_s_diameter(
    domain: *const TrmDomain,
    center: TrmPoint,
    radius: f64,
    out: *mut f64,
) -> TrmStatus {
    eval_metric(domain, out, |d| ball_s_diameter(d, center.into(), radius))
}

// ---------------------------------------------------------------------------
// Bounds
// ---------------------------------------------------------------------------

/// Euclidean midpoint-rotation bounds for s in the unit disk; requires
/// distinct interior points.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trm_euclidean_bounds(
    x: TrmPoint,
    y: TrmPoint,
    out: *mut TrmEuclideanBounds,
) -> TrmStatus {
    if out.is_null() {
        return TrmStatus::NullPointer;
    }
    match euclidean_bounds(x.into(), y.into()) {
        Ok(b) => {
            *out = TrmEuclideanBounds {
                lower: b.lower,
                lower_closed: b.lower_closed,
                upper: b.upper.unwrap_or(f64::NAN),
                has_upper: b.upper.is_some(),
                upper_closed: b.upper_closed,
            };
            TrmStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Hyperbolic midpoint-rotation bounds for s in the unit disk; requires
/// distinct interior points.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trm_hyperbolic_bounds(
    x: TrmPoint,
    y: TrmPoint,
    out: *mut TrmHyperbolicBounds,
) -> TrmStatus {
    if out.is_null() {
        return TrmStatus::NullPointer;
    }
    match hyperbolic_bounds(x.into(), y.into()) {
        Ok(b) => {
            *out = TrmHyperbolicBounds {
                lower: b.lower,
                upper: b.upper,
            };
            TrmStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Holder continuity bounds for K-quasiconformal self-maps of the unit disk
/// fixing the origin class. Pass `r = NAN` when no radius cap is intended;
/// the radial variant appears only when |x+y|/2 <= r < 1.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trm_holder_bounds(
    x: TrmPoint,
    y: TrmPoint,
    k: f64,
    r: f64,
    out: *mut TrmHolderBounds,
) -> TrmStatus {
    if out.is_null() {
        return TrmStatus::NullPointer;
    }
    let r_cap = if r.is_nan() { None } else { Some(r) };
    let (px, py): (Point, Point) = (x.into(), y.into());
    match holder_variants(px, py, k, r_cap) {
        Ok(rep) => {
            *out = TrmHolderBounds {
                k: rep.k,
                s: rep.s,
                thm_main: rep.thm_main,
                cor_p: rep.cor_p,
                cor_collinear: rep.cor_collinear,
                collinear_valid: px.dist(py) <= 2.0 - (px + py).abs(),
                cor_hyp: rep.cor_hyp,
                cor_radial: rep.cor_radial.unwrap_or(f64::NAN),
                has_radial: rep.cor_radial.is_some(),
                cor_unit: rep.cor_unit.unwrap_or(f64::NAN),
                has_unit: rep.cor_unit.is_some(),
                best: rep.best,
                vacuous: rep.vacuous,
            };
            TrmStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}
