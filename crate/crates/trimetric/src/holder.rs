//! Hölder-continuity bounds for K-quasiconformal self-maps of the unit disk,
//! plus concrete test maps used to validate them empirically.
//!
//! The main bound is `2^{3-1/K} (s/(1+s^2))^{1/K}` with s the triangular
//! ratio of the preimage pair. Each variant replaces s by a closed-form
//! estimate: the point-pair metric p, the aligned-rotation estimate
//! |x-y|/(2-|x+y|), the hyperbolic-rotation estimate, a radial cap, or the
//! chord length itself. The estimate-based variants dominate the main bound
//! only while the estimate stays in [0, 1], where u -> u/(1+u^2) is
//! increasing; the aligned estimate can exceed 1, and the corresponding
//! variant then stops being a valid upper bound (see
//! `collinear_variant_needs_estimate_in_unit_range`).

use crate::domain::{check_unit_disk_interior, DomainSpec};
use crate::error::{Error, Result};
use crate::hyperbolic::{hyperbolic_midpoint, quarter_param};
use crate::metrics::s_metric;
use crate::point::Point;
use serde::Serialize;

/// u / (1 + u^2), the shape of the main bound; increasing on [0, 1].
fn bound_shape(u: f64) -> f64 {
    u / (1.0 + u * u)
}

/// 2^{3 - shift/K} * base^{1/K}.
fn scaled_power(shift: f64, base: f64, k: f64) -> f64 {
    (3.0 - shift / k).exp2() * base.powf(1.0 / k)
}

fn check_dilatation(k: f64) -> Result<()> {
    if k < 1.0 || !k.is_finite() {
        return Err(Error::InvalidDilatation { k });
    }
    Ok(())
}

/// Distance bound for a K-quasiconformal self-map of the unit disk:
/// |f(x) - f(y)| <= 2^{3-1/K} (s/(1+s^2))^{1/K} where s = s(x, y).
pub fn holder_bound(s_value: f64, k: f64) -> Result<f64> {
    check_dilatation(k)?;
    if !(0.0..=1.0).contains(&s_value) {
        return Err(Error::InvalidMetricValue { s: s_value });
    }
    Ok(scaled_power(1.0, bound_shape(s_value), k))
}

/// The family of distance bounds for one pair and one dilatation.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct HolderReport {
    /// Maximal dilatation of the map class the bounds apply to.
    #[serde(rename = "K")]
    pub k: f64,
    /// Triangular ratio s(x, y) feeding the main bound.
    pub s: f64,
    /// Main bound 2^{3-1/K} (s/(1+s^2))^{1/K}.
    pub thm_main: f64,
    /// Variant with s replaced by the point-pair metric p (always valid):
    /// 2^{3-2/K} (sqrt(|x-y|^2 + 4(1-|x|)(1-|y|)) |x-y|
    ///            / (|x-y|^2 + 2(1-|x|)(1-|y|)))^{1/K}.
    pub cor_p: f64,
    /// Variant with s replaced by |x-y|/(2-|x+y|):
    /// 2^{3-2/K} ((2-|x+y|)|x-y| / (2-2|x+y|+|x|^2+|y|^2))^{1/K}.
    /// A valid upper bound only while |x-y|/(2-|x+y|) <= 1.
    pub cor_collinear: f64,
    /// Variant with s replaced by the hyperbolic-rotation estimate
    /// (always valid): 2^{3-1/K} ((1+|q|)(1+|q|t^2)t
    ///                 / ((1+|q|t^2)^2 + (1+|q|)^2 t^2))^{1/K}.
    pub cor_hyp: f64,
    /// Radial variant 2^{3-2/K} (|x-y|/(1-r))^{1/K}; present iff the caller
    /// supplied r with |x+y|/2 <= r < 1.
    pub cor_radial: Option<f64>,
    /// Chord variant 2^{3-1/K} |x-y|^{1/K}; present iff |x+y| <= 1.
    pub cor_unit: Option<f64>,
    /// Minimum of the valid present bounds. The aligned variant participates
    /// only while its estimate |x-y|/(2-|x+y|) stays within [0, 1].
    pub best: f64,
    /// True when even the best bound exceeds the disk diameter 2 and so
    /// carries no information.
    pub vacuous: bool,
}

/// Evaluates every distance-bound variant for the pair (x, y) and
/// dilatation K. `r` is the caller's radial cap for the radial variant; it
/// is never inferred from the pair.
pub fn holder_variants(x: Point, y: Point, k: f64, r: Option<f64>) -> Result<HolderReport> {
    check_unit_disk_interior(x)?;
    check_unit_disk_interior(y)?;
    check_dilatation(k)?;
    let s = s_metric(&DomainSpec::UnitDisk, x, y)?.value;
    let thm_main = scaled_power(1.0, bound_shape(s), k);

    let d = x.dist(y);
    let dx = 1.0 - x.abs();
    let dy = 1.0 - y.abs();
    let root = (d * d + 4.0 * dx * dy).sqrt();
    let cor_p = scaled_power(2.0, root * d / (d * d + 2.0 * dx * dy), k);

    let sum = (x + y).abs();
    // 2 - 2|x+y| + |x|^2 + |y|^2 == ((2 - |x+y|)^2 + |x-y|^2) / 2, which
    // avoids the cancellation of the left-hand form near the boundary.
    let collinear_den = 0.5 * ((2.0 - sum) * (2.0 - sum) + d * d);
    let cor_collinear = scaled_power(2.0, (2.0 - sum) * d / collinear_den, k);

    let qm = hyperbolic_midpoint(x, y)?.abs();
    let t = quarter_param(x, y)?;
    let a = 1.0 + qm * t * t;
    let b = 1.0 + qm;
    let cor_hyp = scaled_power(1.0, b * a * t / (a * a + b * b * t * t), k);

    let cor_radial = r
        .filter(|&r| r.is_finite() && 0.5 * sum <= r && r < 1.0)
        .map(|r| scaled_power(2.0, d / (1.0 - r), k));
    let cor_unit = (sum <= 1.0).then(|| scaled_power(1.0, d, k));

    // The aligned variant is a proven bound only while its estimate
    // |x-y|/(2-|x+y|) stays within [0, 1]; beyond that the validation maps
    // exceed it, so it must not win the minimum.
    let collinear_if_valid = (d <= 2.0 - sum).then_some(cor_collinear);
    let best = [
        Some(thm_main),
        Some(cor_p),
        collinear_if_valid,
        Some(cor_hyp),
        cor_radial,
        cor_unit,
    ]
    .into_iter()
    .flatten()
    .fold(f64::INFINITY, f64::min);
    Ok(HolderReport {
        k,
        s,
        thm_main,
        cor_p,
        cor_collinear,
        cor_hyp,
        cor_radial,
        cor_unit,
        best,
        vacuous: best > 2.0,
    })
}

/// Concrete quasiconformal self-maps of the disk used as validation
/// witnesses for the distance bounds.
#[derive(Clone, Copy, Debug, Serialize)]
#[serde(tag = "map", rename_all = "kebab-case")]
pub enum TestMap {
    /// z -> e^{i phase} (z - a)/(1 - conj(a) z); a conformal (hence
    /// 1-quasiconformal) bijection of the disk.
    MobiusAutomorphism { a: Point, phase: f64 },
    /// z -> |z|^{1/K - 1} z; the classical K-quasiconformal radial map.
    RadialStretch { k: f64 },
}

impl TestMap {
    /// Maximal dilatation of the map.
    pub fn dilatation(&self) -> f64 {
        match self {
            TestMap::MobiusAutomorphism { .. } => 1.0,
            TestMap::RadialStretch { k } => *k,
        }
    }
}

/// Applies a test map to a point of the open unit disk.
pub fn apply_test_map(map: &TestMap, z: Point) -> Result<Point> {
    check_unit_disk_interior(z)?;
    match *map {
        TestMap::MobiusAutomorphism { a, phase } => {
            check_unit_disk_interior(a)?;
            let w = (z - a) / (Point::ONE - a.conj() * z);
            Ok(Point::polar(1.0, phase) * w)
        }
        TestMap::RadialStretch { k } => {
            check_dilatation(k)?;
            if z.is_zero() {
                return Ok(z);
            }
            Ok(z * z.abs().powf(1.0 / k - 1.0))
        }
    }
}
