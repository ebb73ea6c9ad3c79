//! One-dimensional minimization over domain boundaries.
//!
//! The boundary of each supported domain is parameterized by a single real
//! parameter (angle, arc length, or real coordinate). Minimization runs a
//! dense grid scan, collects local minima of the sampled values, and refines
//! the best brackets by golden-section search down to a fixed parameter
//! tolerance. The same engine serves the production solver (coarse grid), the
//! high-resolution oracle, and the Barrlund suprema (different objective).

use crate::domain::DomainSpec;
use crate::point::Point;
use std::f64::consts::TAU;

/// Golden-section parameter tolerance used by every boundary refinement.
pub const REFINE_TOL: f64 = 1e-14;

const INV_PHI: f64 = 0.618_033_988_749_894_9; // 1/phi
const INV_PHI2: f64 = 0.381_966_011_250_105_1; // 1/phi^2

/// Minimizes a unimodal-on-the-bracket function on [a, b] by golden-section
/// search; returns (argmin, min). Tolerance is absolute in the parameter.
pub fn golden_section_min(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> (f64, f64) {
    let (mut a, mut b) = (a, b);
    let mut h = b - a;
    if h <= tol {
        let m = 0.5 * (a + b);
        return (m, f(m));
    }
    let mut c = a + INV_PHI2 * h;
    let mut d = a + INV_PHI * h;
    let mut fc = f(c);
    let mut fd = f(d);
    while h > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            h = b - a;
            c = a + INV_PHI2 * h;
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            h = b - a;
            d = a + INV_PHI * h;
            fd = f(d);
        }
    }
    if fc < fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Outcome of a boundary minimization: objective value, realizing boundary
/// point, and its parameter (angle / arc length / coordinate; NaN when the
/// boundary component is a single point).
#[derive(Clone, Copy, Debug)]
pub struct BoundaryMin {
    pub value: f64,
    pub point: Point,
    pub param: f64,
}

/// Grid indices that are local minima of `vals`; `cyclic` joins the ends.
/// Capped and sorted best-first.
fn local_minima(vals: &[f64], cyclic: bool, cap: usize) -> Vec<usize> {
    let n = vals.len();
    let mut idx: Vec<usize> = (0..n)
        .filter(|&i| {
            let prev = if i > 0 {
                Some(vals[i - 1])
            } else if cyclic {
                Some(vals[n - 1])
            } else {
                None
            };
            let next = if i + 1 < n {
                Some(vals[i + 1])
            } else if cyclic {
                Some(vals[0])
            } else {
                None
            };
            prev.is_none_or(|p| vals[i] <= p) && next.is_none_or(|q| vals[i] <= q)
        })
        .collect();
    idx.sort_by(|&a, &b| vals[a].total_cmp(&vals[b]));
    idx.truncate(cap);
    idx
}

/// Scans `f` over the circle with `n` grid points and refines up to `cap`
/// local minima.
fn minimize_on_circle(f: &dyn Fn(Point) -> f64, n: usize, cap: usize) -> BoundaryMin {
    let g = |theta: f64| f(Point::polar(1.0, theta));
    let step = TAU / n as f64;
    let vals: Vec<f64> = (0..n).map(|i| g(i as f64 * step)).collect();
    let mut best = BoundaryMin {
        value: f64::INFINITY,
        point: Point::ONE,
        param: 0.0,
    };
    for i in local_minima(&vals, true, cap) {
        let t0 = i as f64 * step;
        let (theta, value) = golden_section_min(g, t0 - step, t0 + step, REFINE_TOL);
        if value < best.value {
            let theta = theta.rem_euclid(TAU);
            best = BoundaryMin {
                value,
                point: Point::polar(1.0, theta),
                param: theta,
            };
        }
    }
    best
}

/// Scans `f` on the segment [lo, hi] (n+1 points) and refines local minima.
fn minimize_on_segment(
    g: &dyn Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    n: usize,
    cap: usize,
) -> (f64, f64) {
    let step = (hi - lo) / n as f64;
    let vals: Vec<f64> = (0..=n).map(|i| g(lo + i as f64 * step)).collect();
    let mut best = (f64::INFINITY, lo);
    for i in local_minima(&vals, false, cap) {
        let t0 = lo + i as f64 * step;
        let (t, value) =
            golden_section_min(g, (t0 - step).max(lo), (t0 + step).min(hi), REFINE_TOL);
        if value < best.0 {
            best = (value, t);
        }
    }
    (best.1, best.0)
}

/// Minimizes `objective` over the boundary of `domain`. `x` and `y` size the
/// search window for unbounded boundaries (half-plane). `resolution` is the
/// grid density; `cap` bounds how many grid local minima get refined.
pub(crate) fn minimize_over_boundary(
    domain: &DomainSpec,
    x: Point,
    y: Point,
    resolution: usize,
    cap: usize,
    objective: &dyn Fn(Point) -> f64,
) -> BoundaryMin {
    match domain {
        DomainSpec::UnitDisk => minimize_on_circle(objective, resolution, cap),
        DomainSpec::PuncturedUnitDisk => {
            let circle = minimize_on_circle(objective, resolution, cap);
            let at_origin = objective(Point::ZERO);
            if at_origin < circle.value {
                BoundaryMin {
                    value: at_origin,
                    point: Point::ZERO,
                    param: f64::NAN,
                }
            } else {
                circle
            }
        }
        DomainSpec::UpperHalfPlane => {
            // Any boundary minimizer of a two-leg path lies between the feet
            // of the endpoints, padded by the heights; the window below covers
            // that with a wide margin.
            let pad = 2.0 * (x.im + y.im + (x.re - y.re).abs()) + 2.0;
            let lo = x.re.min(y.re) - pad;
            let hi = x.re.max(y.re) + pad;
            let g = |t: f64| objective(Point::new(t, 0.0));
            let (t, value) = minimize_on_segment(&g, lo, hi, resolution, cap);
            BoundaryMin {
                value,
                point: Point::new(t, 0.0),
                param: t,
            }
        }
        DomainSpec::ConvexPolygon(poly) => {
            let perimeter = poly.perimeter();
            let lengths: Vec<f64> = poly.edges().map(|(a, b)| a.dist(b)).collect();
            let verts = poly.vertices();
            let point_at = |mut t: f64| -> Point {
                t = t.rem_euclid(perimeter);
                for (i, &len) in lengths.iter().enumerate() {
                    if t <= len {
                        let a = verts[i];
                        let b = verts[(i + 1) % verts.len()];
                        return a + (b - a) * (t / len);
                    }
                    t -= len;
                }
                verts[0]
            };
            let g = |t: f64| objective(point_at(t));
            let step = perimeter / resolution as f64;
            let vals: Vec<f64> = (0..resolution).map(|i| g(i as f64 * step)).collect();
            let mut best = BoundaryMin {
                value: f64::INFINITY,
                point: verts[0],
                param: 0.0,
            };
            for i in local_minima(&vals, true, cap) {
                let t0 = i as f64 * step;
                let (t, value) = golden_section_min(g, t0 - step, t0 + step, REFINE_TOL);
                if value < best.value {
                    let t = t.rem_euclid(perimeter);
                    best = BoundaryMin {
                        value,
                        point: point_at(t),
                        param: t,
                    };
                }
            }
            best
        }
        DomainSpec::PointComplement(z0) => BoundaryMin {
            value: objective(*z0),
            point: *z0,
            param: f64::NAN,
        },
    }
}
