//! Randomized property tests for the metric identities, rotation invariants,
//! and bound orderings, complementing the seeded verification suites with
//! shrinking counterexample search.

use proptest::prelude::*;
use std::f64::consts::TAU;
use trimetric::domain::DomainSpec;
use trimetric::holder::{apply_test_map, holder_bound, holder_variants, TestMap};
use trimetric::hyperbolic::{
    ahlfors_bracket, hyp_ball_to_euclidean, hyperbolic_midpoint, quarter_param, rho_disk,
    tanh_half_rho,
};
use trimetric::infimum::{boundary_infimum, oracle_boundary_infimum};
use trimetric::metrics::{ball_s_diameter, barrlund, jstar, low, point_pair, s_metric};
use trimetric::point::Point;
use trimetric::rotations::{
    common_pencil_point, euclidean_bounds, euclidean_rotation, hyperbolic_bounds,
    hyperbolic_rotation, same_radius_pullup,
};

const DISK: DomainSpec = DomainSpec::UnitDisk;

/// A point of the open unit disk, kept a comfortable distance from the
/// boundary so every tested quantity is well conditioned.
fn disk_point() -> impl Strategy<Value = Point> {
    (0.0..0.95f64, 0.0..TAU).prop_map(|(rr, th)| Point::polar(rr.sqrt(), th))
}

/// A disk pair with a non-degenerate separation.
fn disk_pair() -> impl Strategy<Value = (Point, Point)> {
    (disk_point(), disk_point()).prop_filter("pair too close", |(x, y)| x.dist(*y) > 1e-6)
}

/// A pair in the punctured disk, also away from the puncture.
fn punctured_pair() -> impl Strategy<Value = (Point, Point)> {
    ((0.05..0.95f64, 0.0..TAU), (0.05..0.95f64, 0.0..TAU))
        .prop_map(|((r1, t1), (r2, t2))| (Point::polar(r1, t1), Point::polar(r2, t2)))
        .prop_filter("pair too close", |(x, y)| x.dist(*y) > 1e-6)
}

proptest! {
    // ------------------------------------------------------------------
    // Boundary infimum
    // ------------------------------------------------------------------

    #[test]
    fn infimum_is_symmetric_bounded_and_attained((x, y) in disk_pair()) {
        let a = boundary_infimum(&DISK, x, y).unwrap();
        let b = boundary_infimum(&DISK, y, x).unwrap();
        let d = x.dist(y);
        // Triangle inequality through any boundary point.
        prop_assert!(a.value >= d - 1e-12);
        // Never worse than the best single-endpoint detour.
        let cheap = (2.0 * (1.0 - x.abs()) + d).min(2.0 * (1.0 - y.abs()) + d);
        prop_assert!(a.value <= cheap + 1e-12);
        prop_assert!((a.value - b.value).abs() <= 1e-9 * a.value);
        // The minimizer lies on the circle and attains the value.
        prop_assert!((a.minimizer.abs() - 1.0).abs() <= 1e-9);
        let attained = x.dist(a.minimizer) + a.minimizer.dist(y);
        prop_assert!((attained - a.value).abs() <= 1e-9 * a.value);
        // The equal-angle optimality residual vanishes at the minimizer.
        prop_assert!(a.residual.unwrap() <= 1e-6);
    }

    // ------------------------------------------------------------------
    // Metric ranges and the ordering chain
    // ------------------------------------------------------------------

    #[test]
    fn s_lies_in_unit_interval_and_is_symmetric((x, y) in disk_pair()) {
        let s = s_metric(&DISK, x, y).unwrap().value;
        let t = s_metric(&DISK, y, x).unwrap().value;
        prop_assert!(s > 0.0 && s <= 1.0);
        prop_assert!((s - t).abs() <= 1e-9 * s);
    }

    #[test]
    fn jstar_matches_its_definition((x, y) in disk_pair()) {
        let j = jstar(&DISK, x, y).unwrap().value;
        let d = x.dist(y);
        let m = (1.0 - x.abs()).min(1.0 - y.abs());
        prop_assert!((j - d / (d + 2.0 * m)).abs() <= 1e-15);
    }

    #[test]
    fn comparison_chain_holds((x, y) in disk_pair()) {
        let quarter = quarter_param(x, y).unwrap();
        let j = jstar(&DISK, x, y).unwrap().value;
        let s = s_metric(&DISK, x, y).unwrap().value;
        let p = point_pair(&DISK, x, y).unwrap().value;
        let half = tanh_half_rho(x, y).unwrap();
        prop_assert!(j >= quarter - 1e-10);
        prop_assert!(s >= j - 1e-10);
        prop_assert!(p >= s - 1e-10);
        prop_assert!(half >= p - 1e-10);
        prop_assert!(2.0 * quarter >= half - 1e-10);
    }

    #[test]
    fn barrlund_family_is_ordered_and_sandwiched((x, y) in disk_pair()) {
        let s = s_metric(&DISK, x, y).unwrap().value;
        let b1 = barrlund(&DISK, 1.0, x, y).unwrap().value;
        let b2 = barrlund(&DISK, 2.0, x, y).unwrap().value;
        let b3 = barrlund(&DISK, 3.0, x, y).unwrap().value;
        // p = 1 recovers s exactly: same boundary objective.
        prop_assert!((b1 - s).abs() <= 1e-9 * s);
        // The p-norm of the detour shrinks as p grows, so b_p grows.
        prop_assert!(b2 >= b1 - 1e-12);
        prop_assert!(b3 >= b2 - 1e-12);
        // Two-sided comparison with s at each exponent.
        prop_assert!(b2 <= 2f64.powf(0.5) * s + 1e-12);
        prop_assert!(b3 <= 2f64.powf(2.0 / 3.0) * s + 1e-12);
    }

    #[test]
    fn low_bounds_s_from_below((x, y) in punctured_pair()) {
        let lo = low(x, y).unwrap().value;
        let lo_sym = low(y, x).unwrap().value;
        let s = s_metric(&DomainSpec::PuncturedUnitDisk, x, y).unwrap().value;
        prop_assert!(lo > 0.0);
        prop_assert!((lo - lo_sym).abs() <= 1e-12 * lo);
        prop_assert!(s >= lo - 1e-9);
    }

    // ------------------------------------------------------------------
    // Hyperbolic geometry
    // ------------------------------------------------------------------

    #[test]
    fn ahlfors_bracket_ties_rho_to_the_chord((x, y) in disk_pair()) {
        let bracket = ahlfors_bracket(x, y).unwrap();
        let d = x.dist(y);
        let px = (1.0 - x.abs()) * (1.0 + x.abs());
        let py = (1.0 - y.abs()) * (1.0 + y.abs());
        // A^2 = |x-y|^2 + (1-|x|^2)(1-|y|^2).
        prop_assert!((bracket * bracket - (d * d + px * py)).abs() <= 1e-12);
        // th(rho/2) = |x-y| / A ties the distance to the bracket.
        let rho = rho_disk(x, y).unwrap();
        prop_assert!(((0.5 * rho).tanh() - d / bracket).abs() <= 1e-12);
        prop_assert!((tanh_half_rho(x, y).unwrap() - d / bracket).abs() <= 1e-12);
        // sh^2(rho/2) = |x-y|^2 / ((1-|x|^2)(1-|y|^2)).
        let sh = (0.5 * rho).sinh();
        let expect = d * d / (px * py);
        prop_assert!((sh * sh - expect).abs() <= 1e-9 * (1.0 + expect));
    }

    #[test]
    fn hyperbolic_midpoint_is_equidistant((x, y) in disk_pair()) {
        let q = hyperbolic_midpoint(x, y).unwrap();
        let rho = rho_disk(x, y).unwrap();
        let rx = rho_disk(x, q).unwrap();
        let ry = rho_disk(q, y).unwrap();
        prop_assert!((rx - ry).abs() <= 1e-9 * (1.0 + rho));
        prop_assert!((rx + ry - rho).abs() <= 1e-9 * (1.0 + rho));
    }

    #[test]
    fn hyperbolic_ball_converts_to_euclidean_ball(
        q in disk_point(),
        radius in 0.05..3.0f64,
        th in 0.0..TAU,
    ) {
        let ball = hyp_ball_to_euclidean(q, radius).unwrap();
        let p = ball.center_j + Point::polar(ball.radius_h, th);
        prop_assert!(p.abs() < 1.0);
        let back = rho_disk(q, p).unwrap();
        prop_assert!((back - radius).abs() <= 1e-9 * (1.0 + radius));
    }

    // ------------------------------------------------------------------
    // Euclidean rotation
    // ------------------------------------------------------------------

    #[test]
    fn euclidean_rotation_preserves_midpoint_and_radius((x, y) in disk_pair()) {
        let rot = euclidean_rotation(x, y).unwrap();
        let k = (x + y) * 0.5;
        prop_assert!((rot.k - k).abs() <= 1e-15);
        // Equal-modulus pair: same distance to the origin, same midpoint,
        // same half-chord.
        prop_assert!((rot.x0.abs() - rot.y0.abs()).abs() <= 1e-13);
        prop_assert!(((rot.x0 + rot.y0) * 0.5 - k).abs() <= 1e-13);
        prop_assert!((0.5 * rot.x0.dist(rot.y0) - rot.r).abs() <= 1e-13);
        if let Some(x1) = rot.x1 {
            prop_assert!(((x1 + rot.y1) * 0.5 - k).abs() <= 1e-13);
            prop_assert!((0.5 * x1.dist(rot.y1) - rot.r).abs() <= 1e-13);
            prop_assert!(x1.abs() < 1.0);
        }
    }

    #[test]
    fn euclidean_bounds_sandwich_s((x, y) in disk_pair()) {
        let s = s_metric(&DISK, x, y).unwrap().value;
        let b = euclidean_bounds(x, y).unwrap();
        prop_assert!(b.lower >= b.lower_closed - 1e-12);
        prop_assert!(s >= b.lower - 1e-9);
        prop_assert!(s <= b.upper_closed + 1e-9);
        if let Some(upper) = b.upper {
            prop_assert!(s <= upper + 1e-9);
            prop_assert!((upper - b.upper_closed).abs() <= 1e-15);
        }
    }

    #[test]
    fn pullup_keeps_chord_and_raises_s((x, y) in disk_pair()) {
        prop_assume!(!x.is_zero() && !y.is_zero() && y.abs() <= x.abs());
        prop_assume!(x.cross(y).abs() > 1e-9);
        let up = same_radius_pullup(x, y).unwrap();
        prop_assert!((up.abs() - x.abs()).abs() <= 1e-12);
        prop_assert!((x.dist(up) - x.dist(y)).abs() <= 1e-12);
        let before = s_metric(&DISK, x, y).unwrap().value;
        let after = s_metric(&DISK, x, up).unwrap().value;
        prop_assert!(after >= before - 1e-9);
    }

    // ------------------------------------------------------------------
    // Hyperbolic rotation
    // ------------------------------------------------------------------

    #[test]
    fn hyperbolic_rotation_lands_on_its_circle((x, y) in disk_pair()) {
        let rot = hyperbolic_rotation(x, y).unwrap();
        for pt in [rot.x2, rot.y2, rot.x3, rot.y3] {
            prop_assert!(pt.abs() < 1.0);
            prop_assert!((pt.dist(rot.j) - rot.h).abs() <= 1e-12);
        }
        prop_assert!((rot.x2.abs() - rot.y2.abs()).abs() <= 1e-12);
        // x3, y3 and the origin are collinear.
        prop_assert!(rot.x3.cross(rot.y3).abs() <= 1e-12);
        // All rotated points stay at hyperbolic distance rho/2 from q.
        let rho = rho_disk(x, y).unwrap();
        for pt in [rot.x2, rot.y2, rot.x3, rot.y3] {
            let d = rho_disk(rot.q, pt).unwrap();
            prop_assert!((d - 0.5 * rho).abs() <= 1e-8 * (1.0 + rho));
        }
    }

    #[test]
    fn hyperbolic_bounds_sandwich_s((x, y) in disk_pair()) {
        let s = s_metric(&DISK, x, y).unwrap().value;
        let b = hyperbolic_bounds(x, y).unwrap();
        prop_assert!(s >= b.lower - 1e-9);
        prop_assert!(s <= b.upper + 1e-9);
        // The hyperbolic sandwich sits inside the Euclidean one.
        let e = euclidean_bounds(x, y).unwrap();
        prop_assert!(b.lower >= e.lower - 1e-9);
        prop_assert!(b.upper <= e.upper_closed + 1e-9);
    }

    #[test]
    fn pencil_point_lies_on_both_lines((x, y) in disk_pair()) {
        prop_assume!(x.cross(y).abs() > 1e-6);
        let p = common_pencil_point(x, y).unwrap();
        let q = hyperbolic_midpoint(x, y).unwrap();
        // On the line through x and y...
        let along = (p - x).cross(y - x).abs();
        prop_assert!(along <= 1e-9 * (1.0 + p.abs()) * x.dist(y));
        // ...and on the line through the origin and q.
        prop_assert!(p.cross(q).abs() <= 1e-9 * (1.0 + p.abs()) * q.abs());
    }

    // ------------------------------------------------------------------
    // Ball diameter
    // ------------------------------------------------------------------

    #[test]
    fn ball_diameter_is_attained_radially(
        c in disk_point(),
        frac in 0.1..0.9f64,
        th in 0.0..TAU,
        t in -1.0..1.0f64,
    ) {
        let radius = frac * (1.0 - c.abs());
        let diam = ball_s_diameter(&DISK, c, radius).unwrap();
        // Radial antipodal pair attains the supremum.
        let axis = if c.is_zero() { Point::ONE } else { c.unit() };
        let attained = s_metric(&DISK, c + axis * radius, c - axis * radius)
            .unwrap()
            .value;
        prop_assert!((attained - diam).abs() <= 1e-9);
        // Any chord through the center stays below it.
        let dir = Point::polar(1.0, th);
        let chord = s_metric(&DISK, c + dir * (radius * t), c - dir * radius).unwrap().value;
        prop_assert!(chord <= diam + 1e-9);
    }

    // ------------------------------------------------------------------
    // Holder bounds and the validation maps
    // ------------------------------------------------------------------

    #[test]
    fn holder_bound_is_monotone_in_s(
        s1 in 0.0..1.0f64,
        s2 in 0.0..1.0f64,
        k in 1.0..8.0f64,
    ) {
        let (lo, hi) = if s1 <= s2 { (s1, s2) } else { (s2, s1) };
        prop_assert!(holder_bound(lo, k).unwrap() <= holder_bound(hi, k).unwrap() + 1e-15);
    }

    #[test]
    fn holder_best_is_min_of_valid_bounds((x, y) in disk_pair(), k in 1.0..6.0f64) {
        let r_cap = 0.5 * (x + y).abs() + 0.01;
        let rep = holder_variants(x, y, k, Some(r_cap.min(0.999))).unwrap();
        // The main bound is exactly holder_bound(s).
        prop_assert!((rep.thm_main - holder_bound(rep.s, k).unwrap()).abs() <= 1e-15);
        let aligned_valid = x.dist(y) <= 2.0 - (x + y).abs();
        let mut expect = f64::INFINITY;
        for b in [
            Some(rep.thm_main),
            Some(rep.cor_p),
            aligned_valid.then_some(rep.cor_collinear),
            Some(rep.cor_hyp),
            rep.cor_radial,
            rep.cor_unit,
        ]
        .into_iter()
        .flatten()
        {
            expect = expect.min(b);
        }
        prop_assert_eq!(rep.best, expect);
        prop_assert_eq!(rep.vacuous, rep.best > 2.0);
    }

    #[test]
    fn mobius_automorphism_preserves_hyperbolic_distance(
        (x, y) in disk_pair(),
        a in disk_point(),
        phase in 0.0..TAU,
    ) {
        let map = TestMap::MobiusAutomorphism { a, phase };
        let fx = apply_test_map(&map, x).unwrap();
        let fy = apply_test_map(&map, y).unwrap();
        prop_assert!(fx.abs() < 1.0 && fy.abs() < 1.0);
        let before = rho_disk(x, y).unwrap();
        let after = rho_disk(fx, fy).unwrap();
        prop_assert!((before - after).abs() <= 1e-9 * (1.0 + before));
    }

    #[test]
    fn radial_stretch_takes_kth_root_of_modulus(z in disk_point(), k in 1.0..6.0f64) {
        prop_assume!(z.abs() > 1e-6);
        let map = TestMap::RadialStretch { k };
        let fz = apply_test_map(&map, z).unwrap();
        prop_assert!((fz.abs() - z.abs().powf(1.0 / k)).abs() <= 1e-12);
        // The argument is unchanged.
        prop_assert!(fz.cross(z).abs() <= 1e-12);
        prop_assert!(fz.dot(z) >= 0.0);
    }

    #[test]
    fn holder_bounds_dominate_the_conformal_witness(
        (x, y) in disk_pair(),
        a in disk_point(),
        phase in 0.0..TAU,
    ) {
        // A conformal automorphism is 1-quasiconformal, so every valid
        // K = 1 bound must dominate the displacement it produces.
        let map = TestMap::MobiusAutomorphism { a, phase };
        let moved = apply_test_map(&map, x)
            .unwrap()
            .dist(apply_test_map(&map, y).unwrap());
        let rep = holder_variants(x, y, 1.0, None).unwrap();
        prop_assert!(moved <= rep.thm_main + 1e-12);
        prop_assert!(moved <= rep.cor_p + 1e-12);
        prop_assert!(moved <= rep.cor_hyp + 1e-12);
        prop_assert!(moved <= rep.best + 1e-12);
        if x.dist(y) <= 2.0 - (x + y).abs() {
            prop_assert!(moved <= rep.cor_collinear + 1e-12);
        }
        if let Some(unit) = rep.cor_unit {
            prop_assert!(moved <= unit + 1e-12);
        }
    }
}

// Oracle comparisons are expensive; run fewer, deeper cases.
proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn solver_agrees_with_brute_force_oracle((x, y) in disk_pair()) {
        let solved = boundary_infimum(&DISK, x, y).unwrap().value;
        let oracle = oracle_boundary_infimum(&DISK, x, y, 4096).unwrap();
        prop_assert!((solved - oracle).abs() <= 1e-8 * oracle);
        // The solver never reports a value above the oracle's (both search
        // the same objective; the solver refines further).
        prop_assert!(solved <= oracle + 1e-10);
    }

    #[test]
    fn half_plane_solver_agrees_with_oracle(
        xr in -2.0..2.0f64, xi in 0.05..2.0f64,
        yr in -2.0..2.0f64, yi in 0.05..2.0f64,
    ) {
        let h = DomainSpec::UpperHalfPlane;
        let x = Point::new(xr, xi);
        let y = Point::new(yr, yi);
        prop_assume!(x.dist(y) > 1e-6);
        let solved = boundary_infimum(&h, x, y).unwrap().value;
        let oracle = oracle_boundary_infimum(&h, x, y, 4096).unwrap();
        prop_assert!((solved - oracle).abs() <= 1e-8 * oracle);
    }
}
