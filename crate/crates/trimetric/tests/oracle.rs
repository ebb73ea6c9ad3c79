//! Frozen expected values for the boundary-infimum oracle and cross-checks of
//! every closed form in the production solver against the dense-scan oracle.
//!
//! These tests pin the numerical targets first; the rest of the library is
//! validated against them.

use trimetric::domain::{DomainSpec, Polygon};
use trimetric::infimum::Method;
use trimetric::{boundary_infimum, oracle_boundary_infimum, Point};

const DISK: DomainSpec = DomainSpec::UnitDisk;

fn square() -> DomainSpec {
    DomainSpec::ConvexPolygon(
        Polygon::new(vec![
            Point::new(-1.0, -1.0),
            Point::new(1.0, -1.0),
            Point::new(1.0, 1.0),
            Point::new(-1.0, 1.0),
        ])
        .unwrap(),
    )
}

#[test]
fn oracle_disk_frozen_values() {
    // Collinear pair (0, 0.5): infimum 2 - |x+y| = 1.5 at z = 1.
    let v = oracle_boundary_infimum(&DISK, Point::ZERO, Point::new(0.5, 0.0), 1024).unwrap();
    assert!((v - 1.5).abs() < 1e-12, "got {v}");

    // Conjugate pair 0.2 +/- 0.6i (outside case): s = sqrt(0.4),
    // infimum = 1.2 / sqrt(0.4) = 1.8973665961010278.
    let x = Point::new(0.2, 0.6);
    let v = oracle_boundary_infimum(&DISK, x, x.conj(), 2048).unwrap();
    assert!((v - 1.897_366_596_101_027_8).abs() < 1e-10, "got {v}");

    // Conjugate pair 0.6 +/- 0.2i (inside case): s = 0.2/sqrt(0.2),
    // infimum = 0.4 / s = 2 * sqrt(0.2) = 0.8944271909999159.
    let x = Point::new(0.6, 0.2);
    let v = oracle_boundary_infimum(&DISK, x, x.conj(), 2048).unwrap();
    assert!((v - 0.894_427_190_999_915_9).abs() < 1e-10, "got {v}");
}

#[test]
fn oracle_half_plane_frozen_value() {
    // (i, 1+i): reflection gives |i - (1 - i)| = sqrt(5), minimizer 0.5.
    let v = oracle_boundary_infimum(
        &DomainSpec::UpperHalfPlane,
        Point::I,
        Point::new(1.0, 1.0),
        1024,
    )
    .unwrap();
    assert!((v - 5.0f64.sqrt()).abs() < 1e-10, "got {v}");
}

#[test]
fn oracle_square_frozen_value() {
    // Square [-1,1]^2, pair (-0.5, 0) and (0.5, 0): the straight path through
    // a side wall costs |x-z| + |z-y| = 0.5 + 1.5 = 2, beating the bottom- or
    // top-edge reflection sqrt(1 + 4) = sqrt(5) ~ 2.236.
    let v = oracle_boundary_infimum(&square(), Point::new(-0.5, 0.0), Point::new(0.5, 0.0), 4096)
        .unwrap();
    assert!((v - 2.0).abs() < 1e-10, "got {v}");

    // Asymmetric pair, hand value via reflection across the right edge
    // (x = 1): reflect y = (0.7, 0.1) to (1.3, 0.1); value = |(0.5,0.3)-(1.3,0.1)|
    // = sqrt(0.64 + 0.04) = sqrt(0.68). Bottom/top edges give at least
    // sqrt(0.04 + (0.3+0.9)^2) > sqrt(0.68); left edge is farther still.
    let v = oracle_boundary_infimum(&square(), Point::new(0.5, 0.3), Point::new(0.7, 0.1), 4096)
        .unwrap();
    assert!((v - 0.68f64.sqrt()).abs() < 1e-10, "got {v}");
}

#[test]
fn oracle_punctured_disk_takes_origin_shortcut() {
    let d = DomainSpec::PuncturedUnitDisk;
    let x = Point::new(0.1, 0.0);
    let y = Point::new(0.0, 0.1);
    let v = oracle_boundary_infimum(&d, x, y, 1024).unwrap();
    assert!((v - 0.2).abs() < 1e-14, "got {v}");
}

#[test]
fn oracle_point_complement_is_exact() {
    let d = DomainSpec::PointComplement(Point::new(3.0, 4.0));
    let v = oracle_boundary_infimum(&d, Point::ZERO, Point::new(6.0, 8.0), 1024).unwrap();
    assert!((v - 10.0).abs() < 1e-14);
}

#[test]
fn solver_closed_forms_agree_with_oracle_on_a_grid() {
    // Sweep of collinear and equal-modulus pairs: every closed-form branch of
    // the production solver must match the independent dense scan.
    let mut checked_closed = 0;
    for i in 1..8 {
        for j in 1..8 {
            let a = -0.9 + 0.25 * i as f64;
            let b = -0.9 + 0.25 * j as f64;
            if (a - b).abs() < 1e-9 {
                continue;
            }
            // Collinear pair on a tilted diameter.
            let dir = Point::polar(1.0, 0.7);
            let (x, y) = (dir * a, dir * b);
            let got = boundary_infimum(&DISK, x, y).unwrap();
            let want = oracle_boundary_infimum(&DISK, x, y, 4096).unwrap();
            assert_eq!(got.method, Method::ClosedForm);
            assert!(
                (got.value - want).abs() <= 1e-9 * want,
                "collinear a={a} b={b}: solver {} vs oracle {want}",
                got.value
            );
            checked_closed += 1;
        }
    }
    for i in 0..12 {
        for r in [0.15, 0.45, 0.75, 0.92] {
            let half_angle = 0.12 + 0.23 * i as f64;
            let x = Point::polar(r, half_angle);
            let y = Point::polar(r, -half_angle);
            if x.dist(y) < 1e-9 {
                continue;
            }
            let got = boundary_infimum(&DISK, x, y).unwrap();
            let want = oracle_boundary_infimum(&DISK, x, y, 4096).unwrap();
            assert_eq!(got.method, Method::ClosedForm);
            assert!(
                (got.value - want).abs() <= 1e-9 * want,
                "conjugate r={r} angle={half_angle}: solver {} vs oracle {want}",
                got.value
            );
            checked_closed += 1;
        }
    }
    assert!(checked_closed > 60);
}

#[test]
fn solver_numeric_path_agrees_with_oracle() {
    let pairs = [
        (Point::new(0.3, 0.1), Point::new(-0.2, 0.55)),
        (Point::new(0.8, 0.05), Point::new(0.1, -0.6)),
        (Point::new(-0.45, -0.3), Point::new(0.2, 0.7)),
        (Point::new(0.05, 0.9), Point::new(0.12, 0.2)),
    ];
    for (x, y) in pairs {
        let got = boundary_infimum(&DISK, x, y).unwrap();
        assert_eq!(got.method, Method::Numeric);
        let want = oracle_boundary_infimum(&DISK, x, y, 8192).unwrap();
        assert!(
            (got.value - want).abs() <= 1e-9 * want,
            "pair ({x}, {y}): solver {} vs oracle {want}",
            got.value
        );
        // The equal-angle condition certifies the minimizer.
        assert!(got.residual.unwrap() < 1e-6);
        // The reported value is realized by the reported minimizer.
        let via = x.dist(got.minimizer) + got.minimizer.dist(y);
        assert!((via - got.value).abs() < 1e-12);
    }
}

#[test]
fn oracle_and_solver_agree_on_reflection_domains() {
    let hp = DomainSpec::UpperHalfPlane;
    let pairs = [
        (Point::new(-2.0, 0.4), Point::new(3.0, 2.5)),
        (Point::new(0.0, 1e-4), Point::new(0.1, 2.0)),
        (Point::new(5.0, 3.0), Point::new(5.0, 0.5)),
    ];
    for (x, y) in pairs {
        let got = boundary_infimum(&hp, x, y).unwrap().value;
        let want = oracle_boundary_infimum(&hp, x, y, 8192).unwrap();
        assert!(
            (got - want).abs() <= 1e-9 * want,
            "({x},{y}): {got} vs {want}"
        );
    }
    let sq = square();
    let pairs = [
        (Point::new(-0.5, 0.0), Point::new(0.5, 0.0)),
        (Point::new(0.9, 0.9), Point::new(-0.9, 0.2)),
        (Point::new(0.1, -0.8), Point::new(0.3, -0.75)),
    ];
    for (x, y) in pairs {
        let got = boundary_infimum(&sq, x, y).unwrap().value;
        let want = oracle_boundary_infimum(&sq, x, y, 8192).unwrap();
        assert!(
            (got - want).abs() <= 1e-9 * want,
            "({x},{y}): {got} vs {want}"
        );
    }
}
