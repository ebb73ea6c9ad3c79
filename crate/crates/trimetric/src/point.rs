//! Plane points with complex-number arithmetic.
//!
//! A [`Point`] is used both as a point of R^2 and as the complex number
//! `re + i*im`; the metric formulas need both views (dot/cross products for
//! angles, complex products for rotations and Mobius maps).

use serde::Serialize;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A point of the plane / complex number `re + i*im`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Point {
    pub re: f64,
    pub im: f64,
}

impl Point {
    pub const ZERO: Point = Point { re: 0.0, im: 0.0 };
    pub const ONE: Point = Point { re: 1.0, im: 0.0 };
    pub const I: Point = Point { re: 0.0, im: 1.0 };

    pub const fn new(re: f64, im: f64) -> Point {
        Point { re, im }
    }

    /// `r * e^{i*theta}`.
    pub fn polar(r: f64, theta: f64) -> Point {
        Point::new(r * theta.cos(), r * theta.sin())
    }

    /// Euclidean norm `|z|`.
    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    /// `|z|^2`, cheaper and exact-ish for comparisons.
    pub fn abs_sq(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    /// Principal argument in (-pi, pi].
    pub fn arg(self) -> f64 {
        self.im.atan2(self.re)
    }

    /// Complex conjugate.
    pub fn conj(self) -> Point {
        Point::new(self.re, -self.im)
    }

    /// Inner product of the R^2 vectors.
    pub fn dot(self, other: Point) -> f64 {
        self.re * other.re + self.im * other.im
    }

    /// z-component of the cross product; positive when `other` lies
    /// counterclockwise from `self`.
    pub fn cross(self, other: Point) -> f64 {
        self.re * other.im - self.im * other.re
    }

    /// `|self - other|`.
    pub fn dist(self, other: Point) -> f64 {
        (self - other).abs()
    }

    /// Unit vector in the direction of `self`; caller guarantees `self != 0`.
    pub fn unit(self) -> Point {
        let a = self.abs();
        Point::new(self.re / a, self.im / a)
    }

    /// Counterclockwise quarter turn, `i*z`.
    pub fn perp(self) -> Point {
        Point::new(-self.im, self.re)
    }

    /// Inversion in the unit circle, `z / |z|^2`; caller guarantees `self != 0`.
    pub fn circle_inverse(self) -> Point {
        let d = self.abs_sq();
        Point::new(self.re / d, self.im / d)
    }

    /// Scalar multiple.
    pub fn scale(self, s: f64) -> Point {
        Point::new(self.re * s, self.im * s)
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn is_zero(self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.re - o.re, self.im - o.im)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.re, -self.im)
    }
}

/// Complex product.
impl Mul for Point {
    type Output = Point;
    fn mul(self, o: Point) -> Point {
        Point::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        self.scale(s)
    }
}

impl Mul<Point> for f64 {
    type Output = Point;
    fn mul(self, p: Point) -> Point {
        p.scale(self)
    }
}

/// Complex quotient; caller guarantees `o != 0`.
impl Div for Point {
    type Output = Point;
    fn div(self, o: Point) -> Point {
        let d = o.abs_sq();
        Point::new(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )
    }
}

impl fmt::Display for Point {
    /// Complex-literal form accepted back by the CLI parser, e.g. `0.3-0.4i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im >= 0.0 || self.im.is_nan() {
            write!(f, "{}+{}i", self.re, self.im)
        } else {
            write!(f, "{}{}i", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_product_and_quotient_invert() {
        let a = Point::new(0.3, -0.7);
        let b = Point::new(-1.2, 0.4);
        let q = (a * b) / b;
        assert!((q - a).abs() < 1e-15);
    }

    #[test]
    fn perp_is_quarter_turn() {
        let a = Point::new(0.3, -0.7);
        assert_eq!(a.perp(), Point::I * a);
        assert!(a.dot(a.perp()).abs() < 1e-18);
    }

    #[test]
    fn circle_inverse_fixes_unit_circle() {
        let u = Point::polar(1.0, 0.9);
        assert!((u.circle_inverse() - u).abs() < 1e-15);
        let z = Point::new(0.5, 0.0);
        assert_eq!(z.circle_inverse(), Point::new(2.0, 0.0));
    }

    #[test]
    fn display_roundtrips_sign() {
        assert_eq!(Point::new(0.5, -0.25).to_string(), "0.5-0.25i");
        assert_eq!(Point::new(-1.0, 2.0).to_string(), "-1+2i");
    }
}
