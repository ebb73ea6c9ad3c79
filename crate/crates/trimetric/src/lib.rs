//! Triangular ratio metric and companion point-pair metrics on proper planar
//! domains, with rotation-based two-sided bounds, Holder continuity bounds for
//! quasiconformal maps, sharpness probes, and a seeded verification harness.
//!
//! The central quantity is
//! `s_G(x, y) = |x - y| / inf_{z on boundary}(|x - z| + |z - y|)`,
//! computed by closed forms where available and by a validated boundary scan
//! otherwise. An independent high-resolution oracle
//! ([`oracle_boundary_infimum`]) backs every closed form with a brute-force
//! cross-check.

pub mod domain;
pub mod error;
pub mod harness;
pub mod holder;
pub mod hyperbolic;
pub mod infimum;
pub mod metrics;
pub mod minimize;
pub mod point;
pub mod report;
pub mod rotations;

pub use domain::{DomainSpec, Polygon, INTERIOR_MARGIN};
pub use error::{Error, Result};
pub use harness::{conjecture_scan, run_all, run_suite, sharpness_probe, SuiteConfig, SuiteKind};
pub use holder::{apply_test_map, holder_bound, holder_variants, HolderReport, TestMap};
pub use infimum::{
    bisector_residual, boundary_infimum, oracle_boundary_infimum, InfimumResult, Method,
};
pub use metrics::{
    ball_s_diameter, barrlund, jstar, low, point_pair, s_metric, starlike_upper_bound, MetricValue,
};
pub use point::Point;
pub use rotations::{
    common_pencil_point, euclidean_bounds, euclidean_rotation, hyperbolic_bounds,
    hyperbolic_rotation, same_radius_pullup, EuclideanBounds, EuclideanRotation, HyperbolicBounds,
    HyperbolicRotation,
};
