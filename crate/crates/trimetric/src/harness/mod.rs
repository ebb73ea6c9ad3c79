//! Randomized verification harness: seeded deterministic sampling, the
//! inequality suites, sharpness probes, and the rotation-comparison
//! conjecture scan.

pub mod conjecture;
pub mod probes;
pub mod sampling;
pub mod suites;

pub use conjecture::{conjecture_pair, conjecture_scan, ConjectureReport, CONJECTURE_THRESHOLD};
pub use probes::{sharpness_probe, ProbeRow, PROBE_IDS};
pub use sampling::{PairSampler, Uniform01};
pub use suites::{registry, run_all, run_suite, SuiteConfig, SuiteKind, SuiteReport};
