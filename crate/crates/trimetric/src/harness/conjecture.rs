//! Randomized scan of the open rotation-comparison conjecture.
//!
//! For a pair (x, y) in the unit disk, the two rotation constructions yield
//! four closed-form metric values: the Euclidean-midpoint rotation gives
//! s0 = s(x0, y0) (a proven lower bound for s(x, y)) and, when the radial
//! pair stays inside, s1 = s(x1, y1) (a proven upper bound); the
//! hyperbolic-midpoint rotation gives s2 = s(x2, y2) and s3 = s(x3, y3),
//! again a lower and an upper bound. The scan tests whether the hyperbolic
//! construction always improves on the Euclidean one:
//!
//! * `lower-improves`:  s2 >= s0
//! * `upper-improves`:  s1 >= s3   (only when x1 exists)
//! * `p-dominates-s3`:  p(x, y) >= s3
//!
//! A counterexample here is a finding, not a failure: the report records it
//! with full coordinates so it can be replayed, and `holds` turns false.

use super::sampling::{chunk_layout, PairSampler, Uniform01, CHUNK, SAMPLING_DOC};
use crate::domain::DomainSpec;
use crate::error::Result;
use crate::metrics::point_pair;
use crate::point::Point;
use crate::rotations::{euclidean_bounds, hyperbolic_bounds};
use rayon::prelude::*;
use serde::Serialize;
use std::time::Instant;

/// Slack below which a comparison counts as a counterexample.
pub const CONJECTURE_THRESHOLD: f64 = 1e-9;

/// At most this many counterexamples are kept per claim.
pub const COUNTEREXAMPLE_CAP: usize = 100;

/// A pair on which a claim failed by more than the threshold.
#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub x: Point,
    pub y: Point,
    /// Right-hand side minus left-hand side; negative beyond the threshold.
    pub slack: f64,
    pub detail: String,
}

/// Outcome for one claim.
#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub id: &'static str,
    pub statement: &'static str,
    pub evaluations: u64,
    pub min_slack: Option<f64>,
    pub counterexamples: Vec<Counterexample>,
    pub counterexamples_truncated: u64,
    pub holds: bool,
}

/// Outcome of a conjecture scan.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub samples: u64,
    pub seed: u64,
    pub threshold: f64,
    pub sampling: &'static str,
    pub claims: Vec<ClaimReport>,
    pub all_hold: bool,
    pub runtime_seconds: f64,
}

const CLAIMS: [(&str, &str); 3] = [
    (
        "lower-improves",
        "the hyperbolic-rotation lower bound is at least the Euclidean-rotation lower bound (s2 >= s0)",
    ),
    (
        "upper-improves",
        "when the Euclidean radial pair exists, its value dominates the hyperbolic one (s1 >= s3)",
    ),
    (
        "p-dominates-s3",
        "the point-pair metric dominates the hyperbolic-rotation upper bound (p >= s3)",
    ),
];

#[derive(Clone)]
struct ClaimAcc {
    evaluations: u64,
    min_slack: f64,
    counterexamples: Vec<Counterexample>,
    truncated: u64,
}

impl ClaimAcc {
    fn new() -> Self {
        ClaimAcc {
            evaluations: 0,
            min_slack: f64::INFINITY,
            counterexamples: Vec::new(),
            truncated: 0,
        }
    }

    fn record(&mut self, x: Point, y: Point, slack: f64, detail: impl FnOnce() -> String) {
        self.evaluations += 1;
        if slack < self.min_slack {
            self.min_slack = slack;
        }
        if slack < -CONJECTURE_THRESHOLD {
            if self.counterexamples.len() < COUNTEREXAMPLE_CAP {
                self.counterexamples.push(Counterexample {
                    x,
                    y,
                    slack,
                    detail: detail(),
                });
            } else {
                self.truncated += 1;
            }
        }
    }

    fn merge(&mut self, other: ClaimAcc) {
        self.evaluations += other.evaluations;
        if other.min_slack < self.min_slack {
            self.min_slack = other.min_slack;
        }
        self.truncated += other.truncated;
        for c in other.counterexamples {
            if self.counterexamples.len() < COUNTEREXAMPLE_CAP {
                self.counterexamples.push(c);
            } else {
                self.truncated += 1;
            }
        }
    }
}

/// Scans the three rotation-comparison claims over seeded disk pairs.
pub fn conjecture_scan(samples: u64, seed: u64) -> Result<ConjectureReport> {
    let start = Instant::now();
    let domain = DomainSpec::UnitDisk;
    let accs = chunk_layout(samples.max(1))
        .into_par_iter()
        .map(|(chunk, count)| {
            let mut u = Uniform01::for_chunk(seed, chunk);
            let sampler = PairSampler::new(&domain).expect("disk sampling is supported");
            let mut accs = [ClaimAcc::new(), ClaimAcc::new(), ClaimAcc::new()];
            for i in 0..count {
                let _global = chunk * CHUNK + i;
                let (x, y) = sampler.pair(&mut u);
                scan_pair(&mut accs, x, y);
            }
            accs
        })
        .reduce(
            || [ClaimAcc::new(), ClaimAcc::new(), ClaimAcc::new()],
            |mut a, b| {
                let [b0, b1, b2] = b;
                a[0].merge(b0);
                a[1].merge(b1);
                a[2].merge(b2);
                a
            },
        );

    let claims: Vec<ClaimReport> = CLAIMS
        .iter()
        .zip(accs)
        .map(|(&(id, statement), acc)| ClaimReport {
            id,
            statement,
            evaluations: acc.evaluations,
            min_slack: (acc.evaluations > 0).then_some(acc.min_slack),
            holds: acc.counterexamples.is_empty() && acc.truncated == 0,
            counterexamples: acc.counterexamples,
            counterexamples_truncated: acc.truncated,
        })
        .collect();
    let all_hold = claims.iter().all(|c| c.holds);
    Ok(ConjectureReport {
        samples: samples.max(1),
        seed,
        threshold: CONJECTURE_THRESHOLD,
        sampling: SAMPLING_DOC,
        claims,
        all_hold,
        runtime_seconds: start.elapsed().as_secs_f64(),
    })
}

/// Evaluates the three claims on one explicit pair, for reproducing scan
/// findings. The second slack is `None` when the Euclidean radial pair does
/// not exist (no claim to test).
pub fn conjecture_pair(x: Point, y: Point) -> Result<[(&'static str, Option<f64>); 3]> {
    let eb = euclidean_bounds(x, y)?;
    let hb = hyperbolic_bounds(x, y)?;
    let p = point_pair(&DomainSpec::UnitDisk, x, y)?.value;
    Ok([
        (CLAIMS[0].0, Some(hb.lower - eb.lower)),
        (CLAIMS[1].0, eb.upper.map(|s1| s1 - hb.upper)),
        (CLAIMS[2].0, Some(p - hb.upper)),
    ])
}

fn scan_pair(accs: &mut [ClaimAcc; 3], x: Point, y: Point) {
    let expect = "conjecture scan on sampled interior pair";
    let eb = euclidean_bounds(x, y).expect(expect);
    let hb = hyperbolic_bounds(x, y).expect(expect);
    let p = point_pair(&DomainSpec::UnitDisk, x, y).expect(expect).value;
    let (s0, s2, s3) = (eb.lower, hb.lower, hb.upper);
    accs[0].record(x, y, s2 - s0, || format!("s2 = {s2:.17e}, s0 = {s0:.17e}"));
    if let Some(s1) = eb.upper {
        accs[1].record(x, y, s1 - s3, || format!("s1 = {s1:.17e}, s3 = {s3:.17e}"));
    }
    accs[2].record(x, y, p - s3, || format!("p = {p:.17e}, s3 = {s3:.17e}"));
}
