//! Randomized verification suites.
//!
//! Each suite draws seeded interior point pairs from its natural domain and
//! evaluates a fixed set of inequality checks. Every check belongs to exactly
//! one named invariant; [`registry`] is the single source of truth for that
//! mapping and is pinned by a unit test. Checks record a signed slack
//! (right-hand side minus left-hand side, or minus the error for
//! equality-style checks); a slack below the check's tolerance is a
//! violation, a slack in `[-tolerance, 0)` is counted as numerical noise.

use super::sampling::{chunk_layout, PairSampler, Uniform01, CHUNK, SAMPLING_DOC};
use crate::domain::DomainSpec;
use crate::error::{Error, Result};
use crate::holder::{apply_test_map, holder_variants, TestMap};
use crate::hyperbolic::{hyperbolic_midpoint, quarter_param, tanh_half_rho};
use crate::metrics::{ball_s_diameter, barrlund, jstar, low, point_pair, s_metric};
use crate::point::Point;
use crate::rotations::{
    euclidean_bounds, euclidean_rotation, hyperbolic_bounds, hyperbolic_rotation,
};
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::{FRAC_PI_2, SQRT_2, TAU};
use std::time::Instant;

/// The verification suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteKind {
    Chain,
    Barrlund,
    Low,
    RotationEuclidean,
    RotationHyperbolic,
    Holder,
}

pub const ALL_SUITES: [SuiteKind; 6] = [
    SuiteKind::Chain,
    SuiteKind::Barrlund,
    SuiteKind::Low,
    SuiteKind::RotationEuclidean,
    SuiteKind::RotationHyperbolic,
    SuiteKind::Holder,
];

impl SuiteKind {
    pub fn name(&self) -> &'static str {
        match self {
            SuiteKind::Chain => "chain",
            SuiteKind::Barrlund => "barrlund",
            SuiteKind::Low => "low",
            SuiteKind::RotationEuclidean => "rotation-euclidean",
            SuiteKind::RotationHyperbolic => "rotation-hyperbolic",
            SuiteKind::Holder => "holder",
        }
    }

    pub fn parse(name: &str) -> Option<SuiteKind> {
        ALL_SUITES.iter().copied().find(|s| s.name() == name)
    }

    /// The domain whose sampling rule the suite's inequalities assume.
    pub fn natural_domain(&self) -> DomainSpec {
        match self {
            SuiteKind::Low => DomainSpec::PuncturedUnitDisk,
            _ => DomainSpec::UnitDisk,
        }
    }

    /// What `max_ratio_observed` tracks for this suite.
    pub fn ratio_doc(&self) -> &'static str {
        match self {
            SuiteKind::Chain => "max of s/th(rho/4), sharp constant 2",
            SuiteKind::Barrlund => "max of p/b_2, sharp constant (sqrt(10)+sqrt(2))/4",
            SuiteKind::Low => "max of (s/low)*(2r/(1+r)) with r = max(|x|,|y|), sharp constant 1",
            SuiteKind::RotationEuclidean => "max of s/lower-bound",
            SuiteKind::RotationHyperbolic => "max of upper-bound/lower-bound",
            SuiteKind::Holder => "max of |f(x)-f(y)|/main-bound over the conformal witnesses",
        }
    }
}

/// One inequality check: its id, owning suite, the named invariant it
/// verifies, an optional pinned tolerance (otherwise the run's tolerance
/// applies), and whether it is monitored-only (recorded, never failing).
#[derive(Clone, Copy, Debug)]
pub struct CheckDef {
    pub id: &'static str,
    pub suite: SuiteKind,
    pub invariant: &'static str,
    pub tolerance: Option<f64>,
    pub monitored: bool,
}

const fn check(
    id: &'static str,
    suite: SuiteKind,
    invariant: &'static str,
    tolerance: Option<f64>,
) -> CheckDef {
    CheckDef {
        id,
        suite,
        invariant,
        tolerance,
        monitored: false,
    }
}

/// Every suite check, in report order. The `invariant` strings name the
/// library-level properties one-to-one; check ids refine them.
pub fn registry() -> &'static [CheckDef] {
    use SuiteKind::*;
    const REGISTRY: &[CheckDef] = &[
        // chain: th(rho/4) <= j* <= s <= p <= th(rho/2) <= 2 th(rho/4).
        check(
            "chain-quarter-le-jstar",
            Chain,
            "metrics:chain",
            Some(1e-10),
        ),
        check("chain-jstar-le-s", Chain, "metrics:chain", Some(1e-10)),
        check("chain-s-le-p", Chain, "metrics:chain", Some(1e-10)),
        check("chain-p-le-half", Chain, "metrics:chain", Some(1e-10)),
        check(
            "chain-half-le-twice-quarter",
            Chain,
            "metrics:chain",
            Some(1e-10),
        ),
        check("ray-monotone", Chain, "metrics:ray-monotonicity", None),
        check("ball-radius-cap", Chain, "metrics:ball-radius-cap", None),
        check(
            "ball-diameter-sup",
            Chain,
            "metrics:ball-diameter-attained",
            Some(1e-9),
        ),
        check(
            "ball-diameter-attained",
            Chain,
            "metrics:ball-diameter-attained",
            Some(1e-9),
        ),
        // barrlund: s <= b_p <= 2^{1-1/p} s and the sharp disk constants.
        check(
            "barrlund-lower-p1",
            Barrlund,
            "metrics:barrlund-sandwich",
            None,
        ),
        check(
            "barrlund-upper-p1",
            Barrlund,
            "metrics:barrlund-sandwich",
            None,
        ),
        check(
            "barrlund-lower-p2",
            Barrlund,
            "metrics:barrlund-sandwich",
            None,
        ),
        check(
            "barrlund-upper-p2",
            Barrlund,
            "metrics:barrlund-sandwich",
            None,
        ),
        check(
            "barrlund-lower-p3",
            Barrlund,
            "metrics:barrlund-sandwich",
            None,
        ),
        check(
            "barrlund-upper-p3",
            Barrlund,
            "metrics:barrlund-sandwich",
            None,
        ),
        check(
            "sharp-s-lower",
            Barrlund,
            "metrics:sharp-disk-constants",
            None,
        ),
        check(
            "sharp-s-upper",
            Barrlund,
            "metrics:sharp-disk-constants",
            None,
        ),
        check(
            "sharp-jstar-lower",
            Barrlund,
            "metrics:sharp-disk-constants",
            None,
        ),
        check(
            "sharp-jstar-upper",
            Barrlund,
            "metrics:sharp-disk-constants",
            None,
        ),
        check(
            "sharp-p-lower",
            Barrlund,
            "metrics:sharp-disk-constants",
            None,
        ),
        check(
            "sharp-p-upper",
            Barrlund,
            "metrics:sharp-disk-constants",
            None,
        ),
        // low: s >= low, the one-sided comparisons, the quotient cap, and
        // the fixed triangle-inequality counterexample.
        check("low-le-s", Low, "metrics:low-lower-bound", None),
        check(
            "low-le-sqrt2-jstar",
            Low,
            "metrics:low-upper-comparisons",
            None,
        ),
        check("low-le-p", Low, "metrics:low-upper-comparisons", None),
        check("low-le-b2", Low, "metrics:low-upper-comparisons", None),
        check("low-quotient-cap", Low, "metrics:quotient-cap", Some(1e-9)),
        check("th-half-ge-low", Low, "metrics:th-half-ge-low", None),
        check(
            "low-triangle-failure",
            Low,
            "metrics:low-triangle-failure",
            Some(0.0),
        ),
        // rotation-euclidean: sandwich, exact midpoint, decreasing quotient.
        check(
            "euclid-lower-le-s",
            RotationEuclidean,
            "rotations:euclidean-sandwich",
            Some(1e-9),
        ),
        check(
            "euclid-s-le-upper",
            RotationEuclidean,
            "rotations:euclidean-sandwich",
            Some(1e-9),
        ),
        check(
            "euclid-s-le-upper-closed",
            RotationEuclidean,
            "rotations:euclidean-sandwich",
            Some(1e-9),
        ),
        check(
            "euclid-weak-le-lower",
            RotationEuclidean,
            "rotations:euclidean-sandwich",
            None,
        ),
        check(
            "euclid-midpoint-exact",
            RotationEuclidean,
            "rotations:midpoint-euclidean",
            Some(1e-13),
        ),
        check(
            "decreasing-quotient",
            RotationEuclidean,
            "rotations:decreasing-quotient",
            None,
        ),
        // rotation-hyperbolic: sandwich, chord ordering and bound, the
        // two-case ordering, and midpoint preservation.
        check(
            "hyper-lower-le-s",
            RotationHyperbolic,
            "rotations:hyperbolic-sandwich",
            None,
        ),
        check(
            "hyper-s-le-upper",
            RotationHyperbolic,
            "rotations:hyperbolic-sandwich",
            None,
        ),
        check(
            "chord-x2y2-le-xy",
            RotationHyperbolic,
            "rotations:chord-monotonicity",
            Some(1e-12),
        ),
        check(
            "chord-xy-le-x3y3",
            RotationHyperbolic,
            "rotations:chord-monotonicity",
            Some(1e-12),
        ),
        check(
            "chord-le-circle-diameter",
            RotationHyperbolic,
            "rotations:chord-bound",
            Some(1e-12),
        ),
        check(
            "circle-diameter-le-2t",
            RotationHyperbolic,
            "rotations:chord-bound",
            Some(1e-12),
        ),
        check(
            "hyper-case-ordering",
            RotationHyperbolic,
            "rotations:lower-case-ordering",
            Some(1e-12),
        ),
        check(
            "hyper-midpoint-x2y2",
            RotationHyperbolic,
            "rotations:midpoint-hyperbolic",
            Some(1e-9),
        ),
        check(
            "hyper-midpoint-x3y3",
            RotationHyperbolic,
            "rotations:midpoint-hyperbolic",
            Some(1e-9),
        ),
        // holder: bound validity against witness maps and dominance of the
        // main bound.
        check(
            "holder-mobius-main",
            Holder,
            "holder:mobius-validity",
            Some(1e-12),
        ),
        check(
            "holder-mobius-p",
            Holder,
            "holder:mobius-validity",
            Some(1e-12),
        ),
        check(
            "holder-mobius-hyp",
            Holder,
            "holder:mobius-validity",
            Some(1e-12),
        ),
        check(
            "holder-mobius-radial",
            Holder,
            "holder:mobius-validity",
            Some(1e-12),
        ),
        check(
            "holder-mobius-unit",
            Holder,
            "holder:mobius-validity",
            Some(1e-12),
        ),
        check(
            "holder-mobius-collinear-gated",
            Holder,
            "holder:mobius-validity",
            Some(1e-12),
        ),
        check(
            "holder-radial-k1",
            Holder,
            "holder:radial-validity",
            Some(1e-12),
        ),
        check(
            "holder-radial-k2",
            Holder,
            "holder:radial-validity",
            Some(1e-12),
        ),
        check(
            "holder-radial-k4",
            Holder,
            "holder:radial-validity",
            Some(1e-12),
        ),
        check(
            "holder-dominance-p",
            Holder,
            "holder:dominance",
            Some(1e-12),
        ),
        check(
            "holder-dominance-hyp",
            Holder,
            "holder:dominance",
            Some(1e-12),
        ),
        check(
            "holder-dominance-radial",
            Holder,
            "holder:dominance",
            Some(1e-12),
        ),
        check(
            "holder-dominance-unit",
            Holder,
            "holder:dominance",
            Some(1e-12),
        ),
        check(
            "holder-dominance-collinear-gated",
            Holder,
            "holder:dominance",
            Some(1e-12),
        ),
        CheckDef {
            id: "holder-hyp-beats-others",
            suite: Holder,
            invariant: "holder:hyp-dominates",
            tolerance: None,
            monitored: true,
        },
    ];
    REGISTRY
}

/// Configuration of one suite run.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suite: SuiteKind,
    pub samples: u64,
    pub seed: u64,
    pub tolerance: f64,
    pub domain: DomainSpec,
}

impl SuiteConfig {
    /// A config on the suite's natural domain with the default tolerance.
    pub fn new(suite: SuiteKind, samples: u64, seed: u64) -> SuiteConfig {
        SuiteConfig {
            suite,
            samples,
            seed,
            tolerance: 1e-9,
            domain: suite.natural_domain(),
        }
    }
}

/// Per-check outcome of a run.
#[derive(Clone, Debug, Serialize)]
pub struct CheckSummary {
    pub id: &'static str,
    pub invariant: &'static str,
    pub tolerance: f64,
    pub monitored: bool,
    pub evaluations: u64,
    pub breaches: u64,
    pub min_slack: Option<f64>,
}

/// One recorded violation, self-contained enough to replay: the pair, the
/// check id, the signed slack, and any extra construction data.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub check: &'static str,
    pub x: Point,
    pub y: Point,
    pub slack: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub context: Option<String>,
}

/// Outcome of one suite run.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub domain: DomainSpec,
    pub samples: u64,
    pub seed: u64,
    pub tolerance: f64,
    pub sampling: &'static str,
    pub all_pass: bool,
    pub checks: Vec<CheckSummary>,
    pub violations: Vec<Violation>,
    pub violations_truncated: u64,
    pub noise_count: u64,
    pub min_slack: Option<f64>,
    pub max_ratio_observed: Option<f64>,
    pub max_ratio_doc: &'static str,
    pub runtime_seconds: f64,
}

/// At most this many violations are listed per suite; the rest are counted
/// in `violations_truncated`.
pub const VIOLATION_CAP: usize = 100;

#[derive(Clone)]
struct CheckAcc {
    evaluations: u64,
    breaches: u64,
    min_slack: f64,
}

struct ChunkOutcome {
    acc: Vec<CheckAcc>,
    violations: Vec<Violation>,
    extra_violations: u64,
    noise: u64,
    max_ratio: f64,
}

/// Accumulates check evaluations for one chunk.
struct Recorder<'a> {
    defs: &'a [&'a CheckDef],
    default_tol: f64,
    out: ChunkOutcome,
}

impl<'a> Recorder<'a> {
    fn new(defs: &'a [&'a CheckDef], default_tol: f64) -> Self {
        Recorder {
            defs,
            default_tol,
            out: ChunkOutcome {
                acc: vec![
                    CheckAcc {
                        evaluations: 0,
                        breaches: 0,
                        min_slack: f64::INFINITY,
                    };
                    defs.len()
                ],
                violations: Vec::new(),
                extra_violations: 0,
                noise: 0,
                max_ratio: f64::NEG_INFINITY,
            },
        }
    }

    fn record_with(
        &mut self,
        id: &'static str,
        x: Point,
        y: Point,
        slack: f64,
        context: Option<String>,
    ) {
        let idx = self
            .defs
            .iter()
            .position(|d| d.id == id)
            .unwrap_or_else(|| panic!("check id {id} not registered for this suite"));
        let def = self.defs[idx];
        let tol = def.tolerance.unwrap_or(self.default_tol);
        let acc = &mut self.out.acc[idx];
        acc.evaluations += 1;
        if slack < acc.min_slack {
            acc.min_slack = slack;
        }
        if slack < -tol {
            acc.breaches += 1;
            if !def.monitored {
                if self.out.violations.len() < VIOLATION_CAP {
                    self.out.violations.push(Violation {
                        check: def.id,
                        x,
                        y,
                        slack,
                        context,
                    });
                } else {
                    self.out.extra_violations += 1;
                }
            }
        } else if slack < 0.0 {
            self.out.noise += 1;
        }
    }

    fn record(&mut self, id: &'static str, x: Point, y: Point, slack: f64) {
        self.record_with(id, x, y, slack, None);
    }

    fn ratio(&mut self, r: f64) {
        if r > self.out.max_ratio {
            self.out.max_ratio = r;
        }
    }
}

/// Runs one suite and reports per-check outcomes plus any violations.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    if config.samples < 1 {
        return Err(Error::PreconditionFailed {
            reason: "a suite needs at least one sample",
        });
    }
    if config.tolerance <= 0.0 || !config.tolerance.is_finite() {
        return Err(Error::PreconditionFailed {
            reason: "the suite tolerance must be positive",
        });
    }
    if config.domain != config.suite.natural_domain() {
        return Err(Error::UnsupportedSuite {
            reason: format!(
                "suite {} runs on {}, not {}",
                config.suite.name(),
                config.suite.natural_domain(),
                config.domain
            ),
        });
    }
    let start = Instant::now();
    let defs: Vec<&CheckDef> = registry()
        .iter()
        .filter(|d| d.suite == config.suite)
        .collect();
    let outcomes: Vec<ChunkOutcome> = chunk_layout(config.samples)
        .into_par_iter()
        .map(|(chunk, count)| run_chunk(config, &defs, chunk, count))
        .collect();

    let mut acc: Vec<CheckAcc> = vec![
        CheckAcc {
            evaluations: 0,
            breaches: 0,
            min_slack: f64::INFINITY,
        };
        defs.len()
    ];
    let mut violations = Vec::new();
    let mut truncated = 0u64;
    let mut noise = 0u64;
    let mut max_ratio = f64::NEG_INFINITY;
    for out in outcomes {
        for (a, b) in acc.iter_mut().zip(&out.acc) {
            a.evaluations += b.evaluations;
            a.breaches += b.breaches;
            if b.min_slack < a.min_slack {
                a.min_slack = b.min_slack;
            }
        }
        truncated += out.extra_violations;
        for v in out.violations {
            if violations.len() < VIOLATION_CAP {
                violations.push(v);
            } else {
                truncated += 1;
            }
        }
        noise += out.noise;
        if out.max_ratio > max_ratio {
            max_ratio = out.max_ratio;
        }
    }

    let checks: Vec<CheckSummary> = defs
        .iter()
        .zip(&acc)
        .map(|(d, a)| CheckSummary {
            id: d.id,
            invariant: d.invariant,
            tolerance: d.tolerance.unwrap_or(config.tolerance),
            monitored: d.monitored,
            evaluations: a.evaluations,
            breaches: a.breaches,
            min_slack: (a.evaluations > 0).then_some(a.min_slack),
        })
        .collect();
    let min_slack = defs
        .iter()
        .zip(&acc)
        .filter(|(d, a)| !d.monitored && a.evaluations > 0)
        .map(|(_, a)| a.min_slack)
        .fold(None, |m: Option<f64>, s| Some(m.map_or(s, |m| m.min(s))));
    let all_pass = violations.is_empty() && truncated == 0;
    Ok(SuiteReport {
        suite: config.suite.name(),
        domain: config.domain.clone(),
        samples: config.samples,
        seed: config.seed,
        tolerance: config.tolerance,
        sampling: SAMPLING_DOC,
        all_pass,
        checks,
        violations,
        violations_truncated: truncated,
        noise_count: noise,
        min_slack,
        max_ratio_observed: (max_ratio > f64::NEG_INFINITY).then_some(max_ratio),
        max_ratio_doc: config.suite.ratio_doc(),
        runtime_seconds: start.elapsed().as_secs_f64(),
    })
}

/// Runs every suite on its natural domain with shared parameters.
pub fn run_all(samples: u64, seed: u64, tolerance: f64) -> Result<Vec<SuiteReport>> {
    ALL_SUITES
        .iter()
        .map(|&suite| {
            let mut config = SuiteConfig::new(suite, samples, seed);
            config.tolerance = tolerance;
            run_suite(&config)
        })
        .collect()
}

fn run_chunk(config: &SuiteConfig, defs: &[&CheckDef], chunk: u64, count: u64) -> ChunkOutcome {
    let mut u = Uniform01::for_chunk(config.seed, chunk);
    let sampler = PairSampler::new(&config.domain).expect("validated domain");
    let mut rec = Recorder::new(defs, config.tolerance);
    for i in 0..count {
        let global = chunk * CHUNK + i;
        let (x, y) = sampler.pair(&mut u);
        match config.suite {
            SuiteKind::Chain => eval_chain(&mut rec, global, x, y, &mut u),
            SuiteKind::Barrlund => eval_barrlund(&mut rec, x, y),
            SuiteKind::Low => eval_low(&mut rec, global, x, y),
            SuiteKind::RotationEuclidean => eval_rotation_euclidean(&mut rec, global, x, y, &mut u),
            SuiteKind::RotationHyperbolic => eval_rotation_hyperbolic(&mut rec, x, y),
            SuiteKind::Holder => eval_holder(&mut rec, x, y, &mut u),
        }
    }
    rec.out
}

const DISK: DomainSpec = DomainSpec::UnitDisk;
const EXPECT: &str = "suite evaluation on sampled interior pair";

fn eval_chain(rec: &mut Recorder, global: u64, x: Point, y: Point, u: &mut Uniform01) {
    let quarter = quarter_param(x, y).expect(EXPECT);
    let j = jstar(&DISK, x, y).expect(EXPECT).value;
    let s = s_metric(&DISK, x, y).expect(EXPECT).value;
    let p = point_pair(&DISK, x, y).expect(EXPECT).value;
    let half = tanh_half_rho(x, y).expect(EXPECT);
    rec.record("chain-quarter-le-jstar", x, y, j - quarter);
    rec.record("chain-jstar-le-s", x, y, s - j);
    rec.record("chain-s-le-p", x, y, p - s);
    rec.record("chain-p-le-half", x, y, half - p);
    rec.record("chain-half-le-twice-quarter", x, y, 2.0 * quarter - half);
    rec.record("ball-radius-cap", x, y, x.abs().max(y.abs()) - s);
    rec.ratio(s / quarter);

    if global.is_multiple_of(10) {
        // s is non-decreasing along the ray from x through y, up to exit.
        let dir = (y - x).unit();
        let a = x.dot(dir);
        let t_exit = -a + (a * a + 1.0 - x.abs_sq()).max(0.0).sqrt();
        let mut prev: Option<f64> = None;
        for f in [0.19, 0.38, 0.57, 0.76, 0.95] {
            let s_t = s_metric(&DISK, x, x + dir * (f * t_exit))
                .expect(EXPECT)
                .value;
            if let Some(prev) = prev {
                rec.record("ray-monotone", x, y, s_t - prev);
            }
            prev = Some(s_t);
        }
    }
    if global.is_multiple_of(1000) {
        // s-diameter of a ball around x: supremum bound and attainment.
        let radius = (1.0 - x.abs()) * (0.1 + 0.8 * u.draw());
        let diam = ball_s_diameter(&DISK, x, radius).expect(EXPECT);
        let z1 = x + Point::polar(radius * u.draw().sqrt(), TAU * u.draw());
        let z2 = x + Point::polar(radius * u.draw().sqrt(), TAU * u.draw());
        let inner = s_metric(&DISK, z1, z2).expect(EXPECT).value;
        rec.record_with(
            "ball-diameter-sup",
            z1,
            z2,
            diam - inner,
            Some(format!("ball center {x}, radius {radius:.17e}")),
        );
        let axis = if x.is_zero() { Point::ONE } else { x.unit() };
        let attained = s_metric(&DISK, x + axis * radius, x - axis * radius)
            .expect(EXPECT)
            .value;
        rec.record_with(
            "ball-diameter-attained",
            x + axis * radius,
            x - axis * radius,
            attained - diam,
            Some(format!("ball center {x}, radius {radius:.17e}")),
        );
    }
}

fn eval_barrlund(rec: &mut Recorder, x: Point, y: Point) {
    let s = s_metric(&DISK, x, y).expect(EXPECT).value;
    let j = jstar(&DISK, x, y).expect(EXPECT).value;
    let p = point_pair(&DISK, x, y).expect(EXPECT).value;
    let b: Vec<f64> = [1.0, 2.0, 3.0]
        .iter()
        .map(|&q| barrlund(&DISK, q, x, y).expect(EXPECT).value)
        .collect();
    for (i, (&q, &bq)) in [1.0f64, 2.0, 3.0].iter().zip(&b).enumerate() {
        let (lower, upper) = match i {
            0 => ("barrlund-lower-p1", "barrlund-upper-p1"),
            1 => ("barrlund-lower-p2", "barrlund-upper-p2"),
            _ => ("barrlund-lower-p3", "barrlund-upper-p3"),
        };
        rec.record(lower, x, y, bq - s);
        rec.record(upper, x, y, (1.0 - 1.0 / q).exp2() * s - bq);
    }
    let b2 = b[1];
    let pb_sharp = (10f64.sqrt() + SQRT_2) / 4.0;
    rec.record("sharp-s-lower", x, y, s - b2 / SQRT_2);
    rec.record("sharp-s-upper", x, y, b2 - s);
    rec.record("sharp-jstar-lower", x, y, j - b2 / 2.0);
    rec.record("sharp-jstar-upper", x, y, b2 - j);
    rec.record("sharp-p-lower", x, y, p - b2 / SQRT_2);
    rec.record("sharp-p-upper", x, y, pb_sharp * b2 - p);
    rec.ratio(p / b2);
}

fn eval_low(rec: &mut Recorder, global: u64, x: Point, y: Point) {
    let s = s_metric(&DISK, x, y).expect(EXPECT).value;
    let lo = low(x, y).expect(EXPECT).value;
    let j = jstar(&DISK, x, y).expect(EXPECT).value;
    let p = point_pair(&DISK, x, y).expect(EXPECT).value;
    let b2 = barrlund(&DISK, 2.0, x, y).expect(EXPECT).value;
    let half = tanh_half_rho(x, y).expect(EXPECT);
    rec.record("low-le-s", x, y, s - lo);
    rec.record("low-le-sqrt2-jstar", x, y, SQRT_2 * j - lo);
    rec.record("low-le-p", x, y, p - lo);
    rec.record("low-le-b2", x, y, b2 - lo);
    rec.record("th-half-ge-low", x, y, half - lo);
    let r = x.abs().max(y.abs());
    let cap = (1.0 + r) / (2.0 * r);
    rec.record("low-quotient-cap", x, y, cap - s / lo);
    rec.ratio((s / lo) / cap);
    if global == 0 {
        // Fixed counterexample: low violates the triangle inequality.
        let a = Point::new(0.3, 0.0);
        let m = Point::new(0.1, 0.0);
        let c = Point::new(-0.1, 0.0);
        let direct = low(a, c).expect(EXPECT).value;
        let through = low(a, m).expect(EXPECT).value + low(m, c).expect(EXPECT).value;
        rec.record("low-triangle-failure", a, c, direct - through);
    }
}

fn eval_rotation_euclidean(rec: &mut Recorder, global: u64, x: Point, y: Point, u: &mut Uniform01) {
    let rot = euclidean_rotation(x, y).expect(EXPECT);
    let bounds = euclidean_bounds(x, y).expect(EXPECT);
    let s = s_metric(&DISK, x, y).expect(EXPECT).value;
    rec.record("euclid-lower-le-s", x, y, s - bounds.lower);
    if let Some(upper) = bounds.upper {
        rec.record("euclid-s-le-upper", x, y, upper - s);
    }
    rec.record("euclid-s-le-upper-closed", x, y, bounds.upper_closed - s);
    rec.record(
        "euclid-weak-le-lower",
        x,
        y,
        bounds.lower - bounds.lower_closed,
    );
    let mid0 = (rot.x0 + rot.y0) * 0.5;
    rec.record("euclid-midpoint-exact", x, y, -mid0.dist(rot.k));
    if let Some(x1) = rot.x1 {
        let mid1 = (x1 + rot.y1) * 0.5;
        rec.record("euclid-midpoint-exact", x, y, -mid1.dist(rot.k));
    }
    rec.ratio(s / bounds.lower);

    if global.is_multiple_of(10) {
        // The chord-to-detour quotient through a fixed exterior point is
        // non-increasing as the chord pivots away from that point's ray.
        let kp = 0.05 + 0.9 * u.draw();
        let z = Point::new(1.05 + 1.95 * u.draw(), 0.0);
        let pivot = Point::new(kp, 0.0);
        let mut prev: Option<f64> = None;
        for jdx in 0..50 {
            let mu = FRAC_PI_2 * jdx as f64 / 49.0;
            let dir = Point::polar(1.0, mu);
            let beta = kp * mu.cos();
            let disc = (beta * beta + 1.0 - kp * kp).sqrt();
            let xe = pivot + dir * (disc - beta);
            let ye = pivot - dir * (disc + beta);
            let quotient = xe.dist(ye) / (xe.dist(z) + z.dist(ye));
            if let Some(prev) = prev {
                rec.record_with(
                    "decreasing-quotient",
                    xe,
                    ye,
                    prev - quotient,
                    Some(format!(
                        "pivot {kp:.17e}, exterior point {z}, angle index {jdx}"
                    )),
                );
            }
            prev = Some(quotient);
        }
    }
}

fn eval_rotation_hyperbolic(rec: &mut Recorder, x: Point, y: Point) {
    let rot = hyperbolic_rotation(x, y).expect(EXPECT);
    let bounds = hyperbolic_bounds(x, y).expect(EXPECT);
    let s = s_metric(&DISK, x, y).expect(EXPECT).value;
    let d = x.dist(y);
    let q = rot.q.abs();
    let t = rot.t;
    rec.record("hyper-lower-le-s", x, y, s - bounds.lower);
    rec.record("hyper-s-le-upper", x, y, bounds.upper - s);
    rec.record("chord-x2y2-le-xy", x, y, d - rot.x2.dist(rot.y2));
    rec.record("chord-xy-le-x3y3", x, y, rot.x3.dist(rot.y3) - d);
    let circle_diameter = 2.0 * (1.0 - q * q) * t / (1.0 - q * q * t * t);
    rec.record("chord-le-circle-diameter", x, y, circle_diameter - d);
    rec.record("circle-diameter-le-2t", x, y, 2.0 * t - circle_diameter);
    let case1 = ((q * q + t * t) / (1.0 + q * q * t * t)).sqrt();
    let case2 = t * (1.0 + q) / ((1.0 + t * t) * (1.0 + q * q * t * t)).sqrt();
    rec.record("hyper-case-ordering", x, y, case1 - case2);
    let m2 = hyperbolic_midpoint(rot.x2, rot.y2).expect(EXPECT);
    rec.record("hyper-midpoint-x2y2", x, y, -m2.dist(rot.q));
    let m3 = hyperbolic_midpoint(rot.x3, rot.y3).expect(EXPECT);
    rec.record("hyper-midpoint-x3y3", x, y, -m3.dist(rot.q));
    rec.ratio(bounds.upper / bounds.lower);
}

fn eval_holder(rec: &mut Recorder, x: Point, y: Point, u: &mut Uniform01) {
    let r_cap = 0.5 * (x + y).abs();
    let aligned_estimate = x.dist(y) / (2.0 - (x + y).abs());
    // One conformal witness per sample: a disk automorphism with random
    // center and phase.
    let a = Point::polar(u.draw().sqrt(), TAU * u.draw());
    let phase = TAU * u.draw();
    let map = TestMap::MobiusAutomorphism { a, phase };
    let fx = apply_test_map(&map, x).expect(EXPECT);
    let fy = apply_test_map(&map, y).expect(EXPECT);
    let moved = fx.dist(fy);
    let context = || Some(format!("mobius automorphism a = {a}, phase = {phase:.17e}"));

    let rep1 = holder_variants(x, y, 1.0, Some(r_cap)).expect(EXPECT);
    rec.record_with("holder-mobius-main", x, y, rep1.thm_main - moved, context());
    rec.record_with("holder-mobius-p", x, y, rep1.cor_p - moved, context());
    rec.record_with("holder-mobius-hyp", x, y, rep1.cor_hyp - moved, context());
    rec.record_with(
        "holder-mobius-radial",
        x,
        y,
        rep1.cor_radial
            .expect("r = |x+y|/2 always satisfies the gate")
            - moved,
        context(),
    );
    if let Some(cu) = rep1.cor_unit {
        rec.record_with("holder-mobius-unit", x, y, cu - moved, context());
    }
    if aligned_estimate <= 1.0 {
        rec.record_with(
            "holder-mobius-collinear-gated",
            x,
            y,
            rep1.cor_collinear - moved,
            context(),
        );
    }
    rec.ratio(moved / rep1.thm_main);

    for (check, k) in [
        ("holder-radial-k1", 1.0),
        ("holder-radial-k2", 2.0),
        ("holder-radial-k4", 4.0),
    ] {
        let rep = if k == 1.0 {
            rep1
        } else {
            holder_variants(x, y, k, Some(r_cap)).expect(EXPECT)
        };
        let stretch = TestMap::RadialStretch { k };
        let gx = apply_test_map(&stretch, x).expect(EXPECT);
        let gy = apply_test_map(&stretch, y).expect(EXPECT);
        rec.record_with(
            check,
            x,
            y,
            rep.best - gx.dist(gy),
            Some(format!("radial stretch K = {k}")),
        );
        // Dominance of the main bound under each present variant.
        rec.record("holder-dominance-p", x, y, rep.cor_p - rep.thm_main);
        rec.record("holder-dominance-hyp", x, y, rep.cor_hyp - rep.thm_main);
        rec.record(
            "holder-dominance-radial",
            x,
            y,
            rep.cor_radial.expect("gate satisfied") - rep.thm_main,
        );
        if let Some(cu) = rep.cor_unit {
            rec.record("holder-dominance-unit", x, y, cu - rep.thm_main);
        }
        if aligned_estimate <= 1.0 {
            rec.record(
                "holder-dominance-collinear-gated",
                x,
                y,
                rep.cor_collinear - rep.thm_main,
            );
        }
        // Monitored expectation: the hyperbolic variant beats both the
        // aligned and point-pair variants.
        rec.record(
            "holder-hyp-beats-others",
            x,
            y,
            rep.cor_p.min(rep.cor_collinear) - rep.cor_hyp,
        );
    }
}
