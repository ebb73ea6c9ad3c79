//! Command-line interface for the triangular-ratio-metric library.
//!
//! Exit codes: 0 success / all checks pass; 1 a verification suite or the
//! conjecture scan found violations; 2 usage error (including malformed
//! complex literals, reported with a caret diagnostic); 3 domain or
//! precondition error from the library.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::process::ExitCode;
use trimetric::domain::{DomainSpec, Polygon};
use trimetric::error::Error;
use trimetric::harness::conjecture::{conjecture_pair, conjecture_scan, CONJECTURE_THRESHOLD};
use trimetric::harness::probes::{sharpness_probe, ProbeRow, PROBE_IDS};
use trimetric::harness::suites::{run_all, run_suite, SuiteConfig, SuiteKind, SuiteReport};
use trimetric::holder::{holder_variants, HolderReport};
use trimetric::hyperbolic::{quarter_param, rho_disk, rho_half_plane, tanh_half_rho};
use trimetric::metrics::{barrlund, jstar, low, point_pair, s_metric, MetricValue};
use trimetric::point::Point;
use trimetric::report::{conjecture_csv, envelope_json, fmt_f64, probe_csv, suites_csv};
use trimetric::rotations::{
    euclidean_bounds, euclidean_rotation, hyperbolic_bounds, hyperbolic_rotation, EuclideanBounds,
    EuclideanRotation, HyperbolicBounds, HyperbolicRotation,
};

#[derive(Parser)]
#[command(
    name = "trimetric",
    version,
    about = "Triangular ratio metric s and its comparison metrics on planar domains",
    long_about = "Computes the triangular ratio metric \
s_G(x,y) = |x-y| / inf_z(|x-z| + |z-y|) (infimum over boundary points z) and \
the companion metrics j*, p, Barrlund b_p, low and the hyperbolic distance; \
rotation-based two-sided bounds for s; Holder continuity bounds for \
K-quasiconformal maps; seeded verification suites; sharpness probes; and a \
counterexample scan for the rotation-comparison conjecture.\n\n\
Complex arguments use the literal form a+bi (examples: 0.5, -0.3+0.117i, \
1e-3-2.5i, 0.4i). Exit codes: 0 success / all pass, 1 violations found, \
2 usage error, 3 domain or precondition error."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(ValueEnum, Clone, Copy, PartialEq)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate one metric between two interior points of a domain.
    Dist {
        /// disk | halfplane | punctured | polygon:<v1;v2;...> | complement:<z0>
        #[arg(long)]
        domain: String,
        /// First point, complex literal a+bi.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Second point, complex literal a+bi.
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        /// s | jstar | p | barrlund:<p> | low | rho
        #[arg(long)]
        metric: String,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Print every bound for a disk pair with the sandwich ordering.
    Bounds {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Rotate a disk pair about its Euclidean or hyperbolic midpoint.
    Rotate {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        /// euclidean | hyperbolic
        #[arg(long)]
        mode: String,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Holder continuity bounds for K-quasiconformal maps of the disk.
    Holder {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        /// Maximal dilatation, K >= 1.
        #[arg(long = "K")]
        k: f64,
        /// Radius cap enabling the radial variant (requires |x+y|/2 <= r < 1).
        #[arg(long)]
        r: Option<f64>,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Run one verification suite (or all) over seeded random pairs.
    Verify {
        /// chain | barrlund | low | rotation-euclidean | rotation-hyperbolic | holder | all
        #[arg(long)]
        suite: String,
        #[arg(long)]
        samples: u64,
        #[arg(long)]
        seed: u64,
        /// Violation tolerance for checks without a pinned tolerance.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// json | csv (default: human-readable text)
        #[arg(
            long,
            long_help = "json | csv (default: human-readable text). CSV columns: \
suite,domain,samples,seed,check,invariant,tolerance,monitored,evaluations,breaches,\
min_slack,suite_all_pass,suite_max_ratio"
        )]
        format: Option<Format>,
    },
    /// Tabulate a sharpness probe along a decreasing epsilon schedule.
    Probe {
        /// Probe id; see --help for the list.
        #[arg(long, long_help = probe_ids_help())]
        id: String,
        /// Comma-separated epsilon values in (0, 1).
        #[arg(long, default_value = "1e-2,1e-3,1e-4,1e-5,1e-6")]
        eps: String,
        /// json | csv (default: human-readable table)
        #[arg(
            long,
            long_help = "json | csv (default: human-readable table). CSV columns: \
probe,eps,x_re,x_im,y_re,y_im,ratio,claimed_limit,abs_error"
        )]
        format: Option<Format>,
    },
    /// Scan the rotation-comparison conjecture for counterexamples.
    ExploreConjecture {
        #[arg(long, required_unless_present = "x")]
        samples: Option<u64>,
        #[arg(long, required_unless_present = "x")]
        seed: Option<u64>,
        /// json | csv (default: human-readable text)
        #[arg(
            long,
            long_help = "json | csv (default: human-readable text). Scan CSV columns: \
claim,evaluations,min_slack,counterexamples,counterexamples_truncated,holds. \
Pair-mode CSV columns: claim,x_re,x_im,y_re,y_im,slack,holds"
        )]
        format: Option<Format>,
        /// Optional explicit pair: evaluate the claims on (x, y) only.
        #[arg(long, requires = "y", allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(long, requires = "x", allow_hyphen_values = true)]
        y: Option<String>,
    },
}

fn probe_ids_help() -> String {
    let mut s = String::from("Probe id; one of:\n");
    for (id, what) in PROBE_IDS {
        s.push_str(&format!("  {id}: {what}\n"));
    }
    s
}

/// A failure with its exit code: usage errors (2) carry a preformatted
/// message; library errors map to exit 3.
enum Failure {
    Usage(String),
    Runtime(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Runtime(e)
    }
}

type CmdResult = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    // Rust starts with SIGPIPE ignored, which turns `trimetric ... | head`
    // into a panic on the first write after the reader closes. Restore the
    // usual Unix behavior of dying quietly.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

// ---------------------------------------------------------------------------
// Argument parsing with caret diagnostics
// ---------------------------------------------------------------------------

/// Parses `a+bi` complex literals. Returns the point or the byte position
/// (within the trimmed literal) and message of the first problem.
fn parse_complex(raw: &str) -> Result<Point, (usize, String)> {
    let s = raw.trim();
    if s.is_empty() {
        return Err((0, "empty literal; expected a+bi".to_owned()));
    }
    let bytes = s.as_bytes();
    // The imaginary part begins at the last sign that is neither leading nor
    // part of a scientific exponent.
    let mut split = None;
    for (i, &b) in bytes.iter().enumerate().skip(1) {
        if (b == b'+' || b == b'-') && !matches!(bytes[i - 1], b'e' | b'E') {
            split = Some(i);
        }
    }
    let parse_part = |part: &str, at: usize, what: &str| -> Result<f64, (usize, String)> {
        if part.is_empty() {
            return Err((at, format!("missing {what}")));
        }
        match part.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            Ok(_) => Err((at, format!("{what} must be finite"))),
            Err(_) => Err((at, format!("'{part}' is not a valid {what}"))),
        }
    };
    let parse_imag_coeff = |part: &str, at: usize| -> Result<f64, (usize, String)> {
        match part {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => parse_part(part, at, "imaginary part"),
        }
    };
    if let Some(body) = s.strip_suffix('i') {
        match split {
            Some(p) if p < body.len() => {
                let re = parse_part(&s[..p], 0, "real part")?;
                let im = parse_imag_coeff(&s[p..body.len()], p)?;
                Ok(Point::new(re, im))
            }
            _ => Ok(Point::new(0.0, parse_imag_coeff(body, 0)?)),
        }
    } else {
        match split {
            Some(_) => Err((
                s.len() - 1,
                "expected the imaginary part to end in 'i'".to_owned(),
            )),
            None => Ok(Point::new(parse_part(s, 0, "real part")?, 0.0)),
        }
    }
}

/// Formats a caret diagnostic for a bad complex literal.
fn complex_usage(flag: &str, raw: &str, pos: usize, msg: &str) -> Failure {
    let literal = raw.trim();
    Failure::Usage(format!(
        "error: invalid complex literal for {flag}\n  {literal}\n  {:pad$}^ {msg}",
        "",
        pad = pos
    ))
}

fn arg_complex(flag: &str, raw: &str) -> Result<Point, Failure> {
    parse_complex(raw).map_err(|(pos, msg)| complex_usage(flag, raw, pos, &msg))
}

fn parse_domain(raw: &str) -> Result<DomainSpec, Failure> {
    match raw {
        "disk" => Ok(DomainSpec::UnitDisk),
        "halfplane" => Ok(DomainSpec::UpperHalfPlane),
        "punctured" => Ok(DomainSpec::PuncturedUnitDisk),
        _ => {
            if let Some(list) = raw.strip_prefix("polygon:") {
                let mut vertices = Vec::new();
                for part in list.split(';') {
                    vertices.push(arg_complex("--domain polygon vertex", part)?);
                }
                let poly =
                    Polygon::new(vertices).map_err(|e| Failure::Usage(format!("error: {e}")))?;
                Ok(DomainSpec::ConvexPolygon(poly))
            } else if let Some(z0) = raw.strip_prefix("complement:") {
                Ok(DomainSpec::PointComplement(arg_complex(
                    "--domain complement point",
                    z0,
                )?))
            } else {
                Err(Failure::Usage(format!(
                    "error: unknown domain '{raw}'; expected disk | halfplane | punctured | \
                     polygon:<v1;v2;...> | complement:<z0>"
                )))
            }
        }
    }
}

enum MetricArg {
    S,
    JStar,
    P,
    Barrlund(f64),
    Low,
    Rho,
}

fn parse_metric(raw: &str) -> Result<MetricArg, Failure> {
    match raw {
        "s" => Ok(MetricArg::S),
        "jstar" => Ok(MetricArg::JStar),
        "p" => Ok(MetricArg::P),
        "low" => Ok(MetricArg::Low),
        "rho" => Ok(MetricArg::Rho),
        _ => {
            if let Some(p) = raw.strip_prefix("barrlund:") {
                let p: f64 = p.parse().map_err(|_| {
                    Failure::Usage(format!(
                        "error: invalid Barrlund exponent '{p}'; expected barrlund:<p> with real p >= 1"
                    ))
                })?;
                Ok(MetricArg::Barrlund(p))
            } else {
                Err(Failure::Usage(format!(
                    "error: unknown metric '{raw}'; expected s | jstar | p | barrlund:<p> | low | rho"
                )))
            }
        }
    }
}

fn parse_eps_list(raw: &str) -> Result<Vec<f64>, Failure> {
    raw.split(',')
        .map(|part| {
            part.trim().parse::<f64>().map_err(|_| {
                Failure::Usage(format!(
                    "error: invalid epsilon '{part}' in --eps; expected a comma-separated list of reals"
                ))
            })
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

fn run(cmd: Cmd) -> CmdResult {
    match cmd {
        Cmd::Dist {
            domain,
            x,
            y,
            metric,
            json,
        } => cmd_dist(&domain, &x, &y, &metric, json),
        Cmd::Bounds { x, y, json } => cmd_bounds(&x, &y, json),
        Cmd::Rotate { x, y, mode, json } => cmd_rotate(&x, &y, &mode, json),
        Cmd::Holder { x, y, k, r, json } => cmd_holder(&x, &y, k, r, json),
        Cmd::Verify {
            suite,
            samples,
            seed,
            tol,
            format,
        } => cmd_verify(&suite, samples, seed, tol, format),
        Cmd::Probe { id, eps, format } => cmd_probe(&id, &eps, format),
        Cmd::ExploreConjecture {
            samples,
            seed,
            format,
            x,
            y,
        } => cmd_conjecture(samples, seed, format, x.as_deref(), y.as_deref()),
    }
}

#[derive(Serialize)]
struct RhoReport {
    metric: &'static str,
    domain: DomainSpec,
    x: Point,
    y: Point,
    value: f64,
}

fn cmd_dist(domain: &str, x: &str, y: &str, metric: &str, json: bool) -> CmdResult {
    let domain = parse_domain(domain)?;
    let x = arg_complex("--x", x)?;
    let y = arg_complex("--y", y)?;
    let metric = parse_metric(metric)?;
    let value: MetricValue = match metric {
        MetricArg::S => s_metric(&domain, x, y)?,
        MetricArg::JStar => jstar(&domain, x, y)?,
        MetricArg::P => point_pair(&domain, x, y)?,
        MetricArg::Barrlund(p) => barrlund(&domain, p, x, y)?,
        MetricArg::Low => {
            // low is the punctured-disk quantity; the requested domain still
            // gates the points.
            domain.dist_to_boundary(x)?;
            domain.dist_to_boundary(y)?;
            low(x, y)?
        }
        MetricArg::Rho => {
            let value = match domain {
                DomainSpec::UnitDisk | DomainSpec::PuncturedUnitDisk => {
                    domain.dist_to_boundary(x)?;
                    domain.dist_to_boundary(y)?;
                    rho_disk(x, y)?
                }
                DomainSpec::UpperHalfPlane => rho_half_plane(x, y)?,
                _ => {
                    return Err(Error::UnsupportedDomain {
                        reason: "rho is defined here for the disk and the half-plane",
                    }
                    .into())
                }
            };
            let report = RhoReport {
                metric: "rho",
                domain,
                x,
                y,
                value,
            };
            if json {
                println!("{}", envelope_json("dist", &report));
            } else {
                println!("rho[{}]({x}, {y}) = {}", report.domain, fmt_f64(value));
            }
            return Ok(ExitCode::SUCCESS);
        }
    };
    if json {
        println!("{}", envelope_json("dist", &value));
    } else {
        println!(
            "{}[{}]({x}, {y}) = {}",
            value.metric.name(),
            value.domain,
            fmt_f64(value.value)
        );
        if let Some(trimetric::metrics::MetricDetail::Infimum(inf)) = &value.detail {
            println!(
                "  boundary infimum = {} at z = {} ({:?}{})",
                fmt_f64(inf.value),
                inf.minimizer,
                inf.method,
                inf.residual
                    .map(|r| format!(", bisector residual {r:.3e}"))
                    .unwrap_or_default()
            );
        }
        if let Some(trimetric::metrics::MetricDetail::Extremal { z }) = &value.detail {
            println!("  boundary supremum witness z = {z}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct BoundsReport {
    x: Point,
    y: Point,
    quarter: f64,
    jstar: f64,
    s: f64,
    p: f64,
    half: f64,
    barrlund_b2: f64,
    low: Option<f64>,
    euclidean: EuclideanBounds,
    hyperbolic: HyperbolicBounds,
    chain_holds: bool,
    sandwich_holds: bool,
}

fn cmd_bounds(x: &str, y: &str, json: bool) -> CmdResult {
    let disk = DomainSpec::UnitDisk;
    let x = arg_complex("--x", x)?;
    let y = arg_complex("--y", y)?;
    let quarter = quarter_param(x, y)?;
    let j = jstar(&disk, x, y)?.value;
    let s = s_metric(&disk, x, y)?.value;
    let p = point_pair(&disk, x, y)?.value;
    let half = tanh_half_rho(x, y)?;
    let b2 = barrlund(&disk, 2.0, x, y)?.value;
    let lo = low(x, y).ok().map(|v| v.value);
    let eb = euclidean_bounds(x, y)?;
    let hb = hyperbolic_bounds(x, y)?;
    const TOL: f64 = 1e-12;
    let chain = [
        ("th(rho/4) <= jstar", j - quarter),
        ("jstar <= s", s - j),
        ("s <= p", p - s),
        ("p <= th(rho/2)", half - p),
        ("th(rho/2) <= 2 th(rho/4)", 2.0 * quarter - half),
    ];
    let sandwich = [
        ("euclidean lower <= s", s - eb.lower),
        ("s <= euclidean upper_closed", eb.upper_closed - s),
        ("hyperbolic lower <= s", s - hb.lower),
        ("s <= hyperbolic upper", hb.upper - s),
    ];
    let report = BoundsReport {
        x,
        y,
        quarter,
        jstar: j,
        s,
        p,
        half,
        barrlund_b2: b2,
        low: lo,
        euclidean: eb,
        hyperbolic: hb,
        chain_holds: chain.iter().all(|(_, sl)| *sl >= -TOL),
        sandwich_holds: sandwich.iter().all(|(_, sl)| *sl >= -TOL),
    };
    if json {
        println!("{}", envelope_json("bounds", &report));
        return Ok(ExitCode::SUCCESS);
    }
    println!("unit-disk pair x = {x}, y = {y}");
    println!("  th(rho/4)  = {}", fmt_f64(quarter));
    println!("  jstar      = {}", fmt_f64(j));
    println!("  s          = {}", fmt_f64(s));
    println!("  p          = {}", fmt_f64(p));
    println!("  th(rho/2)  = {}", fmt_f64(half));
    println!("  2th(rho/4) = {}", fmt_f64(2.0 * quarter));
    println!("  barrlund b2 = {}  (s <= b2 <= sqrt(2) s)", fmt_f64(b2));
    match lo {
        Some(lo) => println!("  low        = {}  (low <= s)", fmt_f64(lo)),
        None => println!("  low        = undefined (a point is at the origin)"),
    }
    println!(
        "  euclidean rotation:  lower = {} <= s{}; closed-form upper = {} (always valid)",
        fmt_f64(eb.lower),
        match eb.upper {
            Some(u) => format!(" <= upper = {}", fmt_f64(u)),
            None => String::from(" (radial pair exits the disk; tight upper absent)"),
        },
        fmt_f64(eb.upper_closed),
    );
    println!(
        "  hyperbolic rotation: lower = {} <= s <= upper = {}",
        fmt_f64(hb.lower),
        fmt_f64(hb.upper)
    );
    for (label, slack) in chain.iter().chain(&sandwich) {
        if *slack < -TOL {
            println!("  ORDERING VIOLATED: {label} (slack {})", fmt_f64(*slack));
        }
    }
    if report.chain_holds && report.sandwich_holds {
        println!("  ordering: th(rho/4) <= jstar <= s <= p <= th(rho/2) <= 2th(rho/4) and both sandwiches hold");
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct RotateReport {
    mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    euclidean: Option<EuclideanRotation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    euclidean_bounds: Option<EuclideanBounds>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hyperbolic: Option<HyperbolicRotation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hyperbolic_bounds: Option<HyperbolicBounds>,
}

fn cmd_rotate(x: &str, y: &str, mode: &str, json: bool) -> CmdResult {
    let x = arg_complex("--x", x)?;
    let y = arg_complex("--y", y)?;
    match mode {
        "euclidean" => {
            let rot = euclidean_rotation(x, y)?;
            let bounds = euclidean_bounds(x, y)?;
            if json {
                let report = RotateReport {
                    mode: "euclidean",
                    euclidean: Some(rot),
                    euclidean_bounds: Some(bounds),
                    hyperbolic: None,
                    hyperbolic_bounds: None,
                };
                println!("{}", envelope_json("rotate", &report));
            } else {
                println!("euclidean midpoint rotation of ({x}, {y})");
                println!(
                    "  k = {} (midpoint), r = {} (half-chord)",
                    rot.k,
                    fmt_f64(rot.r)
                );
                println!("  perpendicular pair: x0 = {}, y0 = {}", rot.x0, rot.y0);
                match rot.x1 {
                    Some(x1) => println!("  radial pair:        x1 = {}, y1 = {}", x1, rot.y1),
                    None => println!(
                        "  radial pair:        x1 outside the closed disk (|k| + r >= 1); y1 = {}",
                        rot.y1
                    ),
                }
                println!(
                    "  s bounds: lower = {}{}, closed-form upper = {}",
                    fmt_f64(bounds.lower),
                    match bounds.upper {
                        Some(u) => format!(", upper = {}", fmt_f64(u)),
                        None => String::new(),
                    },
                    fmt_f64(bounds.upper_closed)
                );
            }
        }
        "hyperbolic" => {
            let rot = hyperbolic_rotation(x, y)?;
            let bounds = hyperbolic_bounds(x, y)?;
            if json {
                let report = RotateReport {
                    mode: "hyperbolic",
                    euclidean: None,
                    euclidean_bounds: None,
                    hyperbolic: Some(rot),
                    hyperbolic_bounds: Some(bounds),
                };
                println!("{}", envelope_json("rotate", &report));
            } else {
                println!("hyperbolic midpoint rotation of ({x}, {y})");
                println!(
                    "  q = {} (hyperbolic midpoint), t = th(rho/4) = {}",
                    rot.q,
                    fmt_f64(rot.t)
                );
                println!(
                    "  hyperbolic circle around q: euclidean center j = {}, radius h = {}",
                    rot.j,
                    fmt_f64(rot.h)
                );
                println!("  angular pair: x2 = {}, y2 = {}", rot.x2, rot.y2);
                println!("  radial pair:  x3 = {}, y3 = {}", rot.x3, rot.y3);
                println!(
                    "  s bounds: lower = {} <= s <= upper = {}",
                    fmt_f64(bounds.lower),
                    fmt_f64(bounds.upper)
                );
            }
        }
        other => {
            return Err(Failure::Usage(format!(
                "error: unknown rotation mode '{other}'; expected euclidean | hyperbolic"
            )))
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_holder(x: &str, y: &str, k: f64, r: Option<f64>, json: bool) -> CmdResult {
    let x = arg_complex("--x", x)?;
    let y = arg_complex("--y", y)?;
    let report: HolderReport = holder_variants(x, y, k, r)?;
    if json {
        println!("{}", envelope_json("holder", &report));
        return Ok(ExitCode::SUCCESS);
    }
    println!(
        "holder bounds for K = {} quasiconformal self-maps of the disk, pair ({x}, {y})",
        fmt_f64(report.k)
    );
    println!("  s = {}", fmt_f64(report.s));
    println!("  main bound        = {}", fmt_f64(report.thm_main));
    println!("  p variant         = {}", fmt_f64(report.cor_p));
    println!(
        "  aligned variant   = {}{}",
        fmt_f64(report.cor_collinear),
        if x.dist(y) / (2.0 - (x + y).abs()) > 1.0 {
            "  (estimate exceeds 1; not a valid bound for this pair)"
        } else {
            ""
        }
    );
    println!("  hyperbolic variant = {}", fmt_f64(report.cor_hyp));
    match report.cor_radial {
        Some(v) => println!("  radial variant    = {}", fmt_f64(v)),
        None => println!("  radial variant    = absent (needs |x+y|/2 <= r < 1)"),
    }
    match report.cor_unit {
        Some(v) => println!("  unit variant      = {}", fmt_f64(v)),
        None => println!("  unit variant      = absent (needs |x+y| <= 1)"),
    }
    println!("  best = {}", fmt_f64(report.best));
    if report.vacuous {
        println!("  note: best bound exceeds 2 = diam(disk); vacuous for self-maps");
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    suites: &'a [SuiteReport],
}

fn cmd_verify(suite: &str, samples: u64, seed: u64, tol: f64, format: Option<Format>) -> CmdResult {
    let reports: Vec<SuiteReport> = if suite == "all" {
        run_all(samples, seed, tol)?
    } else {
        let kind = SuiteKind::parse(suite).ok_or_else(|| {
            Failure::Usage(format!(
                "error: unknown suite '{suite}'; expected chain | barrlund | low | \
                 rotation-euclidean | rotation-hyperbolic | holder | all"
            ))
        })?;
        let mut config = SuiteConfig::new(kind, samples, seed);
        config.tolerance = tol;
        vec![run_suite(&config)?]
    };
    let all_pass = reports.iter().all(|r| r.all_pass);
    match format {
        Some(Format::Json) => println!(
            "{}",
            envelope_json("verify", &VerifyReport { suites: &reports })
        ),
        Some(Format::Csv) => print!("{}", suites_csv(&reports)),
        None => {
            for r in &reports {
                println!(
                    "[suite {}] domain={} samples={} seed={} tol={:.1e}",
                    r.suite, r.domain, r.samples, r.seed, r.tolerance
                );
                for c in &r.checks {
                    println!(
                        "  {:32} {:32} evals={:8} breaches={} min_slack={}{}",
                        c.id,
                        c.invariant,
                        c.evaluations,
                        c.breaches,
                        c.min_slack.map(fmt_f64).unwrap_or_else(|| "-".into()),
                        if c.monitored { "  [monitored]" } else { "" }
                    );
                }
                for v in &r.violations {
                    println!(
                        "  VIOLATION {} x={} y={} slack={}{}",
                        v.check,
                        v.x,
                        v.y,
                        fmt_f64(v.slack),
                        v.context
                            .as_deref()
                            .map(|c| format!("  ({c})"))
                            .unwrap_or_default()
                    );
                }
                if r.violations_truncated > 0 {
                    println!("  ... and {} more violations", r.violations_truncated);
                }
                println!(
                    "  all_pass={} noise={} min_slack={} max_ratio={} ({}) runtime={:.3}s",
                    r.all_pass,
                    r.noise_count,
                    r.min_slack.map(fmt_f64).unwrap_or_else(|| "-".into()),
                    r.max_ratio_observed
                        .map(fmt_f64)
                        .unwrap_or_else(|| "-".into()),
                    r.max_ratio_doc,
                    r.runtime_seconds
                );
            }
        }
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[derive(Serialize)]
struct ProbeReport {
    id: String,
    quotient: &'static str,
    rows: Vec<ProbeRow>,
}

fn cmd_probe(id: &str, eps: &str, format: Option<Format>) -> CmdResult {
    let eps = parse_eps_list(eps)?;
    let rows = match sharpness_probe(id, &eps) {
        Ok(rows) => rows,
        Err(e @ Error::UnknownProbe { .. }) => {
            return Err(Failure::Usage(format!(
                "error: {e}\n{}",
                probe_ids_help().trim_end()
            )))
        }
        Err(e) => return Err(e.into()),
    };
    let quotient = PROBE_IDS
        .iter()
        .find(|(known, _)| *known == id)
        .map(|(_, what)| *what)
        .unwrap_or_default();
    match format {
        Some(Format::Json) => println!(
            "{}",
            envelope_json(
                "probe",
                &ProbeReport {
                    id: id.to_owned(),
                    quotient,
                    rows
                }
            )
        ),
        Some(Format::Csv) => print!("{}", probe_csv(id, &rows)),
        None => {
            println!("probe {id}: {quotient}");
            println!(
                "  {:<10} {:<24} {:<24} {:<12} pair",
                "eps", "ratio", "claimed limit", "|error|"
            );
            for r in &rows {
                println!(
                    "  {:<10.3e} {:<24} {:<24} {:<12.3e} ({}, {})",
                    r.eps,
                    fmt_f64(r.ratio),
                    fmt_f64(r.claimed_limit),
                    r.abs_error,
                    r.x,
                    r.y
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct PairClaim {
    claim: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    slack: Option<f64>,
    holds: bool,
}

#[derive(Serialize)]
struct PairReport {
    x: Point,
    y: Point,
    threshold: f64,
    claims: Vec<PairClaim>,
}

fn cmd_conjecture(
    samples: Option<u64>,
    seed: Option<u64>,
    format: Option<Format>,
    x: Option<&str>,
    y: Option<&str>,
) -> CmdResult {
    if let (Some(x), Some(y)) = (x, y) {
        let x = arg_complex("--x", x)?;
        let y = arg_complex("--y", y)?;
        let claims: Vec<PairClaim> = conjecture_pair(x, y)?
            .into_iter()
            .map(|(claim, slack)| PairClaim {
                claim,
                slack,
                holds: slack.is_none_or(|s| s >= -CONJECTURE_THRESHOLD),
            })
            .collect();
        let all_hold = claims.iter().all(|c| c.holds);
        let report = PairReport {
            x,
            y,
            threshold: CONJECTURE_THRESHOLD,
            claims,
        };
        match format {
            Some(Format::Json) => println!("{}", envelope_json("conjecture-pair", &report)),
            Some(Format::Csv) => {
                println!("claim,x_re,x_im,y_re,y_im,slack,holds");
                for c in &report.claims {
                    println!(
                        "{},{},{},{},{},{},{}",
                        c.claim,
                        fmt_f64(x.re),
                        fmt_f64(x.im),
                        fmt_f64(y.re),
                        fmt_f64(y.im),
                        c.slack.map(fmt_f64).unwrap_or_default(),
                        c.holds
                    );
                }
            }
            None => {
                println!("conjecture claims on the explicit pair ({x}, {y})");
                for c in &report.claims {
                    match c.slack {
                        Some(s) => println!(
                            "  {:16} slack = {}  ({})",
                            c.claim,
                            fmt_f64(s),
                            if c.holds { "holds" } else { "COUNTEREXAMPLE" }
                        ),
                        None => println!(
                            "  {:16} not applicable (the Euclidean radial pair exits the disk)",
                            c.claim
                        ),
                    }
                }
            }
        }
        return Ok(if all_hold {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        });
    }

    // clap guarantees these are present when --x/--y are absent.
    let (samples, seed) = match (samples, seed) {
        (Some(n), Some(s)) => (n, s),
        _ => {
            return Err(Failure::Usage(
                "error: --samples and --seed are required for a scan (omit them only with an explicit --x/--y pair)"
                    .to_owned(),
            ))
        }
    };
    let report = conjecture_scan(samples, seed)?;
    match format {
        Some(Format::Json) => println!("{}", envelope_json("conjecture", &report)),
        Some(Format::Csv) => print!("{}", conjecture_csv(&report)),
        None => {
            println!(
                "conjecture scan: {} samples, seed {}, threshold {:.1e}",
                report.samples, report.seed, report.threshold
            );
            for c in &report.claims {
                println!(
                    "  {:16} evals={:8} min_slack={} counterexamples={}{}",
                    c.id,
                    c.evaluations,
                    c.min_slack.map(fmt_f64).unwrap_or_else(|| "-".into()),
                    c.counterexamples.len(),
                    if c.holds { "" } else { "  <- FINDING" }
                );
                for ce in &c.counterexamples {
                    println!(
                        "    counterexample x={} y={} slack={} ({})",
                        ce.x,
                        ce.y,
                        fmt_f64(ce.slack),
                        ce.detail
                    );
                }
            }
            println!("  runtime = {:.3}s", report.runtime_seconds);
        }
    }
    Ok(if report.all_hold {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
