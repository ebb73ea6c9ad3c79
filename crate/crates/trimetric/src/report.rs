//! Machine-readable report rendering.
//!
//! JSON output uses a fixed float format (`{:.16e}`, 17 significant digits)
//! so that every f64 round-trips exactly and reports for identical inputs
//! are byte-identical across runs and machines. CSV renderers flatten the
//! harness reports into stable column sets for plotting.

use crate::harness::conjecture::ConjectureReport;
use crate::harness::probes::ProbeRow;
use crate::harness::suites::SuiteReport;
use serde::Serialize;
use serde_json::ser::Formatter;
use std::io::{self, Write};

/// Current JSON schema version, emitted as a top-level `"schema"` field.
pub const SCHEMA_VERSION: u32 = 1;

/// serde_json formatter that prints every f64 as `{:.16e}`.
///
/// 17 significant digits are sufficient (and necessary) for f64 round-trips;
/// a fixed width avoids the shortest-representation algorithm so output is
/// stable byte-for-byte.
#[derive(Default)]
pub struct FixedFloats;

impl Formatter for FixedFloats {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Fixed-format float for CSV cells and display, matching the JSON format.
pub fn fmt_f64(value: f64) -> String {
    format!("{value:.16e}")
}

fn fmt_opt(value: Option<f64>) -> String {
    value.map(fmt_f64).unwrap_or_default()
}

/// Serializes any report value as compact JSON with fixed floats.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, FixedFloats);
    value
        .serialize(&mut ser)
        .expect("report types serialize infallibly");
    String::from_utf8(out).expect("serde_json emits UTF-8")
}

/// Wraps a payload under the versioned envelope:
/// `{"schema":1,"kind":<kind>,"report":<payload>}`.
pub fn envelope_json<T: Serialize>(kind: &str, payload: &T) -> String {
    #[derive(Serialize)]
    struct Envelope<'a, T> {
        schema: u32,
        kind: &'a str,
        report: &'a T,
    }
    to_json_string(&Envelope {
        schema: SCHEMA_VERSION,
        kind,
        report: payload,
    })
}

/// CSV for suite reports: one row per check.
///
/// Columns: `suite,domain,samples,seed,check,invariant,tolerance,monitored,
/// evaluations,breaches,min_slack,suite_all_pass,suite_max_ratio`.
pub fn suites_csv(reports: &[SuiteReport]) -> String {
    let mut out = String::from(
        "suite,domain,samples,seed,check,invariant,tolerance,monitored,\
         evaluations,breaches,min_slack,suite_all_pass,suite_max_ratio\n",
    );
    for r in reports {
        for c in &r.checks {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                r.suite,
                r.domain,
                r.samples,
                r.seed,
                c.id,
                c.invariant,
                fmt_f64(c.tolerance),
                c.monitored,
                c.evaluations,
                c.breaches,
                fmt_opt(c.min_slack),
                r.all_pass,
                fmt_opt(r.max_ratio_observed),
            ));
        }
    }
    out
}

/// CSV for probe tables.
///
/// Columns: `probe,eps,x_re,x_im,y_re,y_im,ratio,claimed_limit,abs_error`.
pub fn probe_csv(id: &str, rows: &[ProbeRow]) -> String {
    let mut out = String::from("probe,eps,x_re,x_im,y_re,y_im,ratio,claimed_limit,abs_error\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            id,
            fmt_f64(r.eps),
            fmt_f64(r.x.re),
            fmt_f64(r.x.im),
            fmt_f64(r.y.re),
            fmt_f64(r.y.im),
            fmt_f64(r.ratio),
            fmt_f64(r.claimed_limit),
            fmt_f64(r.abs_error),
        ));
    }
    out
}

/// CSV for a conjecture scan: one row per claim.
///
/// Columns: `claim,evaluations,min_slack,counterexamples,
/// counterexamples_truncated,holds`.
pub fn conjecture_csv(report: &ConjectureReport) -> String {
    let mut out = String::from(
        "claim,evaluations,min_slack,counterexamples,counterexamples_truncated,holds\n",
    );
    for c in &report.claims {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            c.id,
            c.evaluations,
            fmt_opt(c.min_slack),
            c.counterexamples.len(),
            c.counterexamples_truncated,
            c.holds,
        ));
    }
    out
}
