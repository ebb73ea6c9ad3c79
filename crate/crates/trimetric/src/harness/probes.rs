//! Sharpness probes: one-parameter families of pairs driving a metric
//! quotient toward its extremal constant.
//!
//! Each probe fixes a construction `eps -> (x, y)` and a claimed limit for a
//! specific quotient; evaluating it at a decreasing epsilon schedule shows
//! the quotient approaching the constant, which is how the sharpness of the
//! two-sided comparison constants is demonstrated numerically.

use crate::domain::DomainSpec;
use crate::error::{Error, Result};
use crate::metrics::{barrlund, jstar, low, point_pair, s_metric};
use crate::point::Point;
use serde::Serialize;
use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};

/// One probe evaluation.
#[derive(Clone, Debug, Serialize)]
pub struct ProbeRow {
    pub eps: f64,
    pub x: Point,
    pub y: Point,
    pub ratio: f64,
    pub claimed_limit: f64,
    pub abs_error: f64,
}

/// The available probe ids, with the quotient each one drives.
pub const PROBE_IDS: [(&str, &str); 9] = [
    ("s-over-b-low", "s/b_2 -> 1/sqrt(2) at centered short pairs"),
    ("s-over-b-high", "s/b_2 -> 1 at radial near-boundary pairs"),
    (
        "jstar-over-b-half",
        "j*/b_2 -> 1/2 at conjugate near-boundary pairs",
    ),
    ("jstar-over-b-one", "j*/b_2 -> 1 on a full diameter"),
    (
        "p-over-b-max",
        "p/b_2 = (sqrt(10)+sqrt(2))/4 at the golden-ratio pair",
    ),
    (
        "s-over-low-cap",
        "s/low -> (1+r)/(2r) at merging radial pairs",
    ),
    (
        "low-over-jstar-sqrt2",
        "low/j* -> sqrt(2) at same-radius near-boundary pairs",
    ),
    ("low-over-p-one", "low/p -> 1 on widening diameters"),
    ("low-over-b-one", "low/b_2 -> 1 on widening diameters"),
];

/// Evaluates the named probe on the given epsilon schedule.
///
/// Every epsilon must lie strictly in (0, 1). Unknown ids are rejected with
/// [`Error::UnknownProbe`].
pub fn sharpness_probe(id: &str, eps: &[f64]) -> Result<Vec<ProbeRow>> {
    if !PROBE_IDS.iter().any(|(known, _)| *known == id) {
        return Err(Error::UnknownProbe { id: id.to_owned() });
    }
    if eps.iter().any(|&e| !e.is_finite() || e <= 0.0 || e >= 1.0) {
        return Err(Error::PreconditionFailed {
            reason: "probe epsilon values must lie strictly between 0 and 1",
        });
    }
    eps.iter().map(|&e| probe_row(id, e)).collect()
}

const DISK: DomainSpec = DomainSpec::UnitDisk;
const EXPECT: &str = "probe pair lies inside the domain by construction";

fn b2(x: Point, y: Point) -> f64 {
    barrlund(&DISK, 2.0, x, y).expect(EXPECT).value
}

fn probe_row(id: &str, eps: f64) -> Result<ProbeRow> {
    let (x, y, ratio, claimed) = match id {
        "s-over-b-low" => {
            let x = Point::ZERO;
            let y = Point::new(eps, 0.0);
            let s = s_metric(&DISK, x, y).expect(EXPECT).value;
            (x, y, s / b2(x, y), FRAC_1_SQRT_2)
        }
        "s-over-b-high" => {
            let x = Point::ZERO;
            let y = Point::new(1.0 - eps, 0.0);
            let s = s_metric(&DISK, x, y).expect(EXPECT).value;
            (x, y, s / b2(x, y), 1.0)
        }
        "jstar-over-b-half" => {
            let x = Point::polar(1.0 - eps, eps);
            let y = x.conj();
            let j = jstar(&DISK, x, y).expect(EXPECT).value;
            (x, y, j / b2(x, y), 0.5)
        }
        "jstar-over-b-one" => {
            let x = Point::new(-(1.0 - eps), 0.0);
            let y = Point::new(1.0 - eps, 0.0);
            let j = jstar(&DISK, x, y).expect(EXPECT).value;
            (x, y, j / b2(x, y), 1.0)
        }
        "p-over-b-max" => {
            // The extremal pair itself: +/- (sqrt(5)-1)/2 on a diameter.
            let g = (5f64.sqrt() - 1.0) / 2.0;
            let x = Point::new(g, 0.0);
            let y = Point::new(-g, 0.0);
            let p = point_pair(&DISK, x, y).expect(EXPECT).value;
            (x, y, p / b2(x, y), (10f64.sqrt() + SQRT_2) / 4.0)
        }
        "s-over-low-cap" => {
            let x = Point::new(0.5, 0.0);
            let y = Point::new(0.5 + 0.4 * eps, 0.0);
            let s = s_metric(&DISK, x, y).expect(EXPECT).value;
            let lo = low(x, y).expect(EXPECT).value;
            let r = y.abs();
            (x, y, (s / lo), (1.0 + r) / (2.0 * r))
        }
        "low-over-jstar-sqrt2" => {
            let k = 1.0 - eps;
            let x = Point::new(k, 0.0);
            let y = Point::polar(k, 2.0 * (1.0 - k));
            let lo = low(x, y).expect(EXPECT).value;
            let j = jstar(&DISK, x, y).expect(EXPECT).value;
            (x, y, lo / j, SQRT_2)
        }
        "low-over-p-one" => {
            let k = 1.0 - eps;
            let x = Point::new(k, 0.0);
            let y = Point::new(-k, 0.0);
            let lo = low(x, y).expect(EXPECT).value;
            let p = point_pair(&DISK, x, y).expect(EXPECT).value;
            (x, y, lo / p, 1.0)
        }
        "low-over-b-one" => {
            let k = 1.0 - eps;
            let x = Point::new(k, 0.0);
            let y = Point::new(-k, 0.0);
            let lo = low(x, y).expect(EXPECT).value;
            (x, y, lo / b2(x, y), 1.0)
        }
        _ => unreachable!("id validated above"),
    };
    Ok(ProbeRow {
        eps,
        x,
        y,
        ratio,
        claimed_limit: claimed,
        abs_error: (ratio - claimed).abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperbolic::quarter_param;

    #[test]
    fn unknown_probe_is_rejected() {
        let err = sharpness_probe("no-such-probe", &[0.1]).unwrap_err();
        assert_eq!(
            err,
            Error::UnknownProbe {
                id: "no-such-probe".to_owned()
            }
        );
    }

    #[test]
    fn epsilon_outside_unit_interval_is_rejected() {
        for bad in [0.0, 1.0, -0.25, f64::NAN, f64::INFINITY] {
            let err = sharpness_probe("s-over-b-low", &[0.1, bad]).unwrap_err();
            assert!(matches!(err, Error::PreconditionFailed { .. }), "eps {bad}");
        }
    }

    #[test]
    fn every_probe_converges_to_its_claimed_limit() {
        let schedule = [1e-2, 1e-3, 1e-4, 1e-5, 1e-6];
        for (id, _) in PROBE_IDS {
            let rows = sharpness_probe(id, &schedule).unwrap();
            assert_eq!(rows.len(), schedule.len());
            let last = rows.last().unwrap();
            assert!(
                last.abs_error < 1e-4,
                "{id} at eps 1e-6: ratio {} vs claimed {}",
                last.ratio,
                last.claimed_limit
            );
            // The schedule is decreasing, so the error must not blow up at
            // the sharp end; earlier rows may be visibly off the limit.
            assert!(last.abs_error <= rows[0].abs_error + 1e-12, "{id}");
        }
    }

    #[test]
    fn golden_pair_attains_the_constant_exactly() {
        let rows = sharpness_probe("p-over-b-max", &[0.5, 1e-6]).unwrap();
        for row in rows {
            assert!(row.abs_error < 1e-14);
        }
    }

    #[test]
    fn quarter_chain_holds_on_probe_pairs() {
        // Probe constructions are valid metric pairs: spot-check the chain
        // ordering on one near-degenerate row from each family.
        for (id, _) in PROBE_IDS {
            let row = &sharpness_probe(id, &[1e-5]).unwrap()[0];
            let q = quarter_param(row.x, row.y).unwrap();
            let s = s_metric(&DISK, row.x, row.y).unwrap().value;
            assert!(s + 1e-12 >= q, "{id}");
        }
    }
}
